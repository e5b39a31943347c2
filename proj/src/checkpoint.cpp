// Copyright 2026 The numdenorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "numdenorm/checkpoint.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <vector>

#include "numdenorm/errors.hpp"

namespace numdenorm::nn {

namespace {

constexpr char kMagic[4] = {'N', 'D', 'C', 'P'};

std::array<std::uint32_t, 256> make_crc_table() {
  std::array<std::uint32_t, 256> table{};
  for (std::uint32_t i = 0; i < 256; ++i) {
    std::uint32_t c = i;
    for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xedb88320u ^ (c >> 1) : c >> 1;
    table[i] = c;
  }
  return table;
}

template <typename T>
constexpr std::uint8_t dtype_code() {
  return sizeof(T) == 4 ? 0 : 1;
}

void put_bytes(std::vector<unsigned char>& buf, const void* p, std::size_t n) {
  const auto* b = static_cast<const unsigned char*>(p);
  buf.insert(buf.end(), b, b + n);
}

template <typename V>
void put_pod(std::vector<unsigned char>& buf, V v) {
  put_bytes(buf, &v, sizeof(V));
}

class Reader {
 public:
  explicit Reader(std::vector<unsigned char> data) : data_(std::move(data)) {}

  void read(void* out, std::size_t n) {
    if (pos_ + n > data_.size()) throw CorruptFile("checkpoint truncated");
    std::memcpy(out, data_.data() + pos_, n);
    pos_ += n;
  }
  template <typename V>
  V pod() {
    V v;
    read(&v, sizeof(V));
    return v;
  }
  std::size_t pos() const { return pos_; }
  const std::vector<unsigned char>& data() const { return data_; }

 private:
  std::vector<unsigned char> data_;
  std::size_t pos_ = 0;
};

}  // namespace

std::uint32_t crc32(const unsigned char* data, std::size_t n, std::uint32_t seed) {
  static const auto table = make_crc_table();
  std::uint32_t c = seed ^ 0xffffffffu;
  for (std::size_t i = 0; i < n; ++i) c = table[(c ^ data[i]) & 0xff] ^ (c >> 8);
  return c ^ 0xffffffffu;
}

template <typename T>
void save_checkpoint(const ParameterStore<T>& store, const std::string& path) {
  std::vector<unsigned char> buf;
  put_bytes(buf, kMagic, 4);
  put_pod<std::uint32_t>(buf, kCheckpointVersion);
  put_pod<std::uint32_t>(buf, static_cast<std::uint32_t>(store.entries().size()));
  for (const auto& e : store.entries()) {
    put_pod<std::uint32_t>(buf, static_cast<std::uint32_t>(e.name.size()));
    put_bytes(buf, e.name.data(), e.name.size());
    put_pod<std::uint8_t>(buf, dtype_code<T>());
    put_pod<std::uint32_t>(buf, static_cast<std::uint32_t>(e.value.shape.size()));
    for (auto d : e.value.shape) put_pod<std::int64_t>(buf, d);
    put_bytes(buf, e.value.data.data(), e.value.data.size() * sizeof(T));
  }
  put_pod<std::uint32_t>(buf, crc32(buf.data(), buf.size()));

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for write: " + path);
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("write failed: " + path);
}

template <typename T>
ParameterStore<T> load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (data.size() < 12 + 4) throw CorruptFile("checkpoint too small");

  const std::size_t body = data.size() - 4;
  std::uint32_t stored_crc;
  std::memcpy(&stored_crc, data.data() + body, 4);
  if (crc32(data.data(), body) != stored_crc) throw CorruptFile("checkpoint CRC mismatch");

  data.resize(body);
  Reader r(std::move(data));
  char magic[4];
  r.read(magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0) throw CorruptFile("bad checkpoint magic");
  const auto version = r.pod<std::uint32_t>();
  if (version != kCheckpointVersion)
    throw VersionMismatch("checkpoint version " + std::to_string(version) + ", expected " +
                          std::to_string(kCheckpointVersion));
  const auto count = r.pod<std::uint32_t>();

  ParameterStore<T> store;
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto name_len = r.pod<std::uint32_t>();
    std::string name(name_len, '\0');
    r.read(name.data(), name_len);
    const auto dtype = r.pod<std::uint8_t>();
    if (dtype != dtype_code<T>()) throw CorruptFile("checkpoint dtype mismatch for " + name);
    const auto rank = r.pod<std::uint32_t>();
    std::vector<std::int64_t> shape(rank);
    for (auto& d : shape) d = r.pod<std::int64_t>();
    Tensor<T> t(shape);
    r.read(t.data.data(), t.data.size() * sizeof(T));
    store.add(name, std::move(t));
  }
  return store;
}

template void save_checkpoint<float>(const ParameterStore<float>&, const std::string&);
template void save_checkpoint<double>(const ParameterStore<double>&, const std::string&);
template ParameterStore<float> load_checkpoint<float>(const std::string&);
template ParameterStore<double> load_checkpoint<double>(const std::string&);

}  // namespace numdenorm::nn
