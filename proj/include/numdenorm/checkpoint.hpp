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

#ifndef NUMDENORM_CHECKPOINT_HPP
#define NUMDENORM_CHECKPOINT_HPP

#include <cstdint>
#include <string>

#include "numdenorm/graph.hpp"

// Little-endian binary checkpoint:
//   magic "NDCP" | u32 version | u32 tensor count
//   per tensor: u32 name_len | name | u8 dtype (0=f32, 1=f64) | u32 rank |
//               i64 dims[rank] | raw values
//   trailing u32 CRC32 over everything before it
namespace numdenorm::nn {

inline constexpr std::uint32_t kCheckpointVersion = 1;

std::uint32_t crc32(const unsigned char* data, std::size_t n, std::uint32_t seed = 0);

template <typename T>
void save_checkpoint(const ParameterStore<T>& store, const std::string& path);

// Throws VersionMismatch / CorruptFile; dtype must match T.
template <typename T>
ParameterStore<T> load_checkpoint(const std::string& path);

}  // namespace numdenorm::nn

#endif  // NUMDENORM_CHECKPOINT_HPP
