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

#ifndef NUMDENORM_UTIL_HPP
#define NUMDENORM_UTIL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace numdenorm {

inline constexpr std::string_view kToolVersion = "0.1.0";

std::vector<std::string> split_ws(std::string_view text);
std::string join(const std::vector<std::string>& tokens, std::string_view sep = " ");
std::string lowercase(std::string_view text);

// Collapses runs of whitespace to single spaces and trims the ends.
std::string normalize_ws(std::string_view text);

bool all_digits(std::string_view s);
bool contains_digit(std::string_view s);

// FNV-1a, used for config hashes and per-item seed derivation.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t value);

// Derives an independent RNG stream for item `index` of a seeded run.
inline std::mt19937_64 derived_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{seed, index, std::uint64_t{0x9e3779b97f4a7c15ULL}};
  return std::mt19937_64(seq);
}

}  // namespace numdenorm

#endif  // NUMDENORM_UTIL_HPP
