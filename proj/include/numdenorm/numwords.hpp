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

#ifndef NUMDENORM_NUMWORDS_HPP
#define NUMDENORM_NUMWORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

// Bidirectional English number-word primitives. Each direction is strict:
// to_*() emits the canonical reading and the parsers accept only well-formed
// readings, returning every valid prefix so rule matching can backtrack.

namespace numdenorm::grammar {

using Tokens = std::vector<std::string>;

// A parse of a token prefix into a numeric value.
struct NumParse {
  std::size_t len = 0;      // tokens consumed
  long long value = 0;
};

// Canonical cardinal, 0..999999 ("sixty thousand three").
Tokens cardinal_words(long long v);
// Ordinal, 1..99 ("thirty first").
Tokens ordinal_words(long long v);
// Two-digit pair reading, 10..99 ("forty six").
Tokens pair_words(long long v);
// Single digit word, "zero".."nine".
std::string digit_word(int d);

// All valid prefix parses at `pos`, longest first.
std::vector<NumParse> parse_cardinal(const Tokens& tokens, std::size_t pos);
std::vector<NumParse> parse_ordinal(const Tokens& tokens, std::size_t pos);
std::vector<NumParse> parse_pair(const Tokens& tokens, std::size_t pos);
// Single digit word; "oh" parses as 0 when allow_oh.
std::vector<NumParse> parse_digit(const Tokens& tokens, std::size_t pos, bool allow_oh);

// True for any token the digit-sequence readers could consume ("four",
// "oh", "double", ...). Used for the maximal-run check: a digit-sequence
// match may not stop immediately before such a token.
bool is_digit_run_token(const std::string& token);

// True for tokens that may appear inside any numeric reading at all.
bool is_number_word(const std::string& token);

}  // namespace numdenorm::grammar

#endif  // NUMDENORM_NUMWORDS_HPP
