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

#include "numdenorm/numwords.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "numdenorm/errors.hpp"

namespace numdenorm::grammar {

namespace {

const char* kUnits[10] = {"zero", "one", "two",   "three", "four",
                          "five", "six", "seven", "eight", "nine"};
const char* kTeens[10] = {"ten",     "eleven",  "twelve",    "thirteen", "fourteen",
                          "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
const char* kTens[10] = {"",      "",      "twenty",  "thirty", "forty",
                         "fifty", "sixty", "seventy", "eighty", "ninety"};
const char* kOrdUnits[10] = {"",      "first", "second",  "third",  "fourth",
                             "fifth", "sixth", "seventh", "eighth", "ninth"};
const char* kOrdTeens[10] = {"tenth",     "eleventh",  "twelfth",     "thirteenth", "fourteenth",
                             "fifteenth", "sixteenth", "seventeenth", "eighteenth", "nineteenth"};
const char* kOrdTens[10] = {"",         "",         "twentieth", "thirtieth", "fortieth",
                            "fiftieth", "sixtieth", "seventieth", "eightieth", "ninetieth"};

const std::map<std::string, int>& unit_map() {
  static const std::map<std::string, int> m = [] {
    std::map<std::string, int> t;
    for (int i = 0; i <= 9; ++i) t[kUnits[i]] = i;
    return t;
  }();
  return m;
}

const std::map<std::string, int>& teen_map() {
  static const std::map<std::string, int> m = [] {
    std::map<std::string, int> t;
    for (int i = 0; i <= 9; ++i) t[kTeens[i]] = 10 + i;
    return t;
  }();
  return m;
}

const std::map<std::string, int>& tens_map() {
  static const std::map<std::string, int> m = [] {
    std::map<std::string, int> t;
    for (int i = 2; i <= 9; ++i) t[kTens[i]] = 10 * i;
    return t;
  }();
  return m;
}

const std::string& tok(const Tokens& tokens, std::size_t pos) {
  static const std::string empty;
  return pos < tokens.size() ? tokens[pos] : empty;
}

void push_unique(std::vector<NumParse>& out, std::size_t len, long long value) {
  for (const auto& p : out)
    if (p.len == len && p.value == value) return;
  out.push_back({len, value});
}

// tens-or-unit part, 1..99: "five" | "fifteen" | "forty" | "forty six"
std::vector<NumParse> parse_two_digit(const Tokens& tokens, std::size_t pos) {
  std::vector<NumParse> out;
  const std::string& w = tok(tokens, pos);
  if (w.empty()) return out;
  if (auto it = teen_map().find(w); it != teen_map().end()) push_unique(out, 1, it->second);
  if (auto it = tens_map().find(w); it != tens_map().end()) {
    const std::string& nxt = tok(tokens, pos + 1);
    if (auto ut = unit_map().find(nxt); ut != unit_map().end() && ut->second >= 1)
      push_unique(out, 2, it->second + ut->second);
    push_unique(out, 1, it->second);
  }
  if (auto it = unit_map().find(w); it != unit_map().end() && it->second >= 1)
    push_unique(out, 1, it->second);
  return out;
}

// 1..999: [unit "hundred"] [two-digit part]
std::vector<NumParse> parse_small(const Tokens& tokens, std::size_t pos) {
  std::vector<NumParse> out;
  const std::string& w = tok(tokens, pos);
  if (auto it = unit_map().find(w);
      it != unit_map().end() && it->second >= 1 && tok(tokens, pos + 1) == "hundred") {
    const long long base = it->second * 100;
    for (const auto& rest : parse_two_digit(tokens, pos + 2))
      push_unique(out, 2 + rest.len, base + rest.value);
    push_unique(out, 2, base);
  }
  for (const auto& p : parse_two_digit(tokens, pos)) push_unique(out, p.len, p.value);
  return out;
}

void sort_longest_first(std::vector<NumParse>& v) {
  std::sort(v.begin(), v.end(), [](const NumParse& a, const NumParse& b) {
    if (a.len != b.len) return a.len > b.len;
    return a.value < b.value;
  });
}

}  // namespace

Tokens cardinal_words(long long v) {
  if (v < 0 || v > 999999) throw Error("cardinal_words: out of range");
  if (v == 0) return {"zero"};
  Tokens out;
  auto emit_small = [&out](long long s) {
    if (s >= 100) {
      out.emplace_back(kUnits[s / 100]);
      out.emplace_back("hundred");
      s %= 100;
    }
    if (s >= 20) {
      out.emplace_back(kTens[s / 10]);
      s %= 10;
    } else if (s >= 10) {
      out.emplace_back(kTeens[s - 10]);
      s = 0;
    }
    if (s >= 1) out.emplace_back(kUnits[s]);
  };
  if (v >= 1000) {
    emit_small(v / 1000);
    out.emplace_back("thousand");
    v %= 1000;
  }
  if (v > 0) emit_small(v);
  return out;
}

Tokens ordinal_words(long long v) {
  if (v < 1 || v > 99) throw Error("ordinal_words: out of range");
  if (v < 10) return {kOrdUnits[v]};
  if (v < 20) return {kOrdTeens[v - 10]};
  if (v % 10 == 0) return {kOrdTens[v / 10]};
  return {kTens[v / 10], kOrdUnits[v % 10]};
}

Tokens pair_words(long long v) {
  if (v < 10 || v > 99) throw Error("pair_words: out of range");
  if (v < 20) return {kTeens[v - 10]};
  if (v % 10 == 0) return {kTens[v / 10]};
  return {kTens[v / 10], kUnits[v % 10]};
}

std::string digit_word(int d) {
  if (d < 0 || d > 9) throw Error("digit_word: out of range");
  return kUnits[d];
}

std::vector<NumParse> parse_cardinal(const Tokens& tokens, std::size_t pos) {
  std::vector<NumParse> out;
  if (tok(tokens, pos) == "zero") push_unique(out, 1, 0);
  for (const auto& s : parse_small(tokens, pos)) {
    if (tok(tokens, pos + s.len) == "thousand") {
      const std::size_t after = pos + s.len + 1;
      for (const auto& s2 : parse_small(tokens, after))
        push_unique(out, s.len + 1 + s2.len, s.value * 1000 + s2.value);
      push_unique(out, s.len + 1, s.value * 1000);
    }
    push_unique(out, s.len, s.value);
  }
  sort_longest_first(out);
  return out;
}

std::vector<NumParse> parse_ordinal(const Tokens& tokens, std::size_t pos) {
  std::vector<NumParse> out;
  const std::string& w = tok(tokens, pos);
  for (int i = 1; i <= 9; ++i)
    if (w == kOrdUnits[i]) push_unique(out, 1, i);
  for (int i = 0; i <= 9; ++i)
    if (w == kOrdTeens[i]) push_unique(out, 1, 10 + i);
  for (int i = 2; i <= 9; ++i)
    if (w == kOrdTens[i]) push_unique(out, 1, 10 * i);
  if (auto it = tens_map().find(w); it != tens_map().end()) {
    const std::string& nxt = tok(tokens, pos + 1);
    for (int i = 1; i <= 9; ++i)
      if (nxt == kOrdUnits[i]) push_unique(out, 2, it->second + i);
  }
  sort_longest_first(out);
  return out;
}

std::vector<NumParse> parse_pair(const Tokens& tokens, std::size_t pos) {
  auto out = parse_two_digit(tokens, pos);
  std::erase_if(out, [](const NumParse& p) { return p.value < 10; });
  sort_longest_first(out);
  return out;
}

std::vector<NumParse> parse_digit(const Tokens& tokens, std::size_t pos, bool allow_oh) {
  std::vector<NumParse> out;
  const std::string& w = tok(tokens, pos);
  if (auto it = unit_map().find(w); it != unit_map().end()) out.push_back({1, it->second});
  if (allow_oh && w == "oh") out.push_back({1, 0});
  return out;
}

bool is_digit_run_token(const std::string& token) {
  return unit_map().count(token) || token == "oh" || token == "double" || token == "triple";
}

bool is_number_word(const std::string& token) {
  static const std::set<std::string> extra = {"hundred", "thousand", "oh",
                                              "double",  "triple",   "point"};
  if (unit_map().count(token) || teen_map().count(token) || tens_map().count(token)) return true;
  if (extra.count(token)) return true;
  for (int i = 1; i <= 9; ++i)
    if (token == kOrdUnits[i]) return true;
  for (int i = 0; i <= 9; ++i)
    if (token == kOrdTeens[i]) return true;
  for (int i = 2; i <= 9; ++i)
    if (token == kOrdTens[i]) return true;
  return false;
}

}  // namespace numdenorm::grammar
