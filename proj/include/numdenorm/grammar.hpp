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

#ifndef NUMDENORM_GRAMMAR_HPP
#define NUMDENORM_GRAMMAR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numdenorm/numwords.hpp"

namespace numdenorm::grammar {

enum class Category { DAY, PERCENT, POSTALCODE, TIME, YEAR, CARDINAL, CURRENCY };

inline constexpr std::size_t kCategoryCount = 7;

std::string to_string(Category c);
Category category_from_string(std::string_view name);

// Spoken-domain reading of one written value, with its sampling mass.
struct WeightedCandidate {
  Tokens tokens;
  double weight = 0.0;
};

// Half-open token span detected as numeric, with the written form it parses to.
struct NumericSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  Category category = Category::CARDINAL;
  std::string written;
};

// Field matchers shared by both sides of a rule.
enum class FieldKind {
  kFixedDigits,  // d<K>[lo,hi]: exactly K digits, value in range
  kInt,          // int[lo,hi]: no leading zeros
  kDigitSeq,     // dseq[min,max]: raw digit string, length in range
  kOrdinal,      // ord[lo,hi]: digits + correct ordinal suffix
};

struct FieldSpec {
  std::string name;
  FieldKind kind = FieldKind::kInt;
  int digits = 0;  // K for kFixedDigits
  long long lo = 0, hi = 0;
  int min_len = 0, max_len = 0;  // for kDigitSeq
};

struct PatternPiece {
  bool is_field = false;
  std::string literal;
  FieldSpec field;
};

enum class Reader { kCard, kOrd, kPair, kDigit, kDigits, kDdigits };

struct SpokenItem {
  bool is_field = false;
  std::string literal;
  std::string field_name;
  Reader reader = Reader::kCard;
};

struct VerbalizationRule {
  Category category = Category::CARDINAL;
  double weight = 1.0;
  bool tail_only = false;
  std::vector<PatternPiece> pattern;
  std::vector<SpokenItem> spoken;
  std::string pattern_text;
  std::string spoken_text;
};

// Rule-table grammar, bidirectional: written -> weighted spoken candidates,
// and spoken token scan -> written spans. Immutable after construction; all
// queries are pure and safe to run concurrently.
class Grammar {
 public:
  static Grammar from_string(std::string_view text);
  static Grammar from_file(const std::string& path);
  // The rule table shipped with the toolkit (same content as data/rules.tsv).
  static Grammar default_grammar();

  const std::vector<VerbalizationRule>& rules() const { return rules_; }

  // Copy of this grammar with tail rules removed (rule-coverage ablations).
  Grammar without_tail_rules() const;

  // Categories are tried in this order when several match at one position.
  const std::vector<Category>& priority() const { return priority_; }
  void set_priority(std::vector<Category> order);

  // All spoken readings of `written`, weights normalized to sum 1.
  // tail_mode additionally enables tail_only rules.
  std::vector<WeightedCandidate> verbalize(const std::string& written, Category category,
                                           bool tail_mode) const;

  // One reading drawn proportionally to weight; deterministic given seed.
  WeightedCandidate sample_verbalization(const std::string& written, Category category,
                                         bool tail_mode, std::uint64_t seed) const;

  // Greedy left-to-right scan. At each position the highest-priority matching
  // category wins and takes its longest match; a new span may not begin on
  // the token immediately following a span.
  std::vector<NumericSpan> detect_numeric_spans(const Tokens& tokens) const;

  // Replaces detected spans with written forms, copies everything else.
  // Total on any token list; unmatched numeric-looking regions pass through.
  Tokens denorm_tokens(const Tokens& tokens) const;
  std::string denorm(const std::string& text) const;

  std::string to_tsv() const;

 private:
  std::vector<VerbalizationRule> rules_;
  std::vector<Category> priority_;

  // Longest match of `rule` starting at tokens[pos]; empty when no match.
  std::optional<std::pair<std::size_t, std::string>> match_rule_at(
      const VerbalizationRule& rule, const Tokens& tokens, std::size_t pos) const;
};

// Embedded copy of the default rule file.
extern const char* const kDefaultRulesTsv;

}  // namespace numdenorm::grammar

#endif  // NUMDENORM_GRAMMAR_HPP
