// Copyright 2026 The contragen Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Rule-based contradiction hypotheses over parsed premises: antonym
// substitution, root verb phrase negation and numeric perturbation.
//
// Every emitted pair is a single-span edit of the premise text. Provenance
// records the rule, the changed token ids, the byte offset of the edit and
// the original/replacement spans, so that
//   premise.erase(offset, original.size()) ==
//   hypothesis.erase(offset, replacement.size())
// holds for every pair.

#ifndef CONTRAGEN_RULES_H_
#define CONTRAGEN_RULES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "contragen/conllu.h"
#include "contragen/rng.h"
#include "contragen/sample.h"
#include "contragen/wordnet.h"

namespace contragen::rules {

inline constexpr std::string_view kAntonymy = "antonymy";
inline constexpr std::string_view kNegation = "negation";
inline constexpr std::string_view kNumerical = "numerical";

enum class NumericPolicy {
  kFixedIncrement,  // n -> n + 1
  kSeededRandom,    // n -> n +/- k, k in 1..5, never <= 0
};

struct RuleConfig {
  int max_hypotheses_per_premise = 3;
  NumericPolicy numeric_policy = NumericPolicy::kFixedIncrement;
  // Repair a/an agreement in front of a substituted word.
  bool article_fixup = false;
  // When the disambiguated sense has no antonym, try the remaining senses
  // in index order. Pairs found this way carry sense_fallback = true.
  bool antonym_sense_fallback = false;
  wordnet::WsdStrategy wsd;
  std::uint64_t rng_seed = 0;

  // Throws std::invalid_argument.
  void validate() const;
};

struct SkipRecord {
  std::string sent_id;
  std::string rule;
  std::string reason;
  int token_id = 0;  // 0 when the skip concerns the whole sentence
};

void to_json(nlohmann::json& j, const SkipRecord& r);

struct RuleOutput {
  std::vector<SamplePair> pairs;
  std::vector<SkipRecord> skips;
};

// ADJ tokens and NOUN tokens attached as obj, nsubj or root are replaced by
// the first antonym of their disambiguated sense, one pair per token, in
// token order, at most max_hypotheses_per_premise pairs.
RuleOutput gen_antonymy(const conllu::Sentence& s, const wordnet::Lexicon& lex,
                        const RuleConfig& cfg);

// Negates the root verb chain: "not" after the first auxiliary/copula, or
// do-support (does/do/did not + lemma) for a finite lexical verb. At most
// one pair.
RuleOutput gen_negation(const conllu::Sentence& s, const RuleConfig& cfg);

// Perturbs every nummod numeral, keeping its style (digits or words) and
// capitalization.
RuleOutput gen_numeric(const conllu::Sentence& s, const RuleConfig& cfg);

// The seeded generator used for one sentence: independent of every other
// sentence, so premises can be processed in any order or in parallel.
Rng sentence_rng(const conllu::Sentence& s, std::uint64_t seed);

std::int64_t perturb_number(std::int64_t value, NumericPolicy policy, Rng& rng);

}  // namespace contragen::rules

#endif  // CONTRAGEN_RULES_H_
