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

#include "contragen/rules.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "contragen/numerals.h"
#include "contragen/text.h"

namespace contragen::rules {

namespace {

using conllu::Sentence;
using conllu::Token;

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// The premise text with the byte span of every token. The "# text ="
// comment is used when the token forms can be located in it in order,
// separated only by whitespace; otherwise the detokenized sentence.
struct Surface {
  std::string text;
  std::vector<Span> spans;  // index = token id - 1
};

std::optional<std::vector<Span>> locate(std::string_view text, const Sentence& s) {
  std::vector<Span> spans;
  std::size_t cursor = 0;
  for (const Token& t : s.tokens) {
    while (cursor < text.size() && (text[cursor] == ' ' || text[cursor] == '\t')) ++cursor;
    if (text.substr(cursor, t.form.size()) != t.form) return std::nullopt;
    spans.push_back({cursor, cursor + t.form.size()});
    cursor += t.form.size();
  }
  if (!text::trim(text.substr(cursor)).empty()) return std::nullopt;
  return spans;
}

Surface surface_of(const Sentence& s) {
  if (s.source_text) {
    if (auto spans = locate(*s.source_text, s)) return {*s.source_text, std::move(*spans)};
  }
  Surface out{conllu::detokenize(s), {}};
  out.spans = *locate(out.text, s);
  return out;
}

class PairBuilder {
 public:
  PairBuilder(const Sentence& s, std::string_view rule)
      : sentence_(s), surface_(surface_of(s)), rule_(rule) {}

  const Surface& surface() const { return surface_; }
  const Span& span(int token_id) const {
    return surface_.spans.at(static_cast<std::size_t>(token_id - 1));
  }

  // Replaces [begin, end) by `replacement`. Returns nullopt if nothing
  // changes.
  std::optional<SamplePair> edit(Span range, std::string replacement, std::vector<int> token_ids,
                                 nlohmann::json extra = nlohmann::json::object()) const {
    const std::string& premise = surface_.text;
    std::string original = premise.substr(range.begin, range.end - range.begin);
    std::string hypothesis = premise.substr(0, range.begin) + replacement + premise.substr(range.end);
    if (hypothesis == premise) return std::nullopt;
    SamplePair p;
    p.premise = premise;
    p.hypothesis = std::move(hypothesis);
    p.label = Label::kContradiction;
    p.type = std::string(rule_);
    p.method = Method::kMethod1;
    p.provenance = {{"rule", rule_},
                    {"sent_id", sentence_.label()},
                    {"token_ids", token_ids},
                    {"offset", range.begin},
                    {"original", original},
                    {"replacement", replacement}};
    for (auto& [k, v] : extra.items()) p.provenance[k] = v;
    return p;
  }

  SkipRecord skip(std::string reason, int token_id = 0) const {
    return {sentence_.label(), std::string(rule_), std::move(reason), token_id};
  }

 private:
  const Sentence& sentence_;
  Surface surface_;
  std::string_view rule_;
};

bool starts_with_vowel_sound(std::string_view word) {
  if (word.empty()) return false;
  char c = static_cast<char>(text::to_lower(word.substr(0, 1))[0]);
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Widens a substitution at `token_id` to cover a preceding a/an article
// whose form no longer agrees with the replacement.
void fix_article(const Sentence& s, const PairBuilder& b, int token_id, Span& range,
                 std::string& replacement, std::vector<int>& ids) {
  if (token_id < 2) return;
  const Token& prev = s.token(token_id - 1);
  const std::string article = text::to_lower(prev.form);
  if (prev.upos != "DET" || (article != "a" && article != "an")) return;
  const std::string wanted = starts_with_vowel_sound(replacement) ? "an" : "a";
  if (wanted == article) return;
  const Span& ps = b.span(prev.id);
  const std::string gap = b.surface().text.substr(ps.end, range.begin - ps.end);
  replacement = text::match_case(prev.form, wanted) + gap + replacement;
  range.begin = ps.begin;
  ids.insert(ids.begin(), prev.id);
}

bool eligible_for_antonymy(const Token& t) {
  if (t.upos == "ADJ") return true;
  if (t.upos != "NOUN") return false;
  std::string_view rel = conllu::base_relation(t.deprel);
  return rel == "obj" || rel == "nsubj" || rel == "root";
}

bool is_finite(const Token& t) {
  if (auto vf = t.feats.get("VerbForm")) return *vf == "Fin";
  return t.feats.get("Tense").has_value() || t.feats.get("Mood").has_value();
}

bool is_negator(const Token& t) {
  const std::string l = text::to_lower(wordnet::token_lemma(t));
  return l == "not" || l == "n't" || l == "never" || t.feats.has("Polarity", "Neg");
}

// The do-support auxiliary for a finite lexical verb, or empty.
std::string do_form(const Token& verb) {
  const auto& f = verb.feats;
  if (f.has("Mood", "Imp")) return "do";
  if (f.has("Tense", "Past")) return "did";
  if (f.has("Tense", "Pres")) {
    auto person = f.get("Person");
    if (person && *person != "3") return "do";
    return f.has("Number", "Sing") ? "does" : "do";
  }
  return {};
}

void check_cap(const RuleConfig& cfg) { cfg.validate(); }

}  // namespace

void RuleConfig::validate() const {
  if (max_hypotheses_per_premise < 1) {
    throw std::invalid_argument("max_hypotheses_per_premise must be positive");
  }
}

void to_json(nlohmann::json& j, const SkipRecord& r) {
  j = nlohmann::json{{"sent_id", r.sent_id}, {"rule", r.rule}, {"reason", r.reason}};
  if (r.token_id != 0) j["token_id"] = r.token_id;
}

Rng sentence_rng(const conllu::Sentence& s, std::uint64_t seed) {
  return Rng(mix_seed(seed, stable_hash(s.label())));
}

std::int64_t perturb_number(std::int64_t value, NumericPolicy policy, Rng& rng) {
  if (policy == NumericPolicy::kFixedIncrement) return value + 1;
  const std::int64_t magnitude = rng.between(1, 5);
  const bool up = rng.coin();
  const std::int64_t down = value - magnitude;
  return (up || down <= 0) ? value + magnitude : down;
}

RuleOutput gen_antonymy(const Sentence& s, const wordnet::Lexicon& lex, const RuleConfig& cfg) {
  check_cap(cfg);
  RuleOutput out;
  PairBuilder b(s, kAntonymy);
  for (const Token& t : s.tokens) {
    if (static_cast<int>(out.pairs.size()) >= cfg.max_hypotheses_per_premise) break;
    if (!eligible_for_antonymy(t)) continue;
    const wordnet::Synset* sense = wordnet::disambiguate(s, t.id, lex, cfg.wsd);
    if (sense == nullptr) {
      out.skips.push_back(b.skip("not-in-lexicon", t.id));
      continue;
    }
    const std::string lemma = wordnet::token_lemma(t);
    const wordnet::Synset* used = sense;
    std::vector<std::string> antonyms = lex.antonyms_of(lemma, *sense);
    if (antonyms.empty() && cfg.antonym_sense_fallback) {
      for (const wordnet::Synset* other : lex.synsets_of(lemma, sense->id.pos)) {
        if (other == sense) continue;
        antonyms = lex.antonyms_of(lemma, *other);
        if (!antonyms.empty()) {
          used = other;
          break;
        }
      }
    }
    if (antonyms.empty()) {
      out.skips.push_back(b.skip("no-antonym", t.id));
      continue;
    }
    const std::string& antonym = antonyms.front();
    const wordnet::Synset* antonym_synset = nullptr;
    auto lemma_idx = used->lemma_index(lemma);
    for (const wordnet::Pointer& p : used->pointers) {
      if (p.symbol == "!" && lemma_idx && p.source_index == *lemma_idx &&
          lex.find(p.target)->lemma_text(static_cast<std::size_t>(p.target_index - 1)) == antonym) {
        antonym_synset = lex.find(p.target);
        break;
      }
    }
    Span range = b.span(t.id);
    std::string replacement = text::match_case(t.form, antonym);
    std::vector<int> ids{t.id};
    if (cfg.article_fixup) fix_article(s, b, t.id, range, replacement, ids);
    nlohmann::json extra = {{"lemma", lemma},
                            {"antonym", antonym},
                            {"synset", used->id.str()},
                            {"sense_fallback", used != sense}};
    if (antonym_synset != nullptr) extra["antonym_synset"] = antonym_synset->id.str();
    if (auto pair = b.edit(range, std::move(replacement), std::move(ids), std::move(extra))) {
      out.pairs.push_back(std::move(*pair));
    } else {
      out.skips.push_back(b.skip("unchanged", t.id));
    }
  }
  return out;
}

RuleOutput gen_negation(const Sentence& s, const RuleConfig& cfg) {
  check_cap(cfg);
  RuleOutput out;
  PairBuilder b(s, kNegation);
  const int root_id = s.root_id();
  const Token& root = s.token(root_id);

  std::vector<int> chain{root_id};
  std::vector<int> auxes;
  for (int id : s.children(root_id)) {
    const Token& c = s.token(id);
    std::string_view rel = conllu::base_relation(c.deprel);
    if (c.upos == "AUX" && (rel == "aux" || rel == "cop")) auxes.push_back(id);
    chain.push_back(id);
  }
  for (int id : chain) {
    const Token& t = s.token(id);
    if (is_negator(t) && (id == root_id || t.head == root_id)) {
      out.skips.push_back(b.skip("already-negated", id));
      return out;
    }
  }

  int insert_after = 0;
  if (!auxes.empty()) {
    insert_after = auxes.front();
  } else if (root.upos == "AUX" ||
             (root.upos == "VERB" && is_finite(root) &&
              text::to_lower(wordnet::token_lemma(root)) == "be")) {
    insert_after = root_id;
  }

  if (insert_after != 0) {
    const Token& aux = s.token(insert_after);
    if (auto pair = b.edit(b.span(aux.id), aux.form + " not", {aux.id},
                           {{"form", "auxiliary"}})) {
      out.pairs.push_back(std::move(*pair));
    }
    return out;
  }

  if (root.upos != "VERB" || !is_finite(root)) {
    out.skips.push_back(b.skip("no-finite-verb", root_id));
    return out;
  }
  const std::string aux = do_form(root);
  if (aux.empty()) {
    out.skips.push_back(b.skip("unsupported-verb-form", root_id));
    return out;
  }
  if (root.lemma.empty() || root.lemma == "_") {
    out.skips.push_back(b.skip("missing-lemma", root_id));
    return out;
  }
  std::string replacement =
      text::match_case(root.form, aux) + " not " + text::to_lower(root.lemma);
  if (auto pair = b.edit(b.span(root_id), std::move(replacement), {root_id},
                         {{"form", "do-support"}, {"auxiliary", aux}})) {
    out.pairs.push_back(std::move(*pair));
  }
  return out;
}

RuleOutput gen_numeric(const Sentence& s, const RuleConfig& cfg) {
  check_cap(cfg);
  RuleOutput out;
  PairBuilder b(s, kNumerical);
  Rng rng = sentence_rng(s, cfg.rng_seed);
  for (const Token& t : s.tokens) {
    if (static_cast<int>(out.pairs.size()) >= cfg.max_hypotheses_per_premise) break;
    if (conllu::base_relation(t.deprel) != "nummod") continue;
    auto numeral = parse_numeral(t.form);
    if (!numeral) {
      out.skips.push_back(b.skip("unparseable-numeral", t.id));
      continue;
    }
    const std::int64_t changed = perturb_number(numeral->value, cfg.numeric_policy, rng);
    std::string replacement = text::match_case(t.form, render_numeral(changed, numeral->style));
    nlohmann::json extra = {{"value", numeral->value}, {"new_value", changed}};
    if (auto pair = b.edit(b.span(t.id), std::move(replacement), {t.id}, std::move(extra))) {
      out.pairs.push_back(std::move(*pair));
    }
  }
  return out;
}

}  // namespace contragen::rules
