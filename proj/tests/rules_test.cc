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

#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "contragen/conllu.h"
#include "contragen/numerals.h"
#include "contragen/text.h"
#include "test_util.h"

namespace contragen::rules {
namespace {

using contragen::testing::fixtures;
using contragen::testing::slurp;

const wordnet::Lexicon& lexicon() {
  static const wordnet::Lexicon lex = wordnet::Lexicon::load(fixtures() / "wn");
  return lex;
}

std::vector<conllu::Sentence> load(const std::string& name) {
  return conllu::parse_string(slurp(fixtures() / name), name).sentences;
}

const conllu::Sentence& by_id(const std::vector<conllu::Sentence>& all, const std::string& id) {
  for (const auto& s : all) {
    if (s.sent_id == id) return s;
  }
  throw std::runtime_error("no sentence " + id);
}

std::vector<std::string> hypotheses(const RuleOutput& out) {
  std::vector<std::string> h;
  for (const auto& p : out.pairs) h.push_back(p.hypothesis);
  return h;
}

std::size_t count_word(const std::string& s, const std::string& w) {
  std::size_t n = 0;
  for (const std::string& t : text::split_whitespace(s)) {
    std::string bare = text::to_lower(t);
    while (!bare.empty() && std::ispunct(static_cast<unsigned char>(bare.back()))) bare.pop_back();
    n += bare == w;
  }
  return n;
}

// Applies the span edit recorded in provenance to the premise.
std::string replay_edit(const SamplePair& p) {
  const auto offset = p.provenance.at("offset").get<std::size_t>();
  const auto original = p.provenance.at("original").get<std::string>();
  const auto replacement = p.provenance.at("replacement").get<std::string>();
  std::string out = p.premise;
  EXPECT_EQ(out.substr(offset, original.size()), original);
  out.replace(offset, original.size(), replacement);
  return out;
}

void expect_single_span(const SamplePair& p) {
  EXPECT_NE(p.premise, p.hypothesis);
  EXPECT_FALSE(p.premise.empty());
  EXPECT_FALSE(p.hypothesis.empty());
  EXPECT_EQ(p.label, Label::kContradiction);
  EXPECT_EQ(p.method, Method::kMethod1);
  const auto offset = p.provenance.at("offset").get<std::size_t>();
  const auto original = p.provenance.at("original").get<std::string>();
  const auto replacement = p.provenance.at("replacement").get<std::string>();
  EXPECT_EQ(p.hypothesis.substr(offset, replacement.size()), replacement);
  std::string a = p.premise;
  std::string b = p.hypothesis;
  a.erase(offset, original.size());
  b.erase(offset, replacement.size());
  EXPECT_EQ(a, b);
  EXPECT_EQ(replay_edit(p), p.hypothesis);
}

// ------------------------------------------------------------- golden

TEST(RulesGolden, Antonymy) {
  const auto all = load("snli.conllu");
  RuleConfig cfg;
  auto one = gen_antonymy(by_id(all, "snli-1"), lexicon(), cfg);
  ASSERT_FALSE(one.pairs.empty());
  EXPECT_EQ(one.pairs[0].hypothesis, "Women exercising one man has a green mat and black outfit on.");
  auto two = gen_antonymy(by_id(all, "snli-2"), lexicon(), cfg);
  ASSERT_FALSE(two.pairs.empty());
  EXPECT_EQ(two.pairs[0].hypothesis, "Two brunet women are hugging one another.");
  auto three = gen_antonymy(by_id(all, "snli-3"), lexicon(), cfg);
  ASSERT_FALSE(three.pairs.empty());
  EXPECT_EQ(three.pairs[0].hypothesis, "A old girl sitting at a table with a bowl on her head.");
}

TEST(RulesGolden, NegationAndNumeric) {
  const auto all = load("snli.conllu");
  RuleConfig cfg;
  EXPECT_EQ(hypotheses(gen_negation(by_id(all, "snli-2"), cfg)),
            std::vector<std::string>{"Two blond women are not hugging one another."});
  EXPECT_EQ(hypotheses(gen_negation(by_id(all, "snli-4"), cfg)),
            std::vector<std::string>{"A man does not play the guitar."});
  auto skip = gen_negation(by_id(all, "snli-3"), cfg);
  EXPECT_TRUE(skip.pairs.empty());
  ASSERT_EQ(skip.skips.size(), 1u);
  EXPECT_EQ(skip.skips[0].reason, "no-finite-verb");
  EXPECT_EQ(hypotheses(gen_numeric(by_id(all, "snli-2"), cfg)),
            std::vector<std::string>{"Three blond women are hugging one another."});
  EXPECT_EQ(hypotheses(gen_numeric(by_id(all, "snli-5"), cfg)), std::vector<std::string>{"6 dogs run."});
  EXPECT_TRUE(gen_numeric(by_id(all, "snli-4"), cfg).pairs.empty());
}

TEST(RulesGolden, ArticleFixup) {
  const auto all = load("snli.conllu");
  RuleConfig cfg;
  cfg.article_fixup = true;
  auto out = gen_antonymy(by_id(all, "snli-3"), lexicon(), cfg);
  ASSERT_FALSE(out.pairs.empty());
  EXPECT_EQ(out.pairs[0].hypothesis, "An old girl sitting at a table with a bowl on her head.");
  expect_single_span(out.pairs[0]);
}

TEST(Rules, AntonymyVacuousCase) {
  auto s = conllu::parse_string(
               "1\tRun\trun\tVERB\t_\tMood=Imp|VerbForm=Fin\t0\troot\t_\tSpaceAfter=No\n"
               "2\t!\t!\tPUNCT\t_\t_\t1\tpunct\t_\t_\n")
               .sentences.at(0);
  EXPECT_TRUE(gen_antonymy(s, lexicon(), RuleConfig{}).pairs.empty());
}

TEST(Rules, AntonymyCapAndOrder) {
  const auto all = load("profile/premises.conllu");
  for (int cap : {1, 2, 3}) {
    RuleConfig cfg;
    cfg.max_hypotheses_per_premise = cap;
    for (const auto& s : all) {
      auto out = gen_antonymy(s, lexicon(), cfg);
      EXPECT_LE(out.pairs.size(), static_cast<std::size_t>(cap));
      int last = 0;
      for (const auto& p : out.pairs) {
        const int id = p.provenance.at("token_ids").at(0).get<int>();
        EXPECT_GT(id, last);
        last = id;
      }
    }
  }
  RuleConfig bad;
  bad.max_hypotheses_per_premise = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Rules, AntonymyOnlyAdjectivesAndCoreNouns) {
  for (const char* name : {"snli.conllu", "negation.conllu", "profile/premises.conllu"}) {
    for (const auto& s : load(name)) {
      for (const auto& p : gen_antonymy(s, lexicon(), RuleConfig{}).pairs) {
        const auto& t = s.token(p.provenance.at("token_ids").back().get<int>());
        const std::string rel(conllu::base_relation(t.deprel));
        EXPECT_TRUE(t.upos == "ADJ" ||
                    (t.upos == "NOUN" && (rel == "obj" || rel == "nsubj" || rel == "root")))
            << t.form << " " << t.deprel;
      }
    }
  }
}

TEST(Rules, CapitalizationPreserved) {
  const auto all = conllu::parse_string(
      "# text = Young girls smile.\n"
      "1\tYoung\tyoung\tADJ\tJJ\tDegree=Pos\t2\tamod\t_\t_\n"
      "2\tgirls\tgirl\tNOUN\tNNS\tNumber=Plur\t3\tnsubj\t_\t_\n"
      "3\tsmile\tsmile\tVERB\tVBP\tMood=Ind|Number=Plur|Tense=Pres|VerbForm=Fin\t0\troot\t_\tSpaceAfter=No\n"
      "4\t.\t.\tPUNCT\t.\t_\t3\tpunct\t_\t_\n").sentences;
  auto out = gen_antonymy(all.at(0), lexicon(), RuleConfig{});
  ASSERT_FALSE(out.pairs.empty());
  EXPECT_EQ(out.pairs[0].hypothesis, "Old girls smile.");
  bool saw_capital = false;
  for (const auto& p : out.pairs) {
    const auto original = p.provenance.at("original").get<std::string>();
    const auto replacement = p.provenance.at("replacement").get<std::string>();
    EXPECT_EQ(std::isupper(static_cast<unsigned char>(original[0])) != 0,
              std::isupper(static_cast<unsigned char>(replacement[0])) != 0);
    saw_capital = saw_capital || std::isupper(static_cast<unsigned char>(original[0]));
  }
  EXPECT_TRUE(saw_capital);
}

TEST(Rules, SenseFallbackIsFlagged) {
  // Find an adjective whose first sense has no antonym but a later one does.
  const auto& lex = lexicon();
  std::string lemma;
  for (const auto& [id, syn] : lex.synsets()) {
    if (id.pos != wordnet::PartOfSpeech::kAdjective) continue;
    for (const std::string& l : syn.lemmas) {
      auto senses = lex.synsets_of(l, wordnet::PartOfSpeech::kAdjective);
      if (senses.size() < 2 || !lex.antonyms_of(l, *senses[0]).empty()) continue;
      for (std::size_t i = 1; i < senses.size(); ++i) {
        if (!lex.antonyms_of(l, *senses[i]).empty()) lemma = l;
      }
      if (!lemma.empty()) break;
    }
    if (!lemma.empty()) break;
  }
  ASSERT_FALSE(lemma.empty()) << "fixture lexicon lacks a fallback case";
  auto s = conllu::parse_string("# text = It is " + lemma + "\n1\tIt\tit\tPRON\t_\t_\t3\tnsubj\t_\t_\n"
                                "2\tis\tbe\tAUX\t_\t_\t3\tcop\t_\t_\n3\t" + lemma + "\t" + lemma +
                                "\tADJ\t_\t_\t0\troot\t_\t_\n")
               .sentences.at(0);
  RuleConfig cfg;
  auto off = gen_antonymy(s, lex, cfg);
  EXPECT_TRUE(off.pairs.empty());
  ASSERT_EQ(off.skips.size(), 1u);
  EXPECT_EQ(off.skips[0].reason, "no-antonym");
  cfg.antonym_sense_fallback = true;
  auto on = gen_antonymy(s, lex, cfg);
  ASSERT_EQ(on.pairs.size(), 1u);
  EXPECT_TRUE(on.pairs[0].provenance.at("sense_fallback").get<bool>());
}

// ------------------------------------------------------- properties

TEST(RulesProperty, SingleSpanEditEverywhere) {
  RuleConfig cfg;
  cfg.numeric_policy = NumericPolicy::kSeededRandom;
  std::size_t pairs = 0;
  for (const char* name : {"snli.conllu", "negation.conllu", "profile/premises.conllu"}) {
    for (const auto& s : load(name)) {
      for (const RuleOutput& out :
           {gen_antonymy(s, lexicon(), cfg), gen_negation(s, cfg), gen_numeric(s, cfg)}) {
        for (const auto& p : out.pairs) {
          expect_single_span(p);
          EXPECT_EQ(p.premise, conllu::premise_text(s));
          ++pairs;
        }
      }
    }
  }
  EXPECT_GT(pairs, 500u);
}

TEST(RulesProperty, AntonymKeepsPartOfSpeech) {
  const auto& lex = lexicon();
  for (const auto& s : load("profile/premises.conllu")) {
    for (const auto& p : gen_antonymy(s, lex, RuleConfig{}).pairs) {
      const std::string synset = p.provenance.at("synset").get<std::string>();
      ASSERT_TRUE(p.provenance.contains("antonym_synset"));
      const std::string target = p.provenance.at("antonym_synset").get<std::string>();
      EXPECT_EQ(synset.back(), target.back()) << synset << " " << target;
    }
  }
}

TEST(RulesProperty, NumericNeverEqualNorNonPositive) {
  for (std::int64_t v : {0, 1, 2, 5, 6, 19, 100, 1000}) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      Rng rng(seed);
      const auto got = perturb_number(v, NumericPolicy::kSeededRandom, rng);
      EXPECT_NE(got, v);
      EXPECT_GT(got, 0);
      EXPECT_LE(std::llabs(got - v), 5);
    }
    Rng rng(1);
    EXPECT_EQ(perturb_number(v, NumericPolicy::kFixedIncrement, rng), v + 1);
  }
}

TEST(RulesProperty, NumericSeededPolicyMovesBothWays) {
  std::set<int> directions;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    Rng rng(seed);
    directions.insert(perturb_number(10, NumericPolicy::kSeededRandom, rng) > 10 ? 1 : -1);
  }
  EXPECT_EQ(directions.size(), 2u);
}

TEST(RulesProperty, Determinism) {
  RuleConfig cfg;
  cfg.numeric_policy = NumericPolicy::kSeededRandom;
  cfg.rng_seed = 99;
  for (const auto& s : load("profile/premises.conllu")) {
    EXPECT_EQ(gen_numeric(s, cfg).pairs, gen_numeric(s, cfg).pairs);
    EXPECT_EQ(gen_antonymy(s, lexicon(), cfg).pairs, gen_antonymy(s, lexicon(), cfg).pairs);
    EXPECT_EQ(gen_negation(s, cfg).pairs, gen_negation(s, cfg).pairs);
  }
}

TEST(Rules, NumericKeepsStyle) {
  const std::string text =
      "# text = Twenty-one men and 7 dogs and dozens cats\n"
      "1\tTwenty-one\ttwenty-one\tNUM\t_\t_\t2\tnummod\t_\t_\n"
      "2\tmen\tman\tNOUN\t_\t_\t0\troot\t_\t_\n"
      "3\tand\tand\tCCONJ\t_\t_\t5\tcc\t_\t_\n"
      "4\t7\t7\tNUM\t_\t_\t5\tnummod\t_\t_\n"
      "5\tdogs\tdog\tNOUN\t_\t_\t2\tconj\t_\t_\n"
      "6\tand\tand\tCCONJ\t_\t_\t8\tcc\t_\t_\n"
      "7\tdozens\tdozen\tNOUN\t_\t_\t8\tnummod\t_\t_\n"
      "8\tcats\tcat\tNOUN\t_\t_\t2\tconj\t_\t_\n";
  const auto s = conllu::parse_string(text).sentences.at(0);
  auto out = gen_numeric(s, RuleConfig{});
  EXPECT_EQ(hypotheses(out), (std::vector<std::string>{"Twenty-two men and 7 dogs and dozens cats",
                                                       "Twenty-one men and 8 dogs and dozens cats"}));
  ASSERT_EQ(out.skips.size(), 1u);
  EXPECT_EQ(out.skips[0].reason, "unparseable-numeral");
  EXPECT_EQ(out.skips[0].token_id, 7);
}

TEST(Numerals, RoundTrip) {
  EXPECT_EQ(parse_numeral("Two")->value, 2);
  EXPECT_EQ(number_to_words(3), "three");
  EXPECT_EQ(number_to_words(147), "147");
  EXPECT_EQ(render_numeral(147, NumeralStyle::kWords), "147");
  for (std::int64_t v = 0; v <= 100; ++v) {
    auto n = parse_numeral(number_to_words(v));
    ASSERT_TRUE(n.has_value()) << v;
    EXPECT_EQ(n->value, v);
    EXPECT_EQ(n->style, NumeralStyle::kWords);
    EXPECT_EQ(parse_numeral(std::to_string(v))->value, v);
  }
  for (const char* w : {"zero", "Seven", "TWENTY", "ninety-NINE", "hundred"}) {
    auto n = parse_numeral(w);
    ASSERT_TRUE(n.has_value()) << w;
    if (std::string(w) != "hundred") EXPECT_EQ(number_to_words(n->value), text::to_lower(w));
  }
  for (const char* w : {"dozens", "2.5", "", "twenty-", "-one", "one-twenty", "ten-five", "1a"}) {
    EXPECT_FALSE(parse_numeral(w).has_value()) << w;
  }
}

// --------------------------------------------- negation fixture suite

struct NegationCase {
  std::string sent_id;
  std::string expected;  // hypothesis, or the skip reason
  bool skip = false;
};

std::vector<NegationCase> negation_cases() {
  std::vector<NegationCase> out;
  std::ifstream in(fixtures() / "negation_expected.tsv");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto cols = text::split(line, '\t');
    if (cols.size() == 3 && cols[1] == "SKIP") {
      out.push_back({cols[0], cols[2], true});
    } else {
      out.push_back({cols[0], cols[1], false});
    }
  }
  return out;
}

// The do-support auxiliary implied by the verb's features.
std::string expected_do(const conllu::Token& verb) {
  const auto& f = verb.feats;
  if (f.has("Mood", "Imp")) return "do";
  if (f.has("Tense", "Past")) return "did";
  const bool third = !f.get("Person") || f.has("Person", "3");
  return f.has("Number", "Sing") && third ? "does" : "do";
}

TEST(NegationSuite, MatchesAnnotatedExpectations) {
  const auto sentences = load("negation.conllu");
  const auto cases = negation_cases();
  ASSERT_GE(cases.size(), 20u);
  ASSERT_EQ(cases.size(), sentences.size());
  for (const NegationCase& c : cases) {
    auto out = gen_negation(by_id(sentences, c.sent_id), RuleConfig{});
    if (c.skip) {
      EXPECT_TRUE(out.pairs.empty()) << c.sent_id;
      ASSERT_EQ(out.skips.size(), 1u) << c.sent_id;
      EXPECT_EQ(out.skips[0].reason, c.expected) << c.sent_id;
    } else {
      ASSERT_EQ(out.pairs.size(), 1u) << c.sent_id;
      EXPECT_EQ(out.pairs[0].hypothesis, c.expected) << c.sent_id;
    }
  }
}

TEST(NegationSuite, PostConditions) {
  std::map<std::string, int> coverage;
  for (const char* name : {"negation.conllu", "snli.conllu", "profile/premises.conllu"}) {
    for (const auto& s : load(name)) {
      auto out = gen_negation(s, RuleConfig{});
      EXPECT_LE(out.pairs.size(), 1u);
      EXPECT_EQ(out.pairs.size() + out.skips.size(), 1u) << s.label();
      if (out.pairs.empty()) {
        ++coverage["skip:" + out.skips.at(0).reason];
        continue;
      }
      const SamplePair& p = out.pairs[0];
      expect_single_span(p);
      EXPECT_EQ(p.type, "negation");
      EXPECT_EQ(count_word(p.hypothesis, "not"), count_word(p.premise, "not") + 1);
      const int id = p.provenance.at("token_ids").at(0).get<int>();
      const conllu::Token& t = s.token(id);
      const auto original = p.provenance.at("original").get<std::string>();
      const auto replacement = p.provenance.at("replacement").get<std::string>();
      EXPECT_EQ(original, t.form);
      const auto before = text::split_whitespace(p.premise).size();
      const auto after = text::split_whitespace(p.hypothesis).size();
      if (p.provenance.at("form") == "auxiliary") {
        EXPECT_TRUE(t.upos == "AUX" || t.lemma == "be") << s.label();
        EXPECT_EQ(replacement, t.form + " not");
        EXPECT_EQ(after, before + 1);
        ++coverage[std::string("aux:") + (t.deprel == "cop" ? "cop" : "aux")];
      } else {
        EXPECT_EQ(t.upos, "VERB");
        EXPECT_EQ(id, s.root_id());
        const std::string aux = expected_do(t);
        EXPECT_EQ(replacement, text::match_case(t.form, aux) + " not " + text::to_lower(t.lemma));
        EXPECT_EQ(after, before + 2);
        const auto number = t.feats.get("Number");
        const auto tense = t.feats.get("Tense");
        ++coverage["do:" + std::string(tense.value_or("none")) + "+" +
                   std::string(number.value_or("none"))];
      }
    }
  }
  for (const char* need : {"do:Pres+Sing", "do:Pres+Plur", "do:Past+none", "aux:aux", "aux:cop",
                           "skip:no-finite-verb", "skip:already-negated"}) {
    EXPECT_GT(coverage[need], 0) << need;
  }
}

}  // namespace
}  // namespace contragen::rules
