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

#include "contragen/conllu.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "contragen/errors.h"
#include "test_util.h"

namespace contragen::conllu {
namespace {

using contragen::testing::fixtures;
using contragen::testing::slurp;

std::string row(int id, const std::string& form, const std::string& upos, int head,
                const std::string& rel, const std::string& misc = "_") {
  return std::to_string(id) + "\t" + form + "\t" + form + "\t" + upos + "\t_\t_\t" +
         std::to_string(head) + "\t" + rel + "\t_\t" + misc + "\n";
}

std::vector<Sentence> fixture_sentences() {
  std::vector<Sentence> all;
  for (const char* name : {"snli.conllu", "negation.conllu", "profile/premises.conllu"}) {
    auto r = parse_string(slurp(fixtures() / name), name);
    all.insert(all.end(), r.sentences.begin(), r.sentences.end());
  }
  return all;
}

TEST(Conllu, EmptyInputYieldsNoSentences) {
  EXPECT_TRUE(parse_string("").sentences.empty());
  EXPECT_TRUE(parse_string("\n\n").sentences.empty());
}

TEST(Conllu, ThreeTokenBlock) {
  const std::string text = row(1, "Women", "NOUN", 2, "nsubj") + row(2, "exercise", "VERB", 0, "root") +
                           row(3, ".", "PUNCT", 2, "punct");
  auto r = parse_string(text);
  ASSERT_EQ(r.sentences.size(), 1u);
  const Sentence& s = r.sentences[0];
  ASSERT_EQ(s.tokens.size(), 3u);
  EXPECT_EQ(s.root_id(), 2);
  EXPECT_EQ(s.token(1).head, 2);
  EXPECT_EQ(s.token(3).head, 2);
  EXPECT_EQ(s.children(2), (std::vector<int>{1, 3}));
}

TEST(Conllu, NonContiguousIdsNameTheSentence) {
  const std::string text = "# sent_id = gap\n" + row(1, "Hi", "INTJ", 0, "root") +
                           row(3, "there", "ADV", 1, "advmod");
  try {
    parse_string(text, "gap.conllu");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("non-contiguous"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("gap"), std::string::npos);
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Conllu, WrongColumnCountReportsLine) {
  const std::string text = "# text = x\n1\tx\tx\tX\n";
  try {
    parse_string(text, "cols.conllu");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.source(), "cols.conllu");
  }
}

TEST(Conllu, HeadInvariants) {
  EXPECT_THROW(parse_string(row(1, "a", "X", 1, "root")), ParseError);
  EXPECT_THROW(parse_string(row(1, "a", "X", 0, "root") + row(2, "b", "X", 0, "root")),
               ParseError);
  EXPECT_THROW(parse_string(row(1, "a", "X", 0, "root") + row(2, "b", "X", 7, "dep")),
               ParseError);
  EXPECT_THROW(parse_string("1\t\t_\tX\t_\t_\t0\troot\t_\t_\n"), ParseError);
  // An underscore FORM is a literal underscore token.
  EXPECT_EQ(parse_string("1\t_\t_\tSYM\t_\t_\t0\troot\t_\t_\n").sentences.at(0).tokens.at(0).form, "_");
}

TEST(Conllu, MultiwordAndEmptyNodesSkippedWithWarning) {
  const std::string text = "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n" + row(1, "do", "AUX", 3, "aux") +
                           row(2, "n't", "PART", 3, "advmod") + "2.1\tx\tx\tX\t_\t_\t_\t_\t_\t_\n" +
                           row(3, "go", "VERB", 0, "root");
  auto r = parse_string(text);
  ASSERT_EQ(r.sentences.size(), 1u);
  EXPECT_EQ(r.sentences[0].tokens.size(), 3u);
  ASSERT_EQ(r.warnings.size(), 2u);
  EXPECT_EQ(r.warnings[0].line, 1u);
  EXPECT_EQ(r.warnings[1].line, 4u);
}

TEST(Conllu, CommentsCaptured) {
  const std::string text = "# sent_id = s1\n# text = Hi\n# newdoc\n" + row(1, "Hi", "INTJ", 0, "root");
  const Sentence s = parse_string(text).sentences.at(0);
  EXPECT_EQ(s.sent_id, "s1");
  EXPECT_EQ(s.source_text, "Hi");
  ASSERT_EQ(s.comments.size(), 1u);
  EXPECT_EQ(s.comments[0], " newdoc");
}

TEST(Conllu, DetokenizeHonoursSpaceAfter) {
  const std::string text = row(1, "Two", "NUM", 3, "nummod") + row(2, "blond", "ADJ", 3, "amod") +
                           row(3, "women", "NOUN", 0, "root", "SpaceAfter=No") +
                           row(4, ".", "PUNCT", 3, "punct");
  EXPECT_EQ(detokenize(parse_string(text).sentences.at(0)), "Two blond women.");
  EXPECT_EQ(detokenize(parse_string(row(1, "Hi", "INTJ", 0, "root")).sentences.at(0)), "Hi");
}

TEST(Conllu, PremiseTextPrefersComment) {
  Sentence s = parse_string(row(1, "Hi", "INTJ", 0, "root")).sentences.at(0);
  EXPECT_EQ(premise_text(s), "Hi");
  s.source_text = "Hello";
  EXPECT_EQ(premise_text(s), "Hello");
}

TEST(Conllu, FindTokensOnGoldenPremise) {
  auto r = parse_string(slurp(fixtures() / "snli.conllu"));
  const Sentence* s = nullptr;
  for (const auto& x : r.sentences) {
    if (x.sent_id == "snli-2") s = &x;
  }
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(find_tokens(*s, has_deprel("nummod")), std::vector<int>{1});
  EXPECT_EQ(find_tokens(*s, has_upos("ADJ")), std::vector<int>{2});
  EXPECT_TRUE(find_tokens(*s, has_upos("SYM")).empty());
}

TEST(Conllu, BaseRelation) {
  EXPECT_EQ(base_relation("nsubj:pass"), "nsubj");
  EXPECT_EQ(base_relation("obj"), "obj");
  auto s = parse_string(row(1, "it", "PRON", 2, "nsubj:pass") + row(2, "went", "VERB", 0, "root"))
               .sentences.at(0);
  EXPECT_TRUE(find_tokens(s, has_deprel("nsubj")).empty());
  EXPECT_EQ(find_tokens(s, has_deprel("nsubj:pass")), std::vector<int>{1});
}

TEST(MorphFeatures, RoundTripsColumn) {
  for (const char* col : {"_", "Number=Sing", "Mood=Ind|Tense=Pres|VerbForm=Fin",
                          "Tense=Pres|Mood=Ind"}) {
    EXPECT_EQ(MorphFeatures::parse(col).str(), col);
  }
  auto f = MorphFeatures::parse("Number=Sing|Person=3");
  EXPECT_EQ(f.get("Person"), "3");
  EXPECT_TRUE(f.has("Number", "Sing"));
  EXPECT_FALSE(f.get("Tense").has_value());
  f.set("Person", "1");
  f.set("Tense", "Past");
  EXPECT_EQ(f.str(), "Number=Sing|Person=1|Tense=Past");
}

TEST(MorphFeatures, RejectsMalformedEntries) {
  for (const char* col : {"Number", "=Sing", "Number=", "A=B||C=D"}) {
    EXPECT_THROW(MorphFeatures::parse(col), std::invalid_argument) << col;
  }
}

TEST(ConlluProperty, RenderRoundTripIsIdempotent) {
  const auto sentences = fixture_sentences();
  ASSERT_GT(sentences.size(), 200u);
  const std::string rendered = render(sentences);
  const auto again = parse_string(rendered).sentences;
  ASSERT_EQ(again, sentences);
  EXPECT_EQ(render(again), rendered);
}

TEST(ConlluProperty, DetokenizeMatchesTextComment) {
  for (const Sentence& s : fixture_sentences()) {
    ASSERT_TRUE(s.source_text.has_value());
    EXPECT_EQ(detokenize(s), *s.source_text) << s.label();
  }
}

TEST(ConlluProperty, DetokenizedPieceCountMatchesTokens) {
  for (const Sentence& s : fixture_sentences()) {
    std::size_t joined = 0;
    for (std::size_t i = 0; i + 1 < s.tokens.size(); ++i) joined += s.tokens[i].space_after ? 0 : 1;
    std::size_t pieces = 0;
    bool in_word = false;
    for (char c : detokenize(s)) {
      if (c == ' ') {
        in_word = false;
      } else if (!in_word) {
        in_word = true;
        ++pieces;
      }
    }
    EXPECT_EQ(pieces + joined, s.tokens.size()) << s.label();
  }
}

}  // namespace
}  // namespace contragen::conllu
