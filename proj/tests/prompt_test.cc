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

#include "contragen/prompt_template.h"

#include <gtest/gtest.h>

#include <set>

#include "contragen/contradiction_type.h"
#include "contragen/errors.h"
#include "test_util.h"

namespace contragen::llm {
namespace {

using contragen::testing::data_dir;
using contragen::testing::fixtures;
using contragen::testing::slurp;

void expect_golden(std::string_view name) {
  const auto golden =
      nlohmann::json::parse(slurp(fixtures() / "golden" / (std::string(name) + "_render.json")));
  Bindings b;
  for (const auto& [k, v] : golden.at("bindings").items()) b[k] = v.get<std::string>();
  const ChatRequest req = render(load_bundled_template(data_dir(), name), b);
  const auto& want = golden.at("messages");
  ASSERT_EQ(req.messages.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(role_name(req.messages[i].role), want[i].at("role").get<std::string>());
    EXPECT_EQ(req.messages[i].content, want[i].at("content").get<std::string>()) << name << " #" << i;
  }
}

TEST(PromptGolden, Method2) { expect_golden(kMethod2Template); }
TEST(PromptGolden, Instance) { expect_golden(kInstanceTemplate); }
TEST(PromptGolden, NewType) { expect_golden(kNewTypeTemplate); }

TEST(Prompt, BundledTemplatesValidate) {
  for (auto name : {kMethod2Template, kInstanceTemplate, kNewTypeTemplate}) {
    const PromptTemplate t = load_bundled_template(data_dir(), name);
    EXPECT_NO_THROW(t.validate());
    ASSERT_EQ(t.messages.size(), 3u);
    EXPECT_EQ(t.messages[0].role, Role::kSystem);
    std::set<std::string> seen;
    for (const auto& m : t.messages) {
      for (const auto& p : scan_placeholders(m.content)) seen.insert(p);
    }
    EXPECT_EQ(seen, std::set<std::string>(t.placeholders.begin(), t.placeholders.end()));
  }
}

TEST(Prompt, InstanceCount) {
  const auto t = load_bundled_template(data_dir(), kInstanceTemplate);
  const auto req = render(t, {{"NUM_CONTRADICTIONS", "5"},
                              {"CONTRADICTION_TYPE_NAME", "Lexical"},
                              {"CONTRADICTION_TYPE_DESCRIPTION", "d"}});
  EXPECT_NE(req.messages[1].content.find("Please generate 5 different contradictions"),
            std::string::npos);
  EXPECT_EQ(req.max_tokens, 512);
  EXPECT_DOUBLE_EQ(req.temperature, 1.0);
}

TEST(Prompt, KnownTypes) {
  const auto t = load_bundled_template(data_dir(), kNewTypeTemplate);
  const auto req = render(t, {{"KNOWN_TYPES", "structure, lexical, factive"},
                              {"CONTRADICTION_TYPE_DESCRIPTIONS", "a\n\nb"}});
  EXPECT_NE(req.messages[1].content.find("other than structure, lexical, factive"),
            std::string::npos);
}

TEST(Prompt, BindingErrors) {
  const auto t = load_bundled_template(data_dir(), kMethod2Template);
  try {
    render(t, {{"CONTRADICTION_TYPE_NAME", "x"}, {"CONTRADICTION_TYPE_DESCRIPTION", "y"}});
    FAIL();
  } catch (const TemplateError& e) {
    EXPECT_STREQ(e.what(), "unbound placeholder PREMISE");
  }
  try {
    render(t, {{"PREMISE", "p"}, {"CONTRADICTION_TYPE_NAME", "x"},
               {"CONTRADICTION_TYPE_DESCRIPTION", "y"}, {"EXTRA", "z"}});
    FAIL();
  } catch (const TemplateError& e) {
    EXPECT_STREQ(e.what(), "unexpected binding EXTRA");
  }
}

TEST(Prompt, SubstitutionIsLiteralAndSinglePass) {
  PromptTemplate t{"t", {"AA", "BB"}, {{Role::kSystem, "x AA y [AA] BB."}}};
  const auto req = render(t, {{"AA", "BB  $1 \\n"}, {"BB", "[AA]"}});
  EXPECT_EQ(req.messages[0].content, "x BB  $1 \\n y [AA] [AA].");
}

TEST(Prompt, PlaceholderScan) {
  EXPECT_EQ(scan_placeholders("Use PREMISE and KNOWN_TYPES, not [PREMISE] or A or Premise or xAB"),
            (std::vector<std::string>{"PREMISE", "KNOWN_TYPES"}));
  PromptTemplate undeclared{"t", {}, {{Role::kSystem, "hello WORLD"}}};
  EXPECT_THROW(undeclared.validate(), TemplateError);
  PromptTemplate unused{"t", {"WORLD"}, {{Role::kSystem, "hello"}}};
  EXPECT_THROW(unused.validate(), TemplateError);
}

TEST(Prompt, RenderIsInjectiveInPremise) {
  const auto t = load_bundled_template(data_dir(), kMethod2Template);
  std::set<std::string> prints;
  for (int i = 0; i < 50; ++i) {
    prints.insert(render(t, {{"PREMISE", "Premise number " + std::to_string(i) + "."},
                             {"CONTRADICTION_TYPE_NAME", "Lexical"},
                             {"CONTRADICTION_TYPE_DESCRIPTION", "d"}})
                      .fingerprint());
  }
  EXPECT_EQ(prints.size(), 50u);
}

TEST(ContradictionTypes, SeedAndGeneratedFixtures) {
  const auto seeds = load_seed_types(data_dir());
  ASSERT_EQ(seeds.size(), 5u);
  for (const auto& t : seeds) {
    EXPECT_FALSE(t.name.empty());
    EXPECT_FALSE(t.description.empty());
    EXPECT_EQ(t.origin, TypeOrigin::kSeed);
  }
  const auto generated = load_types(data_dir() / "types" / "generated_types.json");
  EXPECT_EQ(generated.size(), 8u);
  const auto four =
      select_types(seeds, {"Factive (embedding context)", "Structure", "Lexical", "World Knowledge"});
  ASSERT_EQ(four.size(), 4u);
  EXPECT_EQ(four[0].key(), "factive embedding context");
  EXPECT_EQ(select_types(seeds, {"world   knowledge"}).at(0).name, "World Knowledge");
  EXPECT_THROW(select_types(seeds, {"Nope"}), std::invalid_argument);
}

}  // namespace
}  // namespace contragen::llm
