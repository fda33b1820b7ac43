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

// Prints one PASS/FAIL line per acceptance criterion and exits non-zero
// when any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "contragen/cassette.h"
#include "contragen/cli.h"
#include "contragen/client.h"
#include "contragen/conllu.h"
#include "contragen/errors.h"
#include "contragen/method2.h"
#include "contragen/prompt_template.h"
#include "contragen/rules.h"
#include "contragen/text.h"
#include "contragen/transport.h"
#include "contragen/typology.h"
#include "contragen/wordnet.h"
#include "fuzz_util.h"
#include "json.hpp"
#include "test_util.h"

namespace contragen::acceptance {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::data_dir;
using testing::fixtures;
using testing::slurp;

using Clock = std::chrono::steady_clock;

// Collects failed expectations of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& a, const B& b, const std::string& what) {
    if (!(a == b)) {
      std::ostringstream s;
      s << what << ": got " << a << ", want " << b;
      failures_.push_back(s.str());
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

std::vector<conllu::Sentence> load(const std::string& name) {
  return conllu::parse_string(slurp(fixtures() / name), name).sentences;
}

const conllu::Sentence& by_id(const std::vector<conllu::Sentence>& all, const std::string& id) {
  for (const auto& s : all) {
    if (s.sent_id == id) return s;
  }
  throw std::runtime_error("no sentence " + id);
}

std::string first_hypothesis(const rules::RuleOutput& out) {
  return out.pairs.empty() ? std::string("<none>") : out.pairs.front().hypothesis;
}

std::size_t word_total(const std::string& s) { return text::split_whitespace(s).size(); }

std::size_t count_not(const std::string& s) {
  std::size_t n = 0;
  for (const std::string& w : text::split_whitespace(s)) {
    std::string bare = text::to_lower(w);
    while (!bare.empty() && std::ispunct(static_cast<unsigned char>(bare.back()))) bare.pop_back();
    n += bare == "not";
  }
  return n;
}

void golden_rules(Check& c) {
  const auto start = Clock::now();
  const auto lex = wordnet::Lexicon::load(fixtures() / "wn");
  const auto all = load("snli.conllu");
  const rules::RuleConfig cfg;
  c.equal(first_hypothesis(rules::gen_antonymy(by_id(all, "snli-1"), lex, cfg)),
          std::string("Women exercising one man has a green mat and black outfit on."), "woman->man");
  c.equal(first_hypothesis(rules::gen_antonymy(by_id(all, "snli-2"), lex, cfg)),
          std::string("Two brunet women are hugging one another."), "blond->brunet");
  c.equal(first_hypothesis(rules::gen_negation(by_id(all, "snli-2"), cfg)),
          std::string("Two blond women are not hugging one another."), "negation");
  c.equal(first_hypothesis(rules::gen_numeric(by_id(all, "snli-2"), cfg)),
          std::string("Three blond women are hugging one another."), "Two->Three");
  c.equal(first_hypothesis(rules::gen_antonymy(by_id(all, "snli-3"), lex, cfg)),
          std::string("A old girl sitting at a table with a bowl on her head."), "young->old");
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  c.expect(ms < 1000.0, "runtime " + std::to_string(ms) + " ms");
}

std::string expected_do(const conllu::Token& verb) {
  const auto& f = verb.feats;
  if (f.has("Mood", "Imp")) return "do";
  if (f.has("Tense", "Past")) return "did";
  const bool third = !f.get("Person") || f.has("Person", "3");
  return f.has("Number", "Sing") && third ? "does" : "do";
}

void negation_suite(Check& c) {
  const auto sentences = load("negation.conllu");
  std::ifstream in(fixtures() / "negation_expected.tsv");
  std::string line;
  std::size_t cases = 0;
  std::set<std::string> coverage;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto cols = text::split(line, '\t');
    const conllu::Sentence& s = by_id(sentences, cols.at(0));
    const auto out = rules::gen_negation(s, rules::RuleConfig{});
    ++cases;
    if (cols.size() == 3 && cols[1] == "SKIP") {
      c.expect(out.pairs.empty() && out.skips.size() == 1 && out.skips[0].reason == cols[2],
               cols[0] + ": expected skip " + cols[2]);
      coverage.insert("skip:" + cols[2]);
      continue;
    }
    if (out.pairs.size() != 1) {
      c.expect(false, cols[0] + ": expected one pair");
      continue;
    }
    const SamplePair& p = out.pairs[0];
    c.equal(p.hypothesis, cols.at(1), cols[0]);
    c.equal(count_not(p.hypothesis), count_not(p.premise) + 1, cols[0] + " not count");
    const conllu::Token& t = s.token(p.provenance.at("token_ids").at(0).get<int>());
    const auto replacement = p.provenance.at("replacement").get<std::string>();
    if (p.provenance.at("form") == "auxiliary") {
      c.equal(replacement, t.form + " not", cols[0] + " aux replacement");
      c.equal(word_total(p.hypothesis), word_total(p.premise) + 1, cols[0] + " aux words");
      coverage.insert(t.deprel == "cop" ? "copula" : "aux");
    } else {
      c.equal(replacement, text::match_case(t.form, expected_do(t)) + " not " + text::to_lower(t.lemma),
              cols[0] + " do-support replacement");
      c.equal(word_total(p.hypothesis), word_total(p.premise) + 2, cols[0] + " do-support words");
      if (t.feats.has("Tense", "Past")) coverage.insert("Past");
      if (t.feats.has("Tense", "Pres") && t.feats.has("Number", "Sing")) coverage.insert("Pres+Sing");
      if (t.feats.has("Tense", "Pres") && t.feats.has("Number", "Plur")) coverage.insert("Pres+Plur");
    }
  }
  c.expect(cases >= 20, "only " + std::to_string(cases) + " annotated cases");
  c.equal(cases, sentences.size(), "cases vs sentences");
  for (const char* need : {"Pres+Sing", "Pres+Plur", "Past", "aux", "copula", "skip:no-finite-verb"}) {
    c.expect(coverage.count(need) == 1, std::string("no case covers ") + need);
  }
}

void wndb(Check& c) {
  using namespace wordnet;
  const Lexicon lex = Lexicon::load(fixtures() / "wn");
  std::size_t antonym_pointers = 0;
  for (const auto& [id, s] : lex.synsets()) {
    for (const Pointer& p : s.pointers) {
      c.expect(lex.find(p.target) != nullptr, "unresolved pointer in " + id.str());
      antonym_pointers += p.symbol == "!";
    }
  }
  c.expect(antonym_pointers > 0, "no antonym pointers");
  c.expect(lex.antonym_asymmetries().empty(), "asymmetric antonym pointers");
  auto has = [&](const char* lemma, PartOfSpeech pos, const char* want) {
    const auto ants = lex.antonyms_of(lemma, pos);
    c.expect(std::find(ants.begin(), ants.end(), want) != ants.end(),
             std::string(lemma) + " lacks antonym " + want);
  };
  has("woman", PartOfSpeech::kNoun, "man");
  has("blond", PartOfSpeech::kAdjective, "brunet");
  has("young", PartOfSpeech::kAdjective, "old");

  const std::string index = slurp(fixtures() / "wn" / "index.adj");
  const std::string data = slurp(fixtures() / "wn" / "data.adj");
  const auto index_lines = text::split(index, '\n');
  const auto data_lines = text::split(data, '\n');
  Rng rng(7);
  int other = 0;
  for (int run = 0; run < 10000; ++run) {
    const bool in_index = rng.coin();
    auto lines = in_index ? index_lines : data_lines;
    std::string& l = lines[rng.below(lines.size())];
    if (!l.empty()) {
      if (rng.coin()) {
        l[rng.below(l.size())] = static_cast<char>(rng.below(256));
      } else {
        l.erase(rng.below(l.size()), 1 + rng.below(6));
      }
    }
    WndbFiles f{PartOfSpeech::kAdjective, in_index ? text::join(lines, "\n") : index,
                in_index ? data : text::join(lines, "\n")};
    try {
      Lexicon::from_files({f});
    } catch (const Error&) {
    } catch (...) {
      ++other;
    }
  }
  c.equal(other, 0, "non-library exceptions while fuzzing");
}

void prompt_fidelity(Check& c) {
  const std::vector<std::pair<std::string_view, std::string>> cases = {
      {llm::kMethod2Template, "method2_render.json"},
      {llm::kInstanceTemplate, "instance_render.json"},
      {llm::kNewTypeTemplate, "new_type_render.json"}};
  for (const auto& [name, file] : cases) {
    const json golden = json::parse(slurp(fixtures() / "golden" / file));
    const auto tmpl = llm::load_bundled_template(data_dir(), name);
    const llm::ChatRequest req = llm::render(tmpl, golden.at("bindings").get<llm::Bindings>());
    const auto& want = golden.at("messages");
    if (req.messages.size() != want.size()) {
      c.expect(false, file + ": message count");
      continue;
    }
    for (std::size_t i = 0; i < want.size(); ++i) {
      c.expect(llm::role_name(req.messages[i].role) == want[i].at("role").get<std::string>(), file + ": role");
      c.expect(req.messages[i].content == want[i].at("content").get<std::string>(),
               file + ": message " + std::to_string(i) + " differs");
    }
  }
}

std::string loop_run(Check& c, const llm::Cassette& cassette) {
  const auto instance = llm::load_bundled_template(data_dir(), llm::kInstanceTemplate);
  const auto new_type = llm::load_bundled_template(data_dir(), llm::kNewTypeTemplate);
  llm::ReplayTransport replay(cassette);
  llm::ChatClient client(replay);
  typology::TypePool pool(load_seed_types(data_dir()), 1234);
  c.equal(pool.size(), std::size_t{5}, "seed pool");
  json dump = json::array();
  const std::vector<std::size_t> want = {25, 30, 35};
  for (int i = 0; i < 3; ++i) {
    const std::size_t at_start = pool.size();
    const auto r = typology::run_iteration(pool, client, {instance, new_type}, typology::LoopOptions{});
    c.equal(r.instances.size(), 5 * at_start, "instances at iteration " + std::to_string(i));
    c.equal(r.instances.size(), want[static_cast<std::size_t>(i)], "iteration " + std::to_string(i));
    c.expect(r.rejects.empty(), "rejects at iteration " + std::to_string(i));
    for (const auto& p : r.instances) dump.push_back(p);
  }
  c.equal(pool.size(), std::size_t{8}, "final pool");
  dump.push_back(pool.to_json());
  return dump.dump();
}

void loop_shape(Check& c) {
  const auto cassette = llm::Cassette::load(fixtures() / "cassettes" / "loop.json");
  const std::string a = loop_run(c, cassette);
  const std::string b = loop_run(c, cassette);
  c.expect(a == b, "two runs differ");
}

int cli(const std::vector<std::string>& args, std::string* err_out = nullptr) {
  std::vector<std::string> argv = {"contragen"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(argv, out, err);
  if (err_out) *err_out = err.str();
  return code;
}

void paper_profile(Check& c) {
  testing::TempDir tmp;
  const fs::path p = fixtures() / "profile";
  const fs::path cas = fixtures() / "cassettes";
  const std::string data = data_dir().string();
  std::string err;
  auto run = [&](const std::vector<std::string>& args) {
    const int code = cli(args, &err);
    c.equal(code, 0, args.front() + " exit (" + err + ")");
    return code == 0;
  };
  if (!run({"rules", "--paper-profile", "--conllu", (p / "premises.conllu").string(), "--wordnet",
            (fixtures() / "wn").string(), "--out", (tmp / "m1").string()}) ||
      !run({"llm-snli", "--paper-profile", "--premises", (p / "premises.txt").string(),
            "--transport", "replay", "--cassette", (cas / "profile_method2.json").string(),
            "--data-dir", data, "--out", (tmp / "m2").string()}) ||
      !run({"self-instruct", "--paper-profile", "--transport", "replay", "--cassette",
            (cas / "profile_method3.json").string(), "--data-dir", data, "--out",
            (tmp / "m3").string()})) {
    return;
  }
  const json m1 = json::parse(slurp(tmp / "m1" / "manifest.json"))["summary"]["pairs"];
  c.equal(m1["antonymy"]["pairs"].get<int>(), 170, "method1 antonymy");
  c.equal(m1["negation"]["pairs"].get<int>(), 165, "method1 negation");
  c.equal(m1["numerical"]["pairs"].get<int>(), 165, "method1 numerical");
  const json m2 = json::parse(slurp(tmp / "m2" / "manifest.json"))["summary"];
  c.equal(m2["accepted_per_type"].size(), std::size_t{4}, "method2 types");
  for (const auto& [type, n] : m2["accepted_per_type"].items()) c.equal(n.get<int>(), 125, "method2 " + type);

  if (!run({"assemble", "--inputs", (tmp / "m1" / "antonymy.jsonl").string(),
            (tmp / "m1" / "negation.jsonl").string(), (tmp / "m1" / "numerical.jsonl").string(),
            (tmp / "m2" / "method2.jsonl").string(), (tmp / "m3" / "method3.jsonl").string(),
            "--noncontradictions", (p / "noncontradictions.jsonl").string(), "--out",
            (tmp / "ds").string()})) {
    return;
  }
  const json ds = json::parse(slurp(tmp / "ds" / "manifest.json"))["summary"]["dataset"];
  const json m3 = json::parse(slurp(tmp / "ds" / "stats.json"))["methods"]["method3"];
  int seed_rows = 0;
  for (const auto& [key, n] : m3["types"].items()) {
    const bool generated = std::find(m3["generated_types"].begin(), m3["generated_types"].end(),
                                     key) != m3["generated_types"].end();
    if (!generated) {
      c.equal(n.get<int>(), 50, "method3 " + key);
      ++seed_rows;
    }
  }
  c.equal(seed_rows, 4, "method3 seed types");
  c.equal(m3["other"].get<int>(), 225, "method3 generated");
  c.equal(m3["total"].get<int>(), 425, "method3 total");
  c.equal(ds["labels"]["contradiction"].get<int>(), 1425, "contradictions");
  c.equal(ds["labels"]["non_contradiction"].get<int>(), 1425, "non-contradictions");
  c.equal(ds["noncontradictions_available"].get<int>(), 1500, "non-contradictions available");
  c.equal(ds["duplicates_removed"].get<int>(), 0, "duplicates");
}

void reply_robustness(Check& c) {
  std::ifstream in(fixtures() / "replies.jsonl");
  std::string line;
  int accepted = 0;
  int rejected = 0;
  int total = 0;
  const ContradictionType type{"Structure", "d", TypeOrigin::kSeed};
  while (std::getline(in, line)) {
    if (text::trim(line).empty()) continue;
    const json r = json::parse(line);
    const std::string kind = r.at("kind");
    const std::string reply = r.at("text");
    bool ok = false;
    if (kind == "method2") {
      try {
        method2::parse_reply(reply, type);
        ok = true;
      } catch (const FormatReject&) {
      }
    } else if (kind == "instance") {
      const auto parsed = typology::parse_instance_lines(reply);
      ok = parsed.rejects == 0 && !parsed.pairs.empty();
    } else {
      try {
        typology::parse_new_type(reply);
        ok = true;
      } catch (const FormatReject&) {
      }
    }
    ++total;
    (ok ? accepted : rejected) += 1;
    c.expect(ok == r.at("well_formed").get<bool>(),
             "record " + std::to_string(total) + " (" + kind + ") " + (ok ? "accepted" : "rejected"));
  }
  c.equal(total, 100, "records");
  c.equal(accepted, 80, "accepted");
  c.equal(rejected, 20, "rejected");

  Rng rng(99);
  int other = 0;
  for (int i = 0; i < 20000; ++i) {
    const std::string reply = testing::random_reply(rng);
    try {
      method2::parse_reply(reply, type);
    } catch (const FormatReject&) {
    } catch (...) {
      ++other;
    }
    try {
      typology::parse_instance_lines(reply);
      typology::parse_new_type(reply);
    } catch (const FormatReject&) {
    } catch (...) {
      ++other;
    }
  }
  c.equal(other, 0, "unexpected exceptions on random text");
}

void offline(Check& c) {
  llm::set_network_refused(true);
  const std::size_t before = llm::refused_connection_attempts();
  llm::HttpOptions opts;
  opts.api_key = "k";
  opts.base_url = "https://api.openai.com/v1";
  llm::HttpTransport http(opts);
  llm::ChatRequest req;
  req.model_id = "gpt-4";
  req.messages = {{llm::Role::kSystem, "s"}, {llm::Role::kUser, "u"}};
  bool refused = false;
  try {
    http.send(req, req.fingerprint());
  } catch (const TransportError&) {
    refused = true;
  }
  c.expect(refused, "remote request was not refused");
  c.equal(llm::refused_connection_attempts(), before + 1, "refused attempts");

  const std::size_t mid = llm::refused_connection_attempts();
  {
    Check scratch;
    loop_run(scratch, llm::Cassette::load(fixtures() / "cassettes" / "loop.json"));
  }
  c.equal(llm::refused_connection_attempts(), mid, "replay attempted a connection");

  ::setenv("CONTRAGEN_REFUSE_NETWORK", "1", 1);
  const std::string cmd = std::string("\"") + CONTRAGEN_UNIT_TESTS + "\" --gtest_brief=1 2>&1";
  const auto start = Clock::now();
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    c.expect(false, "cannot start the unit suite");
    return;
  }
  std::string output;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) output.append(buf, n);
  const int status = ::pclose(pipe);
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool passed = WIFEXITED(status) && WEXITSTATUS(status) == 0;
  c.expect(passed, "unit suite failed:\n" + output);
  c.expect(secs < 60.0, "unit suite took " + std::to_string(secs) + " s");
  std::cout << "  unit suite: " << (passed ? "passed" : "failed") << " in " << secs << " s\n";
}

}  // namespace
}  // namespace contragen::acceptance

int main() {
  using namespace contragen::acceptance;
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"1 golden rule-engine examples", golden_rules},
      {"2 negation do-support suite", negation_suite},
      {"3 WNDB loader", wndb},
      {"4 prompt fidelity", prompt_fidelity},
      {"5 self-instruct loop shape", loop_shape},
      {"6 reference corpus profile", paper_profile},
      {"7 reply-parser robustness", reply_robustness},
      {"8 offline suite under 60 s", offline}};
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failures().empty();
    std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
    for (const auto& f : c.failures()) std::cout << "  " << f << '\n';
    failed += !ok;
  }
  return failed == 0 ? 0 : 1;
}
