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

#include "contragen/cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "contragen/cassette.h"
#include "contragen/client.h"
#include "contragen/conllu.h"
#include "contragen/contradiction_type.h"
#include "contragen/dataset.h"
#include "contragen/digest.h"
#include "contragen/errors.h"
#include "contragen/method2.h"
#include "contragen/prompt_template.h"
#include "contragen/rules.h"
#include "contragen/text.h"
#include "contragen/transport.h"
#include "contragen/typology.h"
#include "contragen/wordnet.h"

#ifndef CONTRAGEN_DEFAULT_DATA_DIR
#define CONTRAGEN_DEFAULT_DATA_DIR "data"
#endif

namespace contragen::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

// Per-type targets of the reference corpus.
constexpr int kProfileAntonymy = 170;
constexpr int kProfileNumerical = 165;
constexpr int kProfileNegation = 165;
constexpr int kProfileQuota = 125;
constexpr int kProfileIterations = 10;
const std::vector<std::string> kProfileTypes = {"Factive (embedding context)", "Structure",
                                              "Lexical", "World Knowledge"};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON config: top-level keys are subcommand names holding objects of
// long option names (without dashes); nested subcommands nest further.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* /*app*/, bool /*default_also*/, bool /*write_description*/,
                        std::string /*prefix*/) const override {
    return "{}\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw CLI::ConversionError(std::string("--config: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("--config: top level must be a JSON object");
    std::vector<CLI::ConfigItem> items;
    flatten(j, {}, items);
    return items;
  }

 private:
  static std::string scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

  static void flatten(const json& obj, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, v] : obj.items()) {
      if (v.is_object()) {
        auto p = parents;
        p.push_back(key);
        flatten(v, p, items);
        continue;
      }
      if (v.is_null()) continue;
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (v.is_array()) {
        for (const auto& e : v) item.inputs.push_back(scalar(e));
      } else {
        item.inputs.push_back(scalar(v));
      }
      items.push_back(std::move(item));
    }
  }
};

struct Common {
  std::string out = "out";
  std::uint64_t seed = 1234;
  std::string data_dir = CONTRAGEN_DEFAULT_DATA_DIR;
  bool paper_profile = false;

  json to_json() const {
    return {{"out", out}, {"seed", seed}, {"data_dir", data_dir}, {"paper_profile", paper_profile}};
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Output directory")->capture_default_str();
  sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  sub->add_option("--data-dir", c.data_dir, "Directory with prompts/ and types/")
      ->capture_default_str();
  sub->add_flag("--paper-profile", c.paper_profile,
                "Default counts to the reference corpus shape");
}

struct LlmFlags {
  std::string transport = "live";
  std::string cassette;
  std::string model = "gpt-4";
  int max_tokens = 512;
  double temperature = 1.0;
  std::size_t max_in_flight = 4;
  double rps = 0;
  bool strict = false;

  json to_json() const {
    return {{"transport", transport}, {"cassette", cassette},     {"model", model},
            {"max_tokens", max_tokens}, {"temperature", temperature},
            {"max_in_flight", max_in_flight}, {"rps", rps},     {"strict", strict}};
  }
};

void add_llm(CLI::App* sub, LlmFlags& f) {
  sub->add_option("--transport", f.transport, "live, record or replay")
      ->check(CLI::IsMember({"live", "record", "replay"}))
      ->capture_default_str();
  sub->add_option("--cassette", f.cassette, "Cassette file for record/replay");
  sub->add_option("--model", f.model, "Model id")->capture_default_str();
  sub->add_option("--max-tokens", f.max_tokens, "Completion token limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--temperature", f.temperature, "Sampling temperature")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub->add_option("--max-in-flight", f.max_in_flight, "Concurrent requests")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--rps", f.rps, "Request rate limit per second, 0 for none")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub->add_flag("--strict", f.strict, "Exit with status 2 when any request failed");
}

void validate_llm(const LlmFlags& f) {
  if ((f.transport == "replay" || f.transport == "record") && f.cassette.empty()) {
    throw UsageError("--transport " + f.transport + " requires --cassette");
  }
  if (f.transport != "replay") {
    const char* key = std::getenv(llm::kApiKeyEnv);
    if (key == nullptr || *key == '\0') {
      throw UsageError("--transport " + f.transport + " requires " + llm::kApiKeyEnv +
                       " to be set");
    }
  }
}

struct LlmStack {
  std::unique_ptr<llm::Transport> transport;
  std::unique_ptr<llm::ChatClient> client;
};

LlmStack make_llm(const LlmFlags& f) {
  validate_llm(f);
  LlmStack s;
  if (f.transport == "replay") {
    s.transport = std::make_unique<llm::ReplayTransport>(llm::Cassette::load(f.cassette));
  } else {
    auto http = std::make_unique<llm::HttpTransport>(llm::http_options_from_env());
    if (f.transport == "record") {
      s.transport = std::make_unique<llm::RecordingTransport>(
          std::move(http), llm::Cassette::load_or_empty(f.cassette), f.cassette);
    } else {
      s.transport = std::move(http);
    }
  }
  llm::ClientOptions opts;
  opts.max_in_flight = f.max_in_flight;
  opts.requests_per_second = f.rps;
  opts.burst = std::max(1.0, f.rps);
  s.client = std::make_unique<llm::ChatClient>(*s.transport, opts);
  return s;
}

// out/manifest.json: the resolved configuration, output digests and a
// per-command summary.
class RunManifest {
 public:
  RunManifest(std::string subcommand, const fs::path& out_dir)
      : subcommand_(std::move(subcommand)), out_dir_(out_dir) {
    fs::create_directories(out_dir_);
  }

  json config = json::object();
  json summary = json::object();

  fs::path path(const std::string& name) const { return out_dir_ / name; }
  void output(const std::string& name) { outputs_[name] = sha256_file(path(name)); }

  void write() const {
    json j = {{"tool", "contragen"},   {"version", kVersion},
              {"subcommand", subcommand_}, {"created_at", utc_timestamp()},
              {"config", config},      {"outputs", outputs_},
              {"summary", summary}};
    std::ofstream out(path("manifest.json"), std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path("manifest.json").string());
    out << j.dump(2) << '\n';
  }

 private:
  std::string subcommand_;
  fs::path out_dir_;
  std::map<std::string, std::string> outputs_;
};

template <typename T>
void write_json_lines(const std::vector<T>& records, const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  for (const T& r : records) out << json(r).dump() << '\n';
  if (!out) throw IoError("cannot write " + path.string());
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
}

std::vector<ContradictionType> pick_types(const std::vector<ContradictionType>& seeds,
                                          const std::vector<std::string>& names,
                                          const char* flag) {
  try {
    return select_types(seeds, names);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::vector<std::string> names_of(const std::vector<ContradictionType>& types) {
  std::vector<std::string> out;
  for (const auto& t : types) out.push_back(t.name);
  return out;
}

// ---------------------------------------------------------------- rules

struct RulesCmd {
  Common common;
  std::string conllu;
  std::string wordnet;
  std::string sense_map;
  int max_per_premise = 3;
  std::string numeric_policy = "fixed";
  bool article_fixup = false;
  bool sense_fallback = false;
  std::vector<std::string> rules = {"antonymy", "negation", "numerical"};
  int limit_antonymy = 0;
  int limit_negation = 0;
  int limit_numerical = 0;
  CLI::Option* limit_antonymy_opt = nullptr;
  CLI::Option* limit_negation_opt = nullptr;
  CLI::Option* limit_numerical_opt = nullptr;

  void attach(CLI::App* sub) {
    add_common(sub, common);
    sub->add_option("--conllu", conllu, "Parsed premises")->required();
    sub->add_option("--wordnet", wordnet, "WNDB directory")->required();
    sub->add_option("--sense-map", sense_map, "lemma/pos/context -> offset overrides");
    sub->add_option("--max-per-premise", max_per_premise, "Antonymy/numeric pairs per premise")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--numeric-policy", numeric_policy, "fixed (+1) or random")
        ->check(CLI::IsMember({"fixed", "random"}))
        ->capture_default_str();
    sub->add_flag("--article-fixup", article_fixup, "Repair a/an before substituted words");
    sub->add_flag("--sense-fallback", sense_fallback,
                  "Try further senses when the chosen one has no antonym");
    sub->add_option("--rules", rules, "Subset of antonymy,negation,numerical")
        ->delimiter(',')
        ->check(CLI::IsMember({"antonymy", "negation", "numerical"}));
    limit_antonymy_opt = sub->add_option("--limit-antonymy", limit_antonymy,
                                         "Keep the first N antonymy pairs (0 = all)");
    limit_negation_opt = sub->add_option("--limit-negation", limit_negation,
                                         "Keep the first N negation pairs (0 = all)");
    limit_numerical_opt = sub->add_option("--limit-numerical", limit_numerical,
                                          "Keep the first N numerical pairs (0 = all)");
  }

  json to_json() const {
    return {{"common", common.to_json()},
            {"conllu", conllu},
            {"wordnet", wordnet},
            {"sense_map", sense_map},
            {"max_per_premise", max_per_premise},
            {"numeric_policy", numeric_policy},
            {"article_fixup", article_fixup},
            {"sense_fallback", sense_fallback},
            {"rules", rules},
            {"limit_antonymy", limit_antonymy},
            {"limit_negation", limit_negation},
            {"limit_numerical", limit_numerical}};
  }

  int run(std::ostream& out, std::ostream& err) {
    if (common.paper_profile) {
      if (limit_antonymy_opt->count() == 0) limit_antonymy = kProfileAntonymy;
      if (limit_negation_opt->count() == 0) limit_negation = kProfileNegation;
      if (limit_numerical_opt->count() == 0) limit_numerical = kProfileNumerical;
    }
    if (limit_antonymy < 0 || limit_negation < 0 || limit_numerical < 0) {
      throw UsageError("--limit-* values must be >= 0");
    }
    const wordnet::Lexicon lex = wordnet::Lexicon::load(wordnet);
    wordnet::SenseMap senses;
    rules::RuleConfig cfg;
    if (!sense_map.empty()) {
      senses = wordnet::SenseMap::load(sense_map);
      cfg.wsd.sense_map = &senses;
    }
    cfg.max_hypotheses_per_premise = max_per_premise;
    cfg.numeric_policy = numeric_policy == "random" ? rules::NumericPolicy::kSeededRandom
                                                    : rules::NumericPolicy::kFixedIncrement;
    cfg.article_fixup = article_fixup;
    cfg.antonym_sense_fallback = sense_fallback;
    cfg.rng_seed = common.seed;

    std::ifstream in(conllu, std::ios::binary);
    if (!in) throw IoError("cannot open --conllu file " + conllu);
    conllu::ParseResult parsed = conllu::parse(in, conllu);
    for (const auto& w : parsed.warnings) err << conllu << ":" << w.line << ": warning: " << w.message << '\n';

    auto enabled = [&](std::string_view r) {
      return std::find(rules.begin(), rules.end(), r) != rules.end();
    };
    std::map<std::string, std::vector<SamplePair>> pairs;
    std::vector<rules::SkipRecord> skips;
    auto take = [&](std::string_view rule, rules::RuleOutput&& r) {
      auto& dst = pairs[std::string(rule)];
      for (auto& p : r.pairs) dst.push_back(std::move(p));
      for (auto& s : r.skips) skips.push_back(std::move(s));
    };
    for (const conllu::Sentence& s : parsed.sentences) {
      if (enabled(rules::kAntonymy)) take(rules::kAntonymy, rules::gen_antonymy(s, lex, cfg));
      if (enabled(rules::kNegation)) take(rules::kNegation, rules::gen_negation(s, cfg));
      if (enabled(rules::kNumerical)) take(rules::kNumerical, rules::gen_numeric(s, cfg));
    }
    const std::map<std::string, int> limits = {{std::string(rules::kAntonymy), limit_antonymy},
                                               {std::string(rules::kNegation), limit_negation},
                                               {std::string(rules::kNumerical), limit_numerical}};
    RunManifest manifest("rules", common.out);
    manifest.config = to_json();
    json produced = json::object();
    for (const auto& [rule, limit] : limits) {
      if (!enabled(rule)) continue;
      auto& v = pairs[rule];
      const std::size_t available = v.size();
      if (limit > 0 && v.size() > static_cast<std::size_t>(limit)) v.resize(static_cast<std::size_t>(limit));
      if (limit > 0 && available < static_cast<std::size_t>(limit)) {
        err << "warning: " << rule << ": " << available << " pairs, fewer than --limit-" << rule
            << " " << limit << '\n';
      }
      const std::string file = rule + ".jsonl";
      dataset::write_jsonl(v, manifest.path(file));
      manifest.output(file);
      produced[rule] = {{"pairs", v.size()}, {"available", available}};
      out << rule << ": " << v.size() << " pairs\n";
    }
    write_json_lines(skips, manifest.path("skips.jsonl"));
    manifest.output("skips.jsonl");
    json skip_counts = json::object();
    for (const auto& s : skips) {
      auto& slot = skip_counts[s.rule][s.reason];
      slot = slot.is_null() ? 1 : slot.get<int>() + 1;
    }
    manifest.summary = {{"sentences", parsed.sentences.size()},
                        {"parse_warnings", parsed.warnings.size()},
                        {"pairs", produced},
                        {"skips", skip_counts}};
    manifest.write();
    out << "skips: " << skips.size() << '\n';
    return kExitOk;
  }
};

// ------------------------------------------------------------- llm-snli

struct LlmSnliCmd {
  Common common;
  LlmFlags llm;
  std::string premises;
  std::vector<std::string> types;
  int quota = kProfileQuota;
  CLI::Option* types_opt = nullptr;

  void attach(CLI::App* sub) {
    add_common(sub, common);
    add_llm(sub, llm);
    sub->add_option("--premises", premises, "Premise file (text lines or JSONL)")->required();
    types_opt = sub->add_option("--types", types, "Seed type names, comma separated")
                    ->delimiter(',');
    sub->add_option("--quota", quota, "Accepted pairs per type")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  }

  json to_json() const {
    return {{"common", common.to_json()},
            {"llm", llm.to_json()},
            {"premises", premises},
            {"types", types},
            {"quota", quota}};
  }

  int run(std::ostream& out, std::ostream& err) {
    validate_llm(llm);
    const auto seeds = load_seed_types(common.data_dir);
    if (types_opt->count() == 0) types = common.paper_profile ? kProfileTypes : names_of(seeds);
    const auto chosen = pick_types(seeds, types, "--types");
    const auto tmpl = llm::load_bundled_template(common.data_dir, llm::kMethod2Template);
    const auto input = method2::read_premises(premises);
    LlmStack stack = make_llm(llm);

    method2::Options opts;
    opts.quota_per_type = quota;
    opts.model_id = llm.model;
    opts.max_tokens = llm.max_tokens;
    opts.temperature = llm.temperature;
    method2::Result r = method2::generate_for_premises(input, chosen, *stack.client, tmpl, opts);

    RunManifest manifest("llm-snli", common.out);
    manifest.config = to_json();
    dataset::write_jsonl(r.pairs, manifest.path("method2.jsonl"));
    manifest.output("method2.jsonl");
    write_json_lines(r.rejects, manifest.path("method2_rejects.jsonl"));
    manifest.output("method2_rejects.jsonl");
    std::map<std::string, int> reject_reasons;
    for (const auto& rej : r.rejects) ++reject_reasons[rej.reason];
    for (const auto& w : r.warnings) err << "warning: " << w << '\n';
    for (const auto& f : r.transport_failures) {
      err << "error: " << f.type << " / premise " << f.premise_index << ": " << f.error << '\n';
    }
    manifest.summary = {{"premises", input.size()},
                        {"responses", r.responses},
                        {"accepted_per_type", r.accepted_per_type},
                        {"rejects", reject_reasons},
                        {"transport_failures", r.transport_failures.size()},
                        {"warnings", r.warnings}};
    manifest.write();
    for (const auto& [name, n] : r.accepted_per_type) out << name << ": " << n << " pairs\n";
    out << "rejects: " << r.rejects.size() << '\n';
    return llm.strict && !r.transport_failures.empty() ? kExitData : kExitOk;
  }
};

// --------------------------------------------------------- self-instruct

struct SelfInstructCmd {
  Common common;
  LlmFlags llm;
  int iterations = 1;
  int per_type = 5;
  std::vector<std::string> seed_types;
  bool keep_duplicates = false;
  bool resume = false;
  CLI::Option* iterations_opt = nullptr;
  CLI::Option* seed_types_opt = nullptr;

  void attach(CLI::App* sub) {
    add_common(sub, common);
    add_llm(sub, llm);
    iterations_opt = sub->add_option("--iterations", iterations, "Loop iterations")
                         ->check(CLI::PositiveNumber)
                         ->capture_default_str();
    sub->add_option("--per-type", per_type, "Instances requested per type and iteration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    seed_types_opt = sub->add_option("--seed-types", seed_types, "Initial pool, comma separated")
                         ->delimiter(',');
    sub->add_flag("--keep-duplicates", keep_duplicates, "Keep near-duplicate new types");
    sub->add_flag("--resume", resume, "Continue from OUT/pool.json and OUT/method3.jsonl");
  }

  json to_json() const {
    return {{"common", common.to_json()}, {"llm", llm.to_json()},
            {"iterations", iterations},    {"per_type", per_type},
            {"seed_types", seed_types},    {"keep_duplicates", keep_duplicates},
            {"resume", resume}};
  }

  int run(std::ostream& out, std::ostream& err) {
    validate_llm(llm);
    if (common.paper_profile && iterations_opt->count() == 0) iterations = kProfileIterations;
    const fs::path out_dir = common.out;
    const fs::path pool_path = out_dir / "pool.json";
    const fs::path instances_path = out_dir / "method3.jsonl";
    const fs::path log_path = out_dir / "iterations.jsonl";

    typology::TypePool pool;
    std::vector<SamplePair> instances;
    if (resume && fs::exists(pool_path)) {
      pool = typology::TypePool::load(pool_path);
      if (fs::exists(instances_path)) instances = dataset::read_jsonl(instances_path);
    } else {
      const auto seeds = load_seed_types(common.data_dir);
      if (seed_types_opt->count() == 0) {
        seed_types = common.paper_profile ? kProfileTypes : names_of(seeds);
      }
      pool = typology::TypePool(pick_types(seeds, seed_types, "--seed-types"), common.seed);
    }
    const auto instance_tmpl = llm::load_bundled_template(common.data_dir, llm::kInstanceTemplate);
    const auto new_type_tmpl = llm::load_bundled_template(common.data_dir, llm::kNewTypeTemplate);
    LlmStack stack = make_llm(llm);

    RunManifest manifest("self-instruct", common.out);
    manifest.config = to_json();
    const auto mode = resume ? std::ios::app : std::ios::trunc;
    std::ofstream inst_out(instances_path, std::ios::binary | mode);
    std::ofstream log_out(log_path, std::ios::binary | mode);
    if (!inst_out || !log_out) throw IoError("cannot write to " + out_dir.string());

    typology::LoopOptions opts;
    opts.per_type = per_type;
    opts.keep_duplicates = keep_duplicates;
    opts.model_id = llm.model;
    opts.max_tokens = llm.max_tokens;
    opts.temperature = llm.temperature;
    bool failures = false;
    json new_types = json::array();
    std::map<std::string, int> rejects;
    for (int i = 0; i < iterations; ++i) {
      typology::IterationResult r =
          typology::run_iteration(pool, *stack.client, {instance_tmpl, new_type_tmpl}, opts);
      for (const SamplePair& p : r.instances) inst_out << json(p).dump() << '\n';
      inst_out.flush();
      log_out << typology::summary_json(r).dump() << '\n';
      log_out.flush();
      pool.save(pool_path);
      for (const auto& [k, v] : r.rejects) rejects[k] += v;
      failures = failures || r.rejects.count("transport") > 0;
      for (const auto& n : r.notes) err << "iteration " << r.iteration_index << ": " << n << '\n';
      new_types.push_back(r.new_type ? json(r.new_type->name) : json(nullptr));
      out << "iteration " << r.iteration_index << ": " << r.instances.size() << " instances, pool "
          << pool.size() << '\n';
      instances.insert(instances.end(), std::make_move_iterator(r.instances.begin()),
                       std::make_move_iterator(r.instances.end()));
    }
    inst_out.close();
    log_out.close();
    manifest.output("pool.json");
    manifest.output("method3.jsonl");
    manifest.output("iterations.jsonl");
    manifest.summary = {{"iterations_completed", pool.iterations_completed()},
                        {"pool_size", pool.size()},
                        {"instances", instances.size()},
                        {"new_types", new_types},
                        {"rejects", rejects}};
    manifest.write();
    return llm.strict && failures ? kExitData : kExitOk;
  }
};

// -------------------------------------------------------------- assemble

struct AssembleCmd {
  Common common;
  std::vector<std::string> inputs;
  std::string noncontradictions;
  bool no_balance = false;

  void attach(CLI::App* sub) {
    add_common(sub, common);
    sub->add_option("--inputs", inputs, "Contradiction JSONL files, in priority order")
        ->required();
    sub->add_option("--noncontradictions", noncontradictions, "SNLI-style JSONL");
    sub->add_flag("--no-balance", no_balance, "Keep every non-contradiction");
  }

  json to_json() const {
    return {{"common", common.to_json()},
            {"inputs", inputs},
            {"noncontradictions", noncontradictions},
            {"balance", !no_balance}};
  }

  int run(std::ostream& out, std::ostream& /*err*/) {
    if (!no_balance && noncontradictions.empty()) {
      throw UsageError("--noncontradictions is required unless --no-balance is given");
    }
    dataset::AssembleOptions opts;
    opts.balance = !no_balance;
    opts.seed = common.seed;
    std::vector<std::vector<SamplePair>> sources;
    for (const std::string& path : inputs) {
      auto samples = dataset::read_jsonl(fs::path(path));
      for (const SamplePair& s : samples) {
        if (s.label != Label::kContradiction) {
          throw AssemblyError(path + ": --inputs must hold contradictions only");
        }
      }
      opts.sources.push_back({path, sha256_file(path), samples.size()});
      sources.push_back(std::move(samples));
    }
    std::vector<SamplePair> fill;
    std::size_t skipped = 0;
    if (!noncontradictions.empty()) {
      auto read = dataset::read_noncontradictions(noncontradictions);
      skipped = read.skipped;
      opts.sources.push_back({noncontradictions, sha256_file(noncontradictions), read.samples.size()});
      fill = std::move(read.samples);
    }
    dataset::Dataset d = dataset::assemble(sources, fill, opts);

    RunManifest manifest("assemble", common.out);
    manifest.config = to_json();
    dataset::write_jsonl(d.samples, manifest.path("dataset.jsonl"));
    manifest.output("dataset.jsonl");
    const dataset::Stats st = dataset::compute_stats(d.samples);
    const std::string table = dataset::render_table(st);
    write_text(manifest.path("stats.txt"), table);
    manifest.output("stats.txt");
    write_text(manifest.path("stats.json"), json(dataset::to_json(st)).dump(2) + "\n");
    manifest.output("stats.json");
    manifest.summary = {{"samples", d.samples.size()},
                        {"skipped_contradiction_rows", skipped},
                        {"dataset", dataset::to_json(d.manifest)}};
    manifest.write();
    out << table;
    return kExitOk;
  }
};

// ----------------------------------------------------------------- stats

struct StatsCmd {
  std::string dataset_path;
  std::string out_dir;
  bool as_json = false;

  void attach(CLI::App* sub) {
    sub->add_option("--dataset", dataset_path, "Dataset JSONL")->required();
    sub->add_option("--out", out_dir, "Also write stats.txt, stats.json and a manifest here");
    sub->add_flag("--json", as_json, "Print JSON instead of the table");
  }

  int run(std::ostream& out, std::ostream& /*err*/) {
    const auto samples = dataset::read_jsonl(fs::path(dataset_path));
    const dataset::Stats st = dataset::compute_stats(samples);
    const std::string table = dataset::render_table(st);
    const std::string js = json(dataset::to_json(st)).dump(2) + "\n";
    out << (as_json ? js : table);
    if (!out_dir.empty()) {
      RunManifest manifest("stats", out_dir);
      manifest.config = {{"dataset", dataset_path}, {"out", out_dir}, {"json", as_json}};
      write_text(manifest.path("stats.txt"), table);
      manifest.output("stats.txt");
      write_text(manifest.path("stats.json"), js);
      manifest.output("stats.json");
      manifest.summary = {{"samples", samples.size()}};
      manifest.write();
    }
    return kExitOk;
  }
};

// -------------------------------------------------------- wordnet lookup

struct LookupCmd {
  std::string wordnet;
  std::string lemma;
  std::string pos;

  void attach(CLI::App* sub) {
    sub->add_option("lemma", lemma, "Lemma to look up")->required();
    sub->add_option("pos", pos, "n, v, a, r or noun/verb/adj/adv")->required();
    sub->add_option("--wordnet", wordnet, "WNDB directory")->required();
  }

  int run(std::ostream& out, std::ostream& /*err*/) {
    auto p = wordnet::parse_pos(pos);
    if (!p) throw UsageError("pos: unknown part of speech '" + pos + "'");
    const wordnet::Lexicon lex = wordnet::Lexicon::load(wordnet);
    const auto senses = lex.synsets_of(lemma, *p);
    out << lemma << " (" << wordnet::pos_name(*p) << "): " << senses.size() << " sense"
        << (senses.size() == 1 ? "" : "s") << '\n';
    for (std::size_t i = 0; i < senses.size(); ++i) {
      const wordnet::Synset& s = *senses[i];
      std::vector<std::string> lemmas;
      for (std::size_t k = 0; k < s.lemmas.size(); ++k) lemmas.push_back(s.lemma_text(k));
      out << "  " << (i + 1) << ". " << s.id.str() << " " << text::join(lemmas, ", ");
      const auto ants = lex.antonyms_of(lemma, s);
      if (!ants.empty()) out << " | antonyms: " << text::join(ants, ", ");
      out << '\n';
      if (!s.gloss.empty()) out << "     " << s.gloss << '\n';
    }
    return kExitOk;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contradiction corpus generator"};
  app.name(argc > 0 ? fs::path(argv[0]).filename().string() : "contragen");
  app.fallthrough();
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<JsonConfig>());
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "JSON config file (flags take precedence)");
  app.set_version_flag("--version", std::string("contragen ") + kVersion);

  RulesCmd rules_cmd;
  LlmSnliCmd snli_cmd;
  SelfInstructCmd self_cmd;
  AssembleCmd assemble_cmd;
  StatsCmd stats_cmd;
  LookupCmd lookup_cmd;

  rules_cmd.attach(app.add_subcommand("rules", "Rule-based contradictions from CoNLL-U premises"));
  snli_cmd.attach(app.add_subcommand("llm-snli", "LLM hypotheses for given premises"));
  self_cmd.attach(app.add_subcommand("self-instruct", "Self-instruct loop over contradiction types"));
  assemble_cmd.attach(app.add_subcommand("assemble", "Merge, deduplicate and balance"));
  stats_cmd.attach(app.add_subcommand("stats", "Counts per method and type"));
  CLI::App* wn = app.add_subcommand("wordnet", "WordNet queries");
  wn->require_subcommand(1);
  lookup_cmd.attach(wn->add_subcommand("lookup", "Senses and antonyms of a lemma"));

  std::ostringstream help_out;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("rules")) return rules_cmd.run(out, err);
    if (app.got_subcommand("llm-snli")) return snli_cmd.run(out, err);
    if (app.got_subcommand("self-instruct")) return self_cmd.run(out, err);
    if (app.got_subcommand("assemble")) return assemble_cmd.run(out, err);
    if (app.got_subcommand("stats")) return stats_cmd.run(out, err);
    if (wn->got_subcommand("lookup")) return lookup_cmd.run(out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (const std::string& a : args) argv.push_back(a.c_str());
  argv.push_back(nullptr);
  return run(static_cast<int>(args.size()), argv.data(), out, err);
}

}  // namespace contragen::cli
