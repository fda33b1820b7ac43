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

#include "contragen/typology.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "contragen/errors.h"
#include "contragen/rng.h"
#include "contragen/text.h"

namespace contragen::typology {

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool has_letter(std::string_view s) { return std::any_of(s.begin(), s.end(), is_alpha); }
bool is_quote(char c) { return c == '\'' || c == '"'; }

struct Marker {
  std::size_t start;
  std::size_t end;  // just past the colon
};

// Case-insensitive `word` at a word boundary followed by optional spaces
// and a colon.
std::optional<Marker> find_marker(std::string_view s, std::string_view word, std::size_t from) {
  for (std::size_t i = text::ifind(s, word, from); i != std::string_view::npos;
       i = text::ifind(s, word, i + 1)) {
    if (i > 0 && is_alpha(s[i - 1])) continue;
    std::size_t j = i + word.size();
    while (j < s.size() && s[j] == ' ') ++j;
    if (j < s.size() && s[j] == ':') return Marker{i, j + 1};
  }
  return std::nullopt;
}

std::optional<Marker> find_first_marker(std::string_view s,
                                        std::initializer_list<std::string_view> words,
                                        std::size_t from) {
  for (std::string_view w : words) {
    if (auto m = find_marker(s, w, from)) return m;
  }
  return std::nullopt;
}

std::string clean_side(std::string_view s) {
  for (;;) {
    const std::string_view before = s;
    s = text::trim(s);
    while (!s.empty() && (s.back() == ',' || s.back() == ';')) s.remove_suffix(1);
    s = text::trim(s);
    while (s.size() >= 2 && s.front() == '*' && s.back() == '*') s = s.substr(1, s.size() - 2);
    if (s.size() >= 2 && s.back() == '.' && (s[s.size() - 2] == ']' || is_quote(s[s.size() - 2])) &&
        (s.front() == '[' || is_quote(s.front()))) {
      s.remove_suffix(1);
    }
    s = text::strip_enclosing(s);
    if (s.size() >= 2 && is_quote(s.back()) && s.front() != s.back()) {
      const char prev = s[s.size() - 2];
      if (s.back() == '"' || prev == '.' || prev == '!' || prev == '?') s.remove_suffix(1);
    }
    if (s.size() >= 2 && is_quote(s.front()) && s.back() != s.front()) s.remove_prefix(1);
    if (s == before) return std::string(s);
  }
}

}  // namespace

TypePool::TypePool(std::vector<ContradictionType> seeds, std::uint64_t rng_seed)
    : seed_count_(seeds.size()), rng_seed_(rng_seed) {
  for (ContradictionType& t : seeds) {
    if (t.origin != TypeOrigin::kSeed) {
      throw PreconditionError("seed pool entry " + t.name + " is not a seed type");
    }
    if (!add(std::move(t))) throw PreconditionError("duplicate seed type key");
  }
}

bool TypePool::contains_key(std::string_view key) const {
  return std::any_of(types_.begin(), types_.end(),
                     [&](const ContradictionType& t) { return t.key() == key; });
}

bool TypePool::add(ContradictionType t) {
  if (contains_key(t.key())) return false;
  types_.push_back(std::move(t));
  return true;
}

nlohmann::json TypePool::to_json() const {
  return {{"seed_count", seed_count_},
          {"rng_seed", rng_seed_},
          {"iterations_completed", iterations_completed_},
          {"types", types_}};
}

TypePool TypePool::from_json(const nlohmann::json& j, std::string_view source) {
  TypePool pool;
  try {
    pool.seed_count_ = j.at("seed_count").get<std::size_t>();
    pool.rng_seed_ = j.at("rng_seed").get<std::uint64_t>();
    pool.iterations_completed_ = j.value("iterations_completed", 0);
    for (const auto& e : j.at("types")) {
      ContradictionType t = e.get<ContradictionType>();
      const std::string name = t.name;
      if (!pool.add(std::move(t))) {
        throw ParseError(std::string(source), 0, "duplicate type key for " + name);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(source), 0, e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(source), 0, e.what());
  }
  if (pool.seed_count_ > pool.types_.size()) {
    throw ParseError(std::string(source), 0, "seed_count exceeds the number of types");
  }
  for (std::size_t i = 0; i < pool.seed_count_; ++i) {
    if (pool.types_[i].origin != TypeOrigin::kSeed) {
      throw ParseError(std::string(source), 0, "type " + pool.types_[i].name + " is not a seed");
    }
  }
  return pool;
}

TypePool TypePool::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open pool file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string(), 0, e.what());
  }
  return from_json(j, path.string());
}

void TypePool::save(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write pool file " + tmp.string());
    out << to_json().dump(2) << '\n';
    if (!out) throw IoError("cannot write pool file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

InstanceParse parse_instance_lines(std::string_view raw) {
  InstanceParse out;
  const std::string text = text::straighten_quotes(raw);
  const std::string_view s = text;

  std::vector<Marker> premises;
  for (auto m = find_marker(s, "premise", 0); m; m = find_marker(s, "premise", m->end)) {
    premises.push_back(*m);
  }
  const std::size_t first = premises.empty() ? s.size() : premises.front().start;
  if (has_letter(s.substr(0, first))) ++out.rejects;

  for (std::size_t k = 0; k < premises.size(); ++k) {
    const std::size_t end = k + 1 < premises.size() ? premises[k + 1].start : s.size();
    const std::string_view block = s.substr(premises[k].end, end - premises[k].end);
    auto h = find_marker(block, "hypothesis", 0);
    if (!h) {
      ++out.rejects;
      continue;
    }
    std::string premise = clean_side(block.substr(0, h->start));
    std::string_view rest = block.substr(h->end);
    const std::size_t nl = std::min(rest.find('\n'), rest.size());
    std::string hypothesis = clean_side(rest.substr(0, nl));
    if (has_letter(rest.substr(nl))) ++out.rejects;
    if (text::word_count(premise) < 3 || text::word_count(hypothesis) < 3 ||
        text::normalize_key(premise) == text::normalize_key(hypothesis)) {
      ++out.rejects;
      continue;
    }
    SamplePair p;
    p.premise = std::move(premise);
    p.hypothesis = std::move(hypothesis);
    p.label = Label::kContradiction;
    p.method = Method::kMethod3;
    out.pairs.push_back(std::move(p));
  }
  return out;
}

ContradictionType parse_new_type(std::string_view raw) {
  const std::string text = text::straighten_quotes(raw);
  const std::string_view s = text;
  auto name = find_first_marker(s, {"contradiction type name", "type name", "name"}, 0);
  if (!name) throw FormatReject("format", "no type name in reply");
  auto desc = find_first_marker(
      s, {"contradiction type description", "type description", "description"}, name->end);
  if (!desc) throw FormatReject("format", "no type description in reply");
  ContradictionType t;
  t.name = clean_side(s.substr(name->end, desc->start - name->end));
  while (!t.name.empty() && t.name.back() == '.') t.name = clean_side(t.name.substr(0, t.name.size() - 1));
  t.description = clean_side(s.substr(desc->end));
  t.origin = TypeOrigin::kGenerated;
  if (t.name.empty() || t.key().empty()) throw FormatReject("format", "empty type name");
  if (t.description.empty()) throw FormatReject("format", "empty type description");
  return t;
}

double jaccard(std::string_view a, std::string_view b) {
  auto tokens = [](std::string_view s) {
    auto words = text::split_whitespace(text::normalize_key(s));
    return std::set<std::string>(words.begin(), words.end());
  };
  const auto ta = tokens(a);
  const auto tb = tokens(b);
  if (ta.empty() && tb.empty()) return 1.0;
  std::size_t common = 0;
  for (const auto& w : ta) common += tb.count(w);
  return static_cast<double>(common) / static_cast<double>(ta.size() + tb.size() - common);
}

bool near_duplicate(const ContradictionType& a, const ContradictionType& b, double threshold) {
  return a.key() == b.key() || jaccard(a.description, b.description) >= threshold;
}

nlohmann::json summary_json(const IterationResult& r) {
  return {{"iteration", r.iteration_index},
          {"pool_size_at_start", r.pool_size_at_start},
          {"instances", r.instances.size()},
          {"new_type", r.new_type ? nlohmann::json(r.new_type->name) : nlohmann::json(nullptr)},
          {"rejects", r.rejects},
          {"notes", r.notes}};
}

IterationResult run_iteration(TypePool& pool, llm::ChatClient& client, const Templates& templates,
                              const LoopOptions& options) {
  if (pool.size() < 3) {
    throw PreconditionError("type pool has " + std::to_string(pool.size()) +
                            " types; at least 3 are needed to sample descriptions");
  }
  if (options.per_type < 1) throw PreconditionError("per-type count must be positive");
  IterationResult result;
  result.iteration_index = pool.iterations_completed();
  result.pool_size_at_start = pool.size();
  const std::vector<ContradictionType> snapshot = pool.types();

  auto configure = [&](llm::ChatRequest req) {
    req.model_id = options.model_id;
    req.max_tokens = options.max_tokens;
    req.temperature = options.temperature;
    return req;
  };

  std::vector<llm::ChatRequest> requests;
  for (const ContradictionType& t : snapshot) {
    requests.push_back(configure(llm::render(
        templates.instance, {{"NUM_CONTRADICTIONS", std::to_string(options.per_type)},
                             {"CONTRADICTION_TYPE_NAME", t.name},
                             {"CONTRADICTION_TYPE_DESCRIPTION", t.description}})));
  }
  std::vector<llm::Completion> done = client.complete_all(requests);
  for (std::size_t i = 0; i < done.size(); ++i) {
    const ContradictionType& t = snapshot[i];
    const llm::Completion& c = done[i];
    if (!c.ok()) {
      ++result.rejects["transport"];
      result.notes.push_back("instances for " + t.name + ": " + c.error);
      continue;
    }
    InstanceParse parsed = parse_instance_lines(c.response->content);
    if (parsed.rejects > 0) result.rejects["format"] += static_cast<int>(parsed.rejects);
    const std::size_t n = static_cast<std::size_t>(options.per_type);
    if (parsed.pairs.size() > n) {
      result.rejects["surplus"] += static_cast<int>(parsed.pairs.size() - n);
      parsed.pairs.resize(n);
    }
    for (SamplePair& p : parsed.pairs) {
      p.type = t.name;
      p.method = Method::kMethod3;
      p.provenance = {{"iteration", result.iteration_index},
                      {"type_origin", origin_name(t.origin)},
                      {"fingerprint", c.fingerprint},
                      {"cassette_key", c.key},
                      {"model", options.model_id}};
      result.instances.push_back(std::move(p));
    }
  }

  Rng rng(mix_seed(pool.rng_seed(), static_cast<std::uint64_t>(result.iteration_index)));
  std::vector<std::string> names;
  for (const ContradictionType& t : snapshot) names.push_back(t.name);
  const std::string known = text::join(names, ", ");
  for (int attempt = 0; attempt < 2 && !result.new_type; ++attempt) {
    std::vector<std::string> descriptions;
    for (std::size_t idx : sample_without_replacement(rng, snapshot.size(), 3)) {
      descriptions.push_back(snapshot[idx].description);
    }
    llm::ChatRequest req = configure(llm::render(
        templates.new_type, {{"KNOWN_TYPES", known},
                             {"CONTRADICTION_TYPE_DESCRIPTIONS", text::join(descriptions, "\n\n")}}));
    llm::ChatResponse resp;
    try {
      resp = client.complete(req);
    } catch (const TransportError& e) {
      ++result.rejects["transport"];
      result.notes.push_back(std::string("new type: ") + e.what());
      continue;
    }
    ContradictionType t;
    try {
      t = parse_new_type(resp.content);
    } catch (const FormatReject& e) {
      ++result.rejects["new_type_format"];
      result.notes.push_back(std::string("new type: ") + e.what());
      continue;
    }
    auto dup = std::find_if(pool.types().begin(), pool.types().end(),
                            [&](const ContradictionType& o) { return near_duplicate(t, o); });
    if (dup != pool.types().end()) {
      if (!options.keep_duplicates) {
        ++result.rejects["new_type_duplicate"];
        result.notes.push_back("new type " + t.name + " duplicates " + dup->name);
        continue;
      }
      const std::string base = t.name;
      for (int k = 2; pool.contains_key(t.key()); ++k) {
        t.name = base + " (" + std::to_string(k) + ")";
      }
    }
    pool.add(t);
    result.new_type = std::move(t);
  }
  if (!result.new_type) result.notes.push_back("pool did not grow");
  pool.set_iterations_completed(result.iteration_index + 1);
  return result;
}

}  // namespace contragen::typology
