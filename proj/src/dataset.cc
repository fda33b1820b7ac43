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

#include "contragen/dataset.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "contragen/errors.h"
#include "contragen/rng.h"
#include "contragen/text.h"

namespace contragen::dataset {

namespace {

std::string type_key(const SamplePair& s) {
  std::string key = text::normalize_key(s.type);
  return key.empty() ? std::string(kNoType) : key;
}

bool is_generated(const SamplePair& s) {
  auto it = s.provenance.find("type_origin");
  return it != s.provenance.end() && it->is_string() && *it == "generated";
}

constexpr std::uint64_t kBalanceSalt = 0x62616c616e6365ULL;  // "balance"

}  // namespace

nlohmann::json to_json(const Manifest& m) {
  nlohmann::json sources = nlohmann::json::array();
  for (const SourceDigest& d : m.sources) {
    sources.push_back({{"path", d.path}, {"sha256", d.sha256}, {"records", d.records}});
  }
  return {{"counts", m.counts},
          {"labels", m.labels},
          {"rng_seed", m.rng_seed},
          {"balance", m.balance},
          {"duplicates_removed", m.duplicates_removed},
          {"noncontradictions_available", m.noncontradictions_available},
          {"sources", sources}};
}

Manifest count(const std::vector<SamplePair>& samples) {
  Manifest m;
  for (const SamplePair& s : samples) {
    ++m.counts[std::string(method_name(s.method))][type_key(s)];
    ++m.labels[std::string(label_name(s.label))];
  }
  return m;
}

Dataset assemble(const std::vector<std::vector<SamplePair>>& contradiction_sources,
                 const std::vector<SamplePair>& noncontradictions, const AssembleOptions& options) {
  Dataset d;
  std::set<std::pair<std::string, std::string>> seen;
  std::size_t duplicates = 0;
  for (const auto& source : contradiction_sources) {
    for (const SamplePair& s : source) {
      if (seen.emplace(s.premise, s.hypothesis).second) {
        d.samples.push_back(s);
      } else {
        ++duplicates;
      }
    }
  }
  const std::size_t contradictions = d.samples.size();

  std::vector<const SamplePair*> supply;
  for (const SamplePair& s : noncontradictions) {
    if (seen.emplace(s.premise, s.hypothesis).second) {
      supply.push_back(&s);
    } else {
      ++duplicates;
    }
  }
  if (options.balance) {
    if (supply.size() < contradictions) {
      throw AssemblyError("balancing needs " + std::to_string(contradictions) +
                          " non-contradictions but only " + std::to_string(supply.size()) +
                          " are available");
    }
    Rng rng(mix_seed(options.seed, kBalanceSalt));
    std::vector<std::size_t> picked = sample_without_replacement(rng, supply.size(), contradictions);
    std::sort(picked.begin(), picked.end());
    for (std::size_t i : picked) d.samples.push_back(*supply[i]);
  } else {
    for (const SamplePair* s : supply) d.samples.push_back(*s);
  }

  d.manifest = count(d.samples);
  d.manifest.rng_seed = options.seed;
  d.manifest.balance = options.balance;
  d.manifest.duplicates_removed = duplicates;
  d.manifest.noncontradictions_available = supply.size();
  d.manifest.sources = options.sources;
  return d;
}

NonContradictionRead parse_noncontradictions(std::istream& in, std::string_view source) {
  NonContradictionRead out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      auto field = [&](const char* a, const char* b) -> std::string {
        if (j.contains(a)) return j.at(a).get<std::string>();
        return j.at(b).get<std::string>();
      };
      const std::string premise = field("premise", "sentence1");
      const std::string hypothesis = field("hypothesis", "sentence2");
      const std::string gold = field("label", "gold_label");
      if (gold == "contradiction" || gold == "-") {
        ++out.skipped;
        continue;
      }
      if (gold != "entailment" && gold != "neutral" && gold != "non_contradiction") {
        throw ParseError(std::string(source), line_no, "unexpected gold label '" + gold + "'");
      }
      SamplePair s;
      s.premise = premise;
      s.hypothesis = hypothesis;
      s.label = Label::kNonContradiction;
      s.type = std::string(kNoType);
      s.method = Method::kExternal;
      s.provenance = {{"gold_label", gold}, {"source_line", line_no}};
      if (s.premise.empty() || s.hypothesis.empty()) {
        throw ParseError(std::string(source), line_no, "empty premise or hypothesis");
      }
      out.samples.push_back(std::move(s));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string(source), line_no, e.what());
    }
  }
  return out;
}

NonContradictionRead read_noncontradictions(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open non-contradiction file " + path.string());
  return parse_noncontradictions(in, path.string());
}

void write_jsonl(const std::vector<SamplePair>& samples, std::ostream& out) {
  for (const SamplePair& s : samples) out << nlohmann::json(s).dump() << '\n';
}

void write_jsonl(const std::vector<SamplePair>& samples, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  write_jsonl(samples, out);
  if (!out) throw IoError("cannot write " + path.string());
}

std::vector<SamplePair> read_jsonl(std::istream& in, std::string_view source) {
  std::vector<SamplePair> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      out.push_back(nlohmann::json::parse(line).get<SamplePair>());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string(source), line_no, e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(source), line_no, e.what());
    }
  }
  return out;
}

std::vector<SamplePair> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_jsonl(in, path.string());
}

Stats compute_stats(const std::vector<SamplePair>& samples) {
  Stats st;
  for (Method m : {Method::kMethod1, Method::kMethod2, Method::kMethod3, Method::kExternal}) {
    std::map<std::string, TypeRow> rows;
    MethodStats ms;
    ms.method = std::string(method_name(m));
    for (const SamplePair& s : samples) {
      if (s.method != m) continue;
      TypeRow& r = rows[type_key(s)];
      r.key = type_key(s);
      ++r.count;
      r.generated = r.generated || is_generated(s);
      ++ms.total;
      if (is_generated(s)) ++ms.generated_total;
    }
    for (auto& [k, r] : rows) ms.types.push_back(r);
    st.methods.push_back(std::move(ms));
  }
  st.labels = {{"contradiction", 0}, {"non_contradiction", 0}};
  for (const SamplePair& s : samples) ++st.labels[std::string(label_name(s.label))];
  st.total = static_cast<int>(samples.size());
  return st;
}

std::string render_table(const Stats& s) {
  std::size_t width = 24;
  for (const MethodStats& m : s.methods) {
    for (const TypeRow& r : m.types) width = std::max(width, r.key.size() + 2);
  }
  std::ostringstream out;
  auto row = [&](std::string_view a, std::string_view b, int n) {
    out << std::left << std::setw(10) << a << std::setw(static_cast<int>(width)) << b
        << std::right << std::setw(6) << n << '\n';
  };
  out << std::left << std::setw(10) << "method" << std::setw(static_cast<int>(width)) << "type"
      << std::right << std::setw(6) << "count" << '\n';
  for (const MethodStats& m : s.methods) {
    for (const TypeRow& r : m.types) row(m.method, r.key, r.count);
    if (m.generated_total > 0) row(m.method, "other (generated)", m.generated_total);
    row(m.method, "total", m.total);
  }
  for (const auto& [label, n] : s.labels) row("label", label, n);
  row("all", "total", s.total);
  return out.str();
}

nlohmann::json to_json(const Stats& s) {
  nlohmann::json methods = nlohmann::json::object();
  for (const MethodStats& m : s.methods) {
    nlohmann::json types = nlohmann::json::object();
    nlohmann::json generated = nlohmann::json::array();
    for (const TypeRow& r : m.types) {
      types[r.key] = r.count;
      if (r.generated) generated.push_back(r.key);
    }
    methods[m.method] = {{"types", types},
                         {"generated_types", generated},
                         {"other", m.generated_total},
                         {"total", m.total}};
  }
  return {{"methods", methods}, {"labels", s.labels}, {"total", s.total}};
}

}  // namespace contragen::dataset
