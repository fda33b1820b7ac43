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

// Corpus assembly: merge method outputs, remove exact duplicates, fill with
// non-contradictions, and count samples per method and type.

#ifndef CONTRAGEN_DATASET_H_
#define CONTRAGEN_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "contragen/sample.h"

namespace contragen::dataset {

inline constexpr std::string_view kNoType = "none";

struct SourceDigest {
  std::string path;
  std::string sha256;
  std::size_t records = 0;
};

struct Manifest {
  // method -> type key -> count; sums to the number of samples.
  std::map<std::string, std::map<std::string, int>> counts;
  std::map<std::string, int> labels;
  std::uint64_t rng_seed = 0;
  bool balance = true;
  std::size_t duplicates_removed = 0;
  std::size_t noncontradictions_available = 0;
  std::vector<SourceDigest> sources;
};

nlohmann::json to_json(const Manifest& m);

struct Dataset {
  std::vector<SamplePair> samples;
  Manifest manifest;
};

struct AssembleOptions {
  bool balance = true;
  std::uint64_t seed = 0;
  std::vector<SourceDigest> sources;
};

// Contradiction sources are concatenated in order and deduplicated on the
// exact (premise, hypothesis) pair, first occurrence winning.
// Non-contradictions follow, deduplicated against everything before them;
// with balance on, exactly as many as there are contradictions are drawn
// with the seeded generator and kept in input order. Throws AssemblyError
// when the supply is too small.
Dataset assemble(const std::vector<std::vector<SamplePair>>& contradiction_sources,
                 const std::vector<SamplePair>& noncontradictions, const AssembleOptions& options);

// Counts per (method, type key) and per label.
Manifest count(const std::vector<SamplePair>& samples);

// SNLI-style JSONL: premise/hypothesis/label or sentence1/sentence2/
// gold_label. Rows labelled contradiction or "-" are skipped and counted;
// entailment and neutral become non_contradiction with the gold label kept
// in provenance. Throws ParseError with the line number.
struct NonContradictionRead {
  std::vector<SamplePair> samples;
  std::size_t skipped = 0;
};
NonContradictionRead parse_noncontradictions(std::istream& in, std::string_view source);
NonContradictionRead read_noncontradictions(const std::filesystem::path& path);

void write_jsonl(const std::vector<SamplePair>& samples, std::ostream& out);
void write_jsonl(const std::vector<SamplePair>& samples, const std::filesystem::path& path);
// Throws ParseError naming the offending line.
std::vector<SamplePair> read_jsonl(std::istream& in, std::string_view source);
std::vector<SamplePair> read_jsonl(const std::filesystem::path& path);

struct TypeRow {
  std::string key;
  int count = 0;
  bool generated = false;
};

struct MethodStats {
  std::string method;
  std::vector<TypeRow> types;  // sorted by key
  int generated_total = 0;     // the "other" aggregate
  int total = 0;
};

struct Stats {
  std::vector<MethodStats> methods;  // method1, method2, method3, external
  std::map<std::string, int> labels;
  int total = 0;
};

// Types are grouped under their normalized key; a type counts as generated
// when its provenance has type_origin = "generated".
Stats compute_stats(const std::vector<SamplePair>& samples);
std::string render_table(const Stats& s);
nlohmann::json to_json(const Stats& s);

}  // namespace contragen::dataset

#endif  // CONTRAGEN_DATASET_H_
