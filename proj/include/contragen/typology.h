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

// The self-instruct loop over a growing pool of contradiction types: each
// iteration asks for instances of every pool type, then for one new type
// described after three sampled existing descriptions.

#ifndef CONTRAGEN_TYPOLOGY_H_
#define CONTRAGEN_TYPOLOGY_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contragen/client.h"
#include "contragen/contradiction_type.h"
#include "contragen/prompt_template.h"
#include "contragen/sample.h"

namespace contragen::typology {

class TypePool {
 public:
  TypePool() = default;
  // Throws PreconditionError on duplicate keys or a non-seed entry.
  TypePool(std::vector<ContradictionType> seeds, std::uint64_t rng_seed);

  // False (and no change) when the key is already present.
  bool add(ContradictionType t);
  bool contains_key(std::string_view key) const;

  const std::vector<ContradictionType>& types() const { return types_; }
  std::size_t size() const { return types_.size(); }
  std::size_t seed_count() const { return seed_count_; }
  std::uint64_t rng_seed() const { return rng_seed_; }
  int iterations_completed() const { return iterations_completed_; }
  void set_iterations_completed(int n) { iterations_completed_ = n; }

  // {seed_count, rng_seed, iterations_completed, types: [...]}.
  nlohmann::json to_json() const;
  // Throws ParseError when the invariants do not hold.
  static TypePool from_json(const nlohmann::json& j, std::string_view source = "<pool>");
  static TypePool load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

 private:
  std::vector<ContradictionType> types_;
  std::size_t seed_count_ = 0;
  std::uint64_t rng_seed_ = 0;
  int iterations_completed_ = 0;
};

struct InstanceParse {
  // premise/hypothesis only; type and method are left to the caller.
  std::vector<SamplePair> pairs;
  std::size_t rejects = 0;
};

// Reads "Premise: ..., Hypothesis: ..." pairs, one per line or split over
// consecutive lines. List numbering, blank lines, quotes and brackets are
// tolerated. A pair with a side shorter than three words, a Premise without
// a Hypothesis, and any stray text count as one reject each.
InstanceParse parse_instance_lines(std::string_view text);

// "Contradiction type name: X, Contradiction type description: Y". The
// "Contradiction type" prefix is optional. Throws FormatReject.
ContradictionType parse_new_type(std::string_view text);

// Token-set Jaccard similarity of two texts after lowercasing and
// punctuation removal.
double jaccard(std::string_view a, std::string_view b);

inline constexpr double kDuplicateThreshold = 0.6;

bool near_duplicate(const ContradictionType& a, const ContradictionType& b,
                    double threshold = kDuplicateThreshold);

struct LoopOptions {
  int per_type = 5;
  // Add near-duplicate types anyway; an exact key clash gets a " (k)" name
  // suffix so keys stay unique.
  bool keep_duplicates = false;
  std::string model_id = "gpt-4";
  int max_tokens = 512;
  double temperature = 1.0;
};

struct Templates {
  const llm::PromptTemplate& instance;
  const llm::PromptTemplate& new_type;
};

struct IterationResult {
  int iteration_index = 0;
  std::size_t pool_size_at_start = 0;
  std::vector<SamplePair> instances;
  std::optional<ContradictionType> new_type;
  std::map<std::string, int> rejects;
  std::vector<std::string> notes;
};

nlohmann::json summary_json(const IterationResult& r);

// Instance requests for every type present at the start of the iteration,
// then at most two new-type attempts. Increments iterations_completed.
// Throws PreconditionError when the pool has fewer than three types.
IterationResult run_iteration(TypePool& pool, llm::ChatClient& client, const Templates& templates,
                              const LoopOptions& options);

}  // namespace contragen::typology

#endif  // CONTRAGEN_TYPOLOGY_H_
