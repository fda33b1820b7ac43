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

// Seeded randomness with results that are identical across standard
// libraries: only std::mt19937_64's raw output is used, never the
// implementation-defined std distributions.

#ifndef CONTRAGEN_RNG_H_
#define CONTRAGEN_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace contragen {

// 64-bit FNV-1a.
std::uint64_t stable_hash(std::string_view s);

// Derives an independent seed from a base seed and a salt (splitmix64 step).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// k distinct indices from [0, population), in draw order (partial
// Fisher-Yates). Requires k <= population.
std::vector<std::size_t> sample_without_replacement(Rng& rng,
                                                    std::size_t population,
                                                    std::size_t k);

}  // namespace contragen

#endif  // CONTRAGEN_RNG_H_
