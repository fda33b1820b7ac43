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

#ifndef CONTRAGEN_SAMPLE_H_
#define CONTRAGEN_SAMPLE_H_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace contragen {

enum class Label { kContradiction, kNonContradiction };
enum class Method { kMethod1, kMethod2, kMethod3, kExternal };

std::string_view label_name(Label l);
std::string_view method_name(Method m);
std::optional<Label> parse_label(std::string_view s);
std::optional<Method> parse_method(std::string_view s);

// One premise/hypothesis pair. `type` is the contradiction type tag
// ("antonymy", "negation", "numerical", or a typology name); provenance is a
// free-form object whose fields depend on the producing method.
struct SamplePair {
  std::string premise;
  std::string hypothesis;
  Label label = Label::kContradiction;
  std::string type;
  Method method = Method::kMethod1;
  nlohmann::json provenance = nlohmann::json::object();

  bool operator==(const SamplePair&) const = default;
};

// The dataset JSONL record: premise, hypothesis, label, type, method,
// provenance. from_json throws nlohmann::json::exception or
// std::invalid_argument on a bad record.
void to_json(nlohmann::json& j, const SamplePair& s);
void from_json(const nlohmann::json& j, SamplePair& s);

}  // namespace contragen

#endif  // CONTRAGEN_SAMPLE_H_
