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

#include "contragen/sample.h"

#include <stdexcept>

namespace contragen {

std::string_view label_name(Label l) {
  return l == Label::kContradiction ? "contradiction" : "non_contradiction";
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kMethod1: return "method1";
    case Method::kMethod2: return "method2";
    case Method::kMethod3: return "method3";
    case Method::kExternal: return "external";
  }
  return "external";
}

std::optional<Label> parse_label(std::string_view s) {
  if (s == "contradiction") return Label::kContradiction;
  if (s == "non_contradiction") return Label::kNonContradiction;
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view s) {
  if (s == "method1") return Method::kMethod1;
  if (s == "method2") return Method::kMethod2;
  if (s == "method3") return Method::kMethod3;
  if (s == "external") return Method::kExternal;
  return std::nullopt;
}

void to_json(nlohmann::json& j, const SamplePair& s) {
  j = nlohmann::json{{"premise", s.premise},
                     {"hypothesis", s.hypothesis},
                     {"label", label_name(s.label)},
                     {"type", s.type},
                     {"method", method_name(s.method)},
                     {"provenance", s.provenance}};
}

void from_json(const nlohmann::json& j, SamplePair& s) {
  if (!j.is_object()) throw std::invalid_argument("sample record is not a JSON object");
  s.premise = j.at("premise").get<std::string>();
  s.hypothesis = j.at("hypothesis").get<std::string>();
  const auto label = j.at("label").get<std::string>();
  auto l = parse_label(label);
  if (!l) throw std::invalid_argument("unknown label '" + label + "'");
  s.label = *l;
  s.type = j.at("type").get<std::string>();
  const auto method = j.at("method").get<std::string>();
  auto m = parse_method(method);
  if (!m) throw std::invalid_argument("unknown method '" + method + "'");
  s.method = *m;
  s.provenance = j.value("provenance", nlohmann::json::object());
  if (!s.provenance.is_object()) throw std::invalid_argument("provenance must be an object");
}

}  // namespace contragen
