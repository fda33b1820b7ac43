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

#include "contragen/contradiction_type.h"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "contragen/errors.h"
#include "contragen/text.h"

namespace contragen {

std::string_view origin_name(TypeOrigin o) {
  return o == TypeOrigin::kSeed ? "seed" : "generated";
}

std::optional<TypeOrigin> parse_origin(std::string_view s) {
  if (s == "seed") return TypeOrigin::kSeed;
  if (s == "generated") return TypeOrigin::kGenerated;
  return std::nullopt;
}

std::string ContradictionType::key() const { return text::normalize_key(name); }

void to_json(nlohmann::json& j, const ContradictionType& t) {
  j = nlohmann::json{
      {"name", t.name}, {"description", t.description}, {"origin", origin_name(t.origin)}};
}

void from_json(const nlohmann::json& j, ContradictionType& t) {
  if (!j.is_object()) throw std::invalid_argument("contradiction type is not an object");
  t.name = j.at("name").get<std::string>();
  t.description = j.at("description").get<std::string>();
  const auto origin = j.value("origin", std::string("seed"));
  auto o = parse_origin(origin);
  if (!o) throw std::invalid_argument("unknown type origin '" + origin + "'");
  t.origin = *o;
  if (text::trim(t.name).empty()) throw std::invalid_argument("contradiction type without name");
  if (text::trim(t.description).empty()) {
    throw std::invalid_argument("contradiction type " + t.name + " has no description");
  }
}

std::vector<ContradictionType> load_types(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open type file " + path.string());
  try {
    auto j = nlohmann::json::parse(in);
    return j.at("types").get<std::vector<ContradictionType>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string(), 0, e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path.string(), 0, e.what());
  }
}

std::vector<ContradictionType> load_seed_types(const std::filesystem::path& data_dir) {
  return load_types(data_dir / "types" / "seed_types.json");
}

std::vector<ContradictionType> select_types(const std::vector<ContradictionType>& all,
                                            const std::vector<std::string>& names) {
  std::vector<ContradictionType> out;
  for (const std::string& n : names) {
    const std::string key = text::normalize_key(n);
    auto it = std::find_if(all.begin(), all.end(),
                           [&](const ContradictionType& t) { return t.key() == key; });
    if (it == all.end()) throw std::invalid_argument("unknown contradiction type '" + n + "'");
    out.push_back(*it);
  }
  return out;
}

}  // namespace contragen
