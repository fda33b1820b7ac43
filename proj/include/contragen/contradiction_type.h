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

#ifndef CONTRAGEN_CONTRADICTION_TYPE_H_
#define CONTRAGEN_CONTRADICTION_TYPE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace contragen {

enum class TypeOrigin { kSeed, kGenerated };

std::string_view origin_name(TypeOrigin o);
std::optional<TypeOrigin> parse_origin(std::string_view s);

struct ContradictionType {
  std::string name;
  // The full description, examples included, as sent to the model.
  std::string description;
  TypeOrigin origin = TypeOrigin::kSeed;

  // Lowercase, ASCII punctuation removed, whitespace collapsed.
  std::string key() const;

  bool operator==(const ContradictionType&) const = default;
};

void to_json(nlohmann::json& j, const ContradictionType& t);
// Throws std::invalid_argument on a missing or empty field.
void from_json(const nlohmann::json& j, ContradictionType& t);

// A file {types: [{name, description, origin}]}. Throws IoError/ParseError.
std::vector<ContradictionType> load_types(const std::filesystem::path& path);

// data_dir/types/seed_types.json
std::vector<ContradictionType> load_seed_types(const std::filesystem::path& data_dir);

// The entries of `all` whose keys match `names`, in the order of `names`.
// Throws std::invalid_argument naming the first unknown type.
std::vector<ContradictionType> select_types(const std::vector<ContradictionType>& all,
                                            const std::vector<std::string>& names);

}  // namespace contragen

#endif  // CONTRAGEN_CONTRADICTION_TYPE_H_
