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

// Chat prompt templates with ALL-CAPS placeholders.
//
// A placeholder is a maximal run of [A-Z_] of length two or more, starting
// with a letter, that is not enclosed in square brackets. Bracketed words
// such as [PREMISE] are part of the requested output format and are copied
// verbatim. Rendering is a single left-to-right pass, so bound values are
// never rescanned.

#ifndef CONTRAGEN_PROMPT_TEMPLATE_H_
#define CONTRAGEN_PROMPT_TEMPLATE_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "contragen/chat.h"

namespace contragen::llm {

using Bindings = std::map<std::string, std::string, std::less<>>;

struct PromptTemplate {
  std::string name;
  std::vector<std::string> placeholders;
  std::vector<ChatMessage> messages;

  // Throws TemplateError if a placeholder occurs in the text without being
  // declared, or is declared without occurring.
  void validate() const;
};

// {name, placeholders: [..], messages: [{role, content}]}.
PromptTemplate template_from_json(const nlohmann::json& j);
PromptTemplate load_template(const std::filesystem::path& path);

// The placeholders occurring in `text`, in order of first occurrence.
std::vector<std::string> scan_placeholders(std::string_view text);

// Throws TemplateError "unbound placeholder X" or "unexpected binding X".
ChatRequest render(const PromptTemplate& t, const Bindings& bindings);

// Names of the bundled templates.
inline constexpr std::string_view kMethod2Template = "method2";
inline constexpr std::string_view kInstanceTemplate = "instance";
inline constexpr std::string_view kNewTypeTemplate = "new_type";

// data_dir/prompts/<name>.json
PromptTemplate load_bundled_template(const std::filesystem::path& data_dir,
                                     std::string_view name);

}  // namespace contragen::llm

#endif  // CONTRAGEN_PROMPT_TEMPLATE_H_
