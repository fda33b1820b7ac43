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

#include "contragen/prompt_template.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>

#include "contragen/errors.h"

namespace contragen::llm {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_run_char(char c) { return is_upper(c) || c == '_'; }
bool is_alpha(char c) { return is_upper(c) || (c >= 'a' && c <= 'z'); }

// Calls on_text for literal stretches and on_placeholder for each
// placeholder, in order.
void tokenize(std::string_view text, const std::function<void(std::string_view)>& on_text,
              const std::function<void(std::string_view)>& on_placeholder) {
  std::size_t i = 0;
  std::size_t literal = 0;
  while (i < text.size()) {
    if (text[i] == '[') {
      std::size_t close = text.find(']', i);
      i = close == std::string_view::npos ? text.size() : close + 1;
      continue;
    }
    if (is_upper(text[i]) && (i == 0 || !is_alpha(text[i - 1]))) {
      std::size_t j = i;
      while (j < text.size() && is_run_char(text[j])) ++j;
      bool bounded = j == text.size() || !is_alpha(text[j]);
      if (j - i >= 2 && bounded) {
        on_text(text.substr(literal, i - literal));
        on_placeholder(text.substr(i, j - i));
        literal = j;
      }
      i = j;
      continue;
    }
    ++i;
  }
  on_text(text.substr(literal));
}

}  // namespace

std::vector<std::string> scan_placeholders(std::string_view text) {
  std::vector<std::string> out;
  tokenize(
      text, [](std::string_view) {},
      [&](std::string_view p) {
        if (std::find(out.begin(), out.end(), p) == out.end()) out.emplace_back(p);
      });
  return out;
}

void PromptTemplate::validate() const {
  std::set<std::string, std::less<>> declared(placeholders.begin(), placeholders.end());
  if (declared.size() != placeholders.size()) {
    throw TemplateError("template " + name + ": duplicate placeholder declaration");
  }
  std::set<std::string, std::less<>> used;
  for (const ChatMessage& m : messages) {
    for (const std::string& p : scan_placeholders(m.content)) {
      if (!declared.contains(p)) {
        throw TemplateError("template " + name + ": undeclared placeholder " + p);
      }
      used.insert(p);
    }
  }
  for (const std::string& p : placeholders) {
    if (!used.contains(p)) {
      throw TemplateError("template " + name + ": placeholder " + p + " never used");
    }
  }
}

PromptTemplate template_from_json(const nlohmann::json& j) {
  PromptTemplate t;
  try {
    t.name = j.at("name").get<std::string>();
    t.placeholders = j.at("placeholders").get<std::vector<std::string>>();
    for (const auto& m : j.at("messages")) {
      const auto role = m.at("role").get<std::string>();
      auto r = parse_role(role);
      if (!r) throw TemplateError("template " + t.name + ": unknown role '" + role + "'");
      t.messages.push_back({*r, m.at("content").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw TemplateError("malformed template: " + std::string(e.what()));
  }
  if (t.messages.empty() || t.messages.front().role != Role::kSystem) {
    throw TemplateError("template " + t.name + ": first message must have role system");
  }
  t.validate();
  return t;
}

PromptTemplate load_template(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open template " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string(), 0, e.what());
  }
  try {
    return template_from_json(j);
  } catch (const TemplateError& e) {
    throw TemplateError(path.string() + ": " + e.what());
  }
}

ChatRequest render(const PromptTemplate& t, const Bindings& bindings) {
  t.validate();
  for (const std::string& p : t.placeholders) {
    if (!bindings.contains(p)) throw TemplateError("unbound placeholder " + p);
  }
  for (const auto& [k, v] : bindings) {
    if (std::find(t.placeholders.begin(), t.placeholders.end(), k) == t.placeholders.end()) {
      throw TemplateError("unexpected binding " + k);
    }
  }
  ChatRequest req;
  for (const ChatMessage& m : t.messages) {
    std::string out;
    out.reserve(m.content.size());
    tokenize(
        m.content, [&](std::string_view s) { out += s; },
        [&](std::string_view p) { out += bindings.find(p)->second; });
    req.messages.push_back({m.role, std::move(out)});
  }
  return req;
}

PromptTemplate load_bundled_template(const std::filesystem::path& data_dir,
                                     std::string_view name) {
  return load_template(data_dir / "prompts" / (std::string(name) + ".json"));
}

}  // namespace contragen::llm
