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

#include "contragen/chat.h"

#include <stdexcept>

#include "contragen/digest.h"

namespace contragen::llm {

std::string_view role_name(Role r) {
  switch (r) {
    case Role::kSystem: return "system";
    case Role::kUser: return "user";
    case Role::kAssistant: return "assistant";
  }
  return "user";
}

std::optional<Role> parse_role(std::string_view s) {
  if (s == "system") return Role::kSystem;
  if (s == "user") return Role::kUser;
  if (s == "assistant") return Role::kAssistant;
  return std::nullopt;
}

void ChatRequest::validate() const {
  if (messages.empty()) throw std::invalid_argument("chat request has no messages");
  if (messages.front().role != Role::kSystem) {
    throw std::invalid_argument("first chat message must have role system");
  }
  for (const ChatMessage& m : messages) {
    if (m.content.empty()) {
      throw std::invalid_argument("empty " + std::string(role_name(m.role)) + " message");
    }
  }
  if (max_tokens <= 0) throw std::invalid_argument("max_tokens must be positive");
  if (!(temperature >= 0)) throw std::invalid_argument("temperature must be >= 0");
}

nlohmann::json ChatRequest::canonical_json() const {
  nlohmann::json msgs = nlohmann::json::array();
  for (const ChatMessage& m : messages) {
    msgs.push_back({{"role", role_name(m.role)}, {"content", m.content}});
  }
  return {{"model", model_id},
          {"messages", std::move(msgs)},
          {"max_tokens", max_tokens},
          {"temperature", temperature}};
}

std::string ChatRequest::fingerprint() const { return sha256_hex(canonical_json().dump()); }

ChatRequest request_from_json(const nlohmann::json& j) {
  ChatRequest r;
  r.model_id = j.at("model").get<std::string>();
  r.max_tokens = j.at("max_tokens").get<int>();
  r.temperature = j.at("temperature").get<double>();
  r.messages.clear();
  for (const auto& m : j.at("messages")) {
    const auto role = m.at("role").get<std::string>();
    auto parsed = parse_role(role);
    if (!parsed) throw std::invalid_argument("unknown role '" + role + "'");
    r.messages.push_back({*parsed, m.at("content").get<std::string>()});
  }
  return r;
}

}  // namespace contragen::llm
