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

// Chat-completion requests and their canonical serialization.

#ifndef CONTRAGEN_CHAT_H_
#define CONTRAGEN_CHAT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace contragen::llm {

enum class Role { kSystem, kUser, kAssistant };

std::string_view role_name(Role r);
std::optional<Role> parse_role(std::string_view s);

struct ChatMessage {
  Role role = Role::kUser;
  std::string content;

  bool operator==(const ChatMessage&) const = default;
};

struct ChatRequest {
  std::vector<ChatMessage> messages;
  std::string model_id = "gpt-4";
  int max_tokens = 512;
  double temperature = 1.0;

  // Throws std::invalid_argument: no messages, first message not system,
  // empty content, non-positive max_tokens, negative temperature.
  void validate() const;

  // {max_tokens, messages[{content, role}], model, temperature} with keys
  // in lexicographic order at every level.
  nlohmann::json canonical_json() const;
  // SHA-256 hex of canonical_json().dump().
  std::string fingerprint() const;

  bool operator==(const ChatRequest&) const = default;
};

ChatRequest request_from_json(const nlohmann::json& j);

struct ChatResponse {
  std::string content;
  std::string finish_reason = "stop";

  bool operator==(const ChatResponse&) const = default;
};

}  // namespace contragen::llm

#endif  // CONTRAGEN_CHAT_H_
