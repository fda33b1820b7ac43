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

// Recorded chat completions keyed by request fingerprint.
//
// A client that sends the same request several times (the self-instruct
// loop asks for instances of a type once per iteration) needs a distinct
// recording per occurrence. The first occurrence is stored under the bare
// fingerprint, the k-th repeat under "<fingerprint>/<k>".

#ifndef CONTRAGEN_CASSETTE_H_
#define CONTRAGEN_CASSETTE_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "contragen/chat.h"

namespace contragen::llm {

std::string occurrence_key(const std::string& fingerprint, int occurrence);

struct CassetteEntry {
  nlohmann::json request;  // canonical form
  std::string response_content;
  std::string finish_reason;
  std::string recorded_at;

  bool operator==(const CassetteEntry&) const = default;
};

// Not synchronized; the transports that own a cassette serialize writes.
class Cassette {
 public:
  Cassette() = default;

  // File: JSON object key -> {request, response_content, finish_reason,
  // recorded_at}. Throws IoError when missing, ParseError when malformed.
  static Cassette load(const std::filesystem::path& path);
  static Cassette from_json(const nlohmann::json& j, std::string_view source = "<cassette>");
  // Empty cassette when the file does not exist.
  static Cassette load_or_empty(const std::filesystem::path& path);

  nlohmann::json to_json() const;
  // Written to a temporary sibling and renamed into place.
  void save(const std::filesystem::path& path) const;

  std::optional<ChatResponse> lookup(const std::string& key) const;
  void put(const std::string& key, const ChatRequest& req, const ChatResponse& resp,
           std::string recorded_at);

  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, CassetteEntry>& entries() const { return entries_; }

 private:
  std::map<std::string, CassetteEntry> entries_;
};

}  // namespace contragen::llm

#endif  // CONTRAGEN_CASSETTE_H_
