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

#include "contragen/cassette.h"

#include <fstream>

#include "contragen/errors.h"

namespace contragen::llm {

std::string occurrence_key(const std::string& fingerprint, int occurrence) {
  if (occurrence == 0) return fingerprint;
  return fingerprint + "/" + std::to_string(occurrence);
}

Cassette Cassette::from_json(const nlohmann::json& j, std::string_view source) {
  if (!j.is_object()) throw ParseError(std::string(source), 0, "cassette is not a JSON object");
  Cassette c;
  for (const auto& [key, v] : j.items()) {
    try {
      CassetteEntry e;
      e.request = v.at("request");
      e.response_content = v.at("response_content").get<std::string>();
      e.finish_reason = v.value("finish_reason", std::string("stop"));
      e.recorded_at = v.value("recorded_at", std::string());
      c.entries_.emplace(key, std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string(source), 0, "entry " + key + ": " + ex.what());
    }
  }
  return c;
}

Cassette Cassette::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open cassette " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string(), 0, e.what());
  }
  return from_json(j, path.string());
}

Cassette Cassette::load_or_empty(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return {};
  return load(path);
}

nlohmann::json Cassette::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [key, e] : entries_) {
    j[key] = {{"request", e.request},
              {"response_content", e.response_content},
              {"finish_reason", e.finish_reason},
              {"recorded_at", e.recorded_at}};
  }
  return j;
}

void Cassette::save(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write cassette " + tmp.string());
    out << to_json().dump(2) << '\n';
    if (!out) throw IoError("cannot write cassette " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::optional<ChatResponse> Cassette::lookup(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return ChatResponse{it->second.response_content, it->second.finish_reason};
}

void Cassette::put(const std::string& key, const ChatRequest& req, const ChatResponse& resp,
                   std::string recorded_at) {
  entries_[key] = {req.canonical_json(), resp.content, resp.finish_reason,
                   std::move(recorded_at)};
}

}  // namespace contragen::llm
