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

#include "contragen/transport.h"

#include <cstdlib>
#include <thread>

#include "contragen/digest.h"
#include "contragen/errors.h"
#include "httplib.h"

namespace contragen::llm {

namespace {

bool env_refuses() {
  const char* v = std::getenv("CONTRAGEN_REFUSE_NETWORK");
  return v != nullptr && std::string_view(v) == "1";
}

std::atomic<bool>& refused_flag() {
  static std::atomic<bool> flag{env_refuses()};
  return flag;
}

std::atomic<std::size_t> g_refused_attempts{0};

bool is_loopback(std::string_view origin) {
  std::size_t host = origin.find("://");
  host = host == std::string_view::npos ? 0 : host + 3;
  std::string_view rest = origin.substr(host);
  for (std::string_view h : {"127.0.0.1", "localhost", "[::1]"}) {
    if (rest.substr(0, h.size()) == h && (rest.size() == h.size() || rest[h.size()] == ':')) {
      return true;
    }
  }
  return false;
}

void guard_network(std::string_view origin) {
  if (network_refused() && !is_loopback(origin)) {
    ++g_refused_attempts;
    throw TransportError("network access refused (CONTRAGEN_REFUSE_NETWORK)");
  }
}

bool retryable(int status) { return status == 429 || (status >= 500 && status <= 599); }

}  // namespace

void set_network_refused(bool refused) { refused_flag() = refused; }
bool network_refused() { return refused_flag(); }
std::size_t refused_connection_attempts() { return g_refused_attempts; }

HttpOptions http_options_from_env() {
  HttpOptions o;
  const char* key = std::getenv(kApiKeyEnv);
  if (key == nullptr || *key == '\0') {
    throw PreconditionError(std::string(kApiKeyEnv) + " is not set");
  }
  o.api_key = key;
  if (const char* url = std::getenv(kBaseUrlEnv); url != nullptr && *url != '\0') {
    o.base_url = url;
  }
  return o;
}

nlohmann::json wire_body(const ChatRequest& req) {
  nlohmann::json msgs = nlohmann::json::array();
  for (const ChatMessage& m : req.messages) {
    msgs.push_back({{"role", role_name(m.role)}, {"content", m.content}});
  }
  return {{"model", req.model_id},
          {"messages", std::move(msgs)},
          {"max_tokens", req.max_tokens},
          {"temperature", req.temperature}};
}

ChatResponse parse_wire_response(std::string_view body) {
  try {
    auto j = nlohmann::json::parse(body);
    const auto& choice = j.at("choices").at(0);
    ChatResponse r;
    r.content = choice.at("message").at("content").get<std::string>();
    if (choice.contains("finish_reason") && choice["finish_reason"].is_string()) {
      r.finish_reason = choice["finish_reason"].get<std::string>();
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw TransportError(std::string("malformed completion response: ") + e.what());
  }
}

HttpTransport::HttpTransport(HttpOptions options) : options_(std::move(options)) {
  const std::string& url = options_.base_url;
  std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw PreconditionError("endpoint URL without scheme: " + url);
  }
  std::size_t path_start = url.find('/', scheme_end + 3);
  origin_ = url.substr(0, path_start);
  std::string prefix = path_start == std::string::npos ? "" : url.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  path_ = prefix + "/chat/completions";
  if (options_.max_attempts < 1) throw PreconditionError("max_attempts must be positive");
}

ChatResponse HttpTransport::send(const ChatRequest& req, const std::string& /*key*/) {
  req.validate();
  const std::string body = wire_body(req).dump();
  httplib::Headers headers{{"Authorization", "Bearer " + options_.api_key}};
  std::string last_error;
  int last_status = 0;
  auto backoff = options_.initial_backoff;
  for (int attempt = 1; attempt <= options_.max_attempts; ++attempt) {
    guard_network(origin_);
    httplib::Client client(origin_);
    client.set_connection_timeout(options_.timeout);
    client.set_read_timeout(options_.timeout);
    client.set_write_timeout(options_.timeout);
    auto res = client.Post(path_, headers, body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      last_status = 0;
    } else if (res->status == 200) {
      return parse_wire_response(res->body);
    } else {
      last_status = res->status;
      last_error = "HTTP " + std::to_string(res->status);
      if (!retryable(res->status)) break;
    }
    if (attempt < options_.max_attempts) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
  }
  throw TransportError(origin_ + path_ + ": " + last_error, last_status);
}

ChatResponse RefusingTransport::send(const ChatRequest& /*req*/, const std::string& /*key*/) {
  ++attempts_;
  throw TransportError("network access refused");
}

ChatResponse ReplayTransport::send(const ChatRequest& /*req*/, const std::string& key) {
  if (auto r = cassette_.lookup(key)) return *r;
  throw CassetteMiss(key);
}

RecordingTransport::RecordingTransport(std::unique_ptr<Transport> live, Cassette cassette,
                                       std::filesystem::path path, Clock clock)
    : live_(std::move(live)),
      cassette_(std::move(cassette)),
      path_(std::move(path)),
      clock_(clock ? std::move(clock) : Clock(utc_timestamp)) {}

ChatResponse RecordingTransport::send(const ChatRequest& req, const std::string& key) {
  ChatResponse resp = live_->send(req, key);
  std::lock_guard lock(mu_);
  cassette_.put(key, req, resp, clock_());
  cassette_.save(path_);
  return resp;
}

Cassette RecordingTransport::snapshot() const {
  std::lock_guard lock(mu_);
  return cassette_;
}

}  // namespace contragen::llm
