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

// Ways of turning a chat request into a response: a live OpenAI-compatible
// HTTP endpoint, cassette replay, and live calls recorded into a cassette.

#ifndef CONTRAGEN_TRANSPORT_H_
#define CONTRAGEN_TRANSPORT_H_

#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <string>

#include "contragen/cassette.h"
#include "contragen/chat.h"

namespace contragen::llm {

// Process-wide switch checked by every network-capable transport before it
// opens a connection to a non-loopback host. Initialized from
// CONTRAGEN_REFUSE_NETWORK=1.
void set_network_refused(bool refused);
bool network_refused();
// Connection attempts rejected so far.
std::size_t refused_connection_attempts();

class Transport {
 public:
  virtual ~Transport() = default;
  // `key` is the cassette key of this occurrence of the request.
  virtual ChatResponse send(const ChatRequest& req, const std::string& key) = 0;
};

struct HttpOptions {
  std::string base_url = "https://api.openai.com/v1";
  std::string api_key;
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{1000};
  std::chrono::seconds timeout{120};
};

inline constexpr const char* kApiKeyEnv = "OPENAI_API_KEY";
inline constexpr const char* kBaseUrlEnv = "OPENAI_BASE_URL";

// Reads the API key and optional base URL. Throws PreconditionError when
// the key is unset.
HttpOptions http_options_from_env();

// The request body sent to /chat/completions.
nlohmann::json wire_body(const ChatRequest& req);
// choices[0].message.content and finish_reason. Throws TransportError.
ChatResponse parse_wire_response(std::string_view body);

class HttpTransport : public Transport {
 public:
  explicit HttpTransport(HttpOptions options);
  ChatResponse send(const ChatRequest& req, const std::string& key) override;

  const HttpOptions& options() const { return options_; }

 private:
  HttpOptions options_;
  std::string origin_;  // scheme://host[:port]
  std::string path_;    // prefix + /chat/completions
};

// Fails every call, counting it; stands in for the network in tests.
class RefusingTransport : public Transport {
 public:
  ChatResponse send(const ChatRequest& req, const std::string& key) override;
  std::size_t attempts() const { return attempts_; }

 private:
  std::atomic<std::size_t> attempts_{0};
};

// Lookups only; a miss raises CassetteMiss.
class ReplayTransport : public Transport {
 public:
  explicit ReplayTransport(Cassette cassette) : cassette_(std::move(cassette)) {}
  ChatResponse send(const ChatRequest& req, const std::string& key) override;

  const Cassette& cassette() const { return cassette_; }

 private:
  const Cassette cassette_;
};

// Forwards to `live` and appends each response to the cassette, saving the
// file after every append.
class RecordingTransport : public Transport {
 public:
  using Clock = std::function<std::string()>;

  RecordingTransport(std::unique_ptr<Transport> live, Cassette cassette,
                     std::filesystem::path path, Clock clock = {});
  ChatResponse send(const ChatRequest& req, const std::string& key) override;

  Cassette snapshot() const;

 private:
  std::unique_ptr<Transport> live_;
  mutable std::mutex mu_;
  Cassette cassette_;
  std::filesystem::path path_;
  Clock clock_;
};

}  // namespace contragen::llm

#endif  // CONTRAGEN_TRANSPORT_H_
