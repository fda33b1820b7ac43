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

#ifndef CONTRAGEN_CLIENT_H_
#define CONTRAGEN_CLIENT_H_

#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "contragen/chat.h"
#include "contragen/transport.h"

namespace contragen::llm {

// Refill `rate` tokens per second up to `burst`; rate 0 never blocks.
class TokenBucket {
 public:
  TokenBucket(double rate, double burst);
  void acquire();

 private:
  using Clock = std::chrono::steady_clock;
  double rate_;
  double burst_;
  double tokens_;
  Clock::time_point last_;
  std::mutex mu_;
};

struct ClientOptions {
  std::size_t max_in_flight = 4;
  double requests_per_second = 0;
  double burst = 1;
};

struct Completion {
  std::string key;
  std::string fingerprint;
  std::optional<ChatResponse> response;
  std::string error;  // set when the transport failed

  bool ok() const { return response.has_value(); }
};

// Safe for concurrent use. Each request is sent under its occurrence key
// (see cassette.h), counted per client instance.
class ChatClient {
 public:
  explicit ChatClient(Transport& transport, ClientOptions options = {});

  // Throws TransportError.
  ChatResponse complete(const ChatRequest& req);
  // Keys are assigned in index order before dispatch, so the result is
  // independent of completion order. Transport errors are reported per
  // item; any other exception is rethrown after all workers stop.
  std::vector<Completion> complete_all(const std::vector<ChatRequest>& reqs);

  std::size_t requests_sent() const;

 private:
  std::string next_key(const std::string& fingerprint);
  Completion send_one(const ChatRequest& req, std::string key, std::string fingerprint);

  Transport& transport_;
  ClientOptions options_;
  TokenBucket bucket_;
  mutable std::mutex mu_;
  std::map<std::string, int> occurrences_;
  std::size_t sent_ = 0;
};

}  // namespace contragen::llm

#endif  // CONTRAGEN_CLIENT_H_
