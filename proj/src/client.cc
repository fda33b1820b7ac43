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

#include "contragen/client.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "contragen/errors.h"

namespace contragen::llm {

TokenBucket::TokenBucket(double rate, double burst)
    : rate_(rate), burst_(std::max(1.0, burst)), tokens_(burst_), last_(Clock::now()) {
  if (rate < 0) throw std::invalid_argument("rate limit must be >= 0");
}

void TokenBucket::acquire() {
  if (rate_ <= 0) return;
  std::unique_lock lock(mu_);
  for (;;) {
    auto now = Clock::now();
    std::chrono::duration<double> elapsed = now - last_;
    last_ = now;
    tokens_ = std::min(burst_, tokens_ + elapsed.count() * rate_);
    if (tokens_ >= 1.0) {
      tokens_ -= 1.0;
      return;
    }
    auto wait = std::chrono::duration<double>((1.0 - tokens_) / rate_);
    lock.unlock();
    std::this_thread::sleep_for(wait);
    lock.lock();
  }
}

ChatClient::ChatClient(Transport& transport, ClientOptions options)
    : transport_(transport),
      options_(options),
      bucket_(options.requests_per_second, options.burst) {
  if (options_.max_in_flight == 0) throw std::invalid_argument("max_in_flight must be positive");
}

std::string ChatClient::next_key(const std::string& fingerprint) {
  std::lock_guard lock(mu_);
  return occurrence_key(fingerprint, occurrences_[fingerprint]++);
}

std::size_t ChatClient::requests_sent() const {
  std::lock_guard lock(mu_);
  return sent_;
}

Completion ChatClient::send_one(const ChatRequest& req, std::string key,
                                std::string fingerprint) {
  Completion c{std::move(key), std::move(fingerprint), std::nullopt, {}};
  bucket_.acquire();
  {
    std::lock_guard lock(mu_);
    ++sent_;
  }
  try {
    c.response = transport_.send(req, c.key);
  } catch (const TransportError& e) {
    c.error = e.what();
  }
  return c;
}

ChatResponse ChatClient::complete(const ChatRequest& req) {
  req.validate();
  std::string fp = req.fingerprint();
  std::string key = next_key(fp);
  bucket_.acquire();
  {
    std::lock_guard lock(mu_);
    ++sent_;
  }
  return transport_.send(req, key);
}

std::vector<Completion> ChatClient::complete_all(const std::vector<ChatRequest>& reqs) {
  std::vector<std::string> fingerprints;
  std::vector<std::string> keys;
  for (const ChatRequest& r : reqs) {
    r.validate();
    fingerprints.push_back(r.fingerprint());
    keys.push_back(next_key(fingerprints.back()));
  }
  std::vector<Completion> out(reqs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next++;
      if (i >= reqs.size()) return;
      try {
        out[i] = send_one(reqs[i], keys[i], fingerprints[i]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = reqs.size();
        return;
      }
    }
  };
  const std::size_t n = std::min(options_.max_in_flight, reqs.size());
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (std::size_t t = 0; t < n; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace contragen::llm
