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

// A scripted stand-in for the chat model. It recognises the three bundled
// prompts and answers each in the documented reply format, so cassettes can
// be produced without network access.

#ifndef CONTRAGEN_TOOLS_STUB_RESPONDER_H_
#define CONTRAGEN_TOOLS_STUB_RESPONDER_H_

#include <atomic>
#include <string>
#include <vector>

#include "contragen/transport.h"

namespace contragen::stub {

struct StubOptions {
  // When set, a few method-2 requests get unusable answers. For the type at
  // position t of the four profile types, the premises at indexes 17 + t and
  // 117 + t get a refusal and 67 + t a degenerate pair.
  std::vector<std::string> reject_premises;
};

class ScriptedTransport : public llm::Transport {
 public:
  explicit ScriptedTransport(StubOptions options = {}) : options_(options) {}
  llm::ChatResponse send(const llm::ChatRequest& req, const std::string& key) override;
  std::size_t calls() const { return calls_; }

 private:
  StubOptions options_;
  std::atomic<std::size_t> calls_{0};
};

// The repeat count encoded in a cassette key: 0 for a bare fingerprint.
int occurrence_of(const std::string& key);

}  // namespace contragen::stub

#endif  // CONTRAGEN_TOOLS_STUB_RESPONDER_H_
