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

// Contradictory hypotheses for given premises, one request per
// (premise, contradiction type).

#ifndef CONTRAGEN_METHOD2_H_
#define CONTRAGEN_METHOD2_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "contragen/client.h"
#include "contragen/contradiction_type.h"
#include "contragen/prompt_template.h"
#include "contragen/sample.h"

namespace contragen::method2 {

// Extracts P and H from a reply of the form
//   <type name> 'P: <premise>, H: <hypothesis>'
// Leading text, straight or curly quotes, square brackets around either
// side and trailing whitespace are tolerated. Throws FormatReject with
// reason "format" when no P/H pair is found and "degenerate" when H is
// empty or equal to P.
SamplePair parse_reply(std::string_view text, const ContradictionType& type);

struct Options {
  int quota_per_type = 125;
  std::string model_id = "gpt-4";
  int max_tokens = 512;
  double temperature = 1.0;
};

struct RejectRecord {
  std::string raw_response;
  std::string reason;  // format | degenerate
  std::string fingerprint;
  std::string type;
  std::size_t premise_index = 0;
};

void to_json(nlohmann::json& j, const RejectRecord& r);

struct TransportFailure {
  std::string type;
  std::size_t premise_index = 0;
  std::string error;
};

struct Result {
  // Ordered by (type index, premise index).
  std::vector<SamplePair> pairs;
  std::vector<RejectRecord> rejects;
  std::vector<TransportFailure> transport_failures;
  std::vector<std::string> warnings;
  std::size_t responses = 0;
  std::map<std::string, int> accepted_per_type;
};

llm::ChatRequest build_request(const llm::PromptTemplate& tmpl, std::string_view premise,
                               const ContradictionType& type, const Options& options);

// Asks for each type in turn over the premises, in premise order, until
// quota_per_type replies per type parse or the premises run out. Requests
// of one round are issued concurrently through `client`.
Result generate_for_premises(const std::vector<std::string>& premises,
                             const std::vector<ContradictionType>& types,
                             llm::ChatClient& client, const llm::PromptTemplate& tmpl,
                             const Options& options);

// One premise per line, or JSONL records with a "premise" field. Blank
// lines are skipped. Throws IoError/ParseError.
std::vector<std::string> read_premises(const std::filesystem::path& path);
std::vector<std::string> parse_premises(std::string_view text,
                                        std::string_view source = "<premises>");

}  // namespace contragen::method2

#endif  // CONTRAGEN_METHOD2_H_
