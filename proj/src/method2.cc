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

#include "contragen/method2.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "contragen/errors.h"
#include "contragen/text.h"

namespace contragen::method2 {

namespace {

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Position of the first "<letter>:" marker at a word boundary at or after
// `from`, and the position just past the colon.
std::optional<std::pair<std::size_t, std::size_t>> find_marker(std::string_view s, char letter,
                                                               std::size_t from) {
  for (std::size_t i = from; i < s.size(); ++i) {
    if (s[i] != letter || (i > 0 && is_alnum(s[i - 1]))) continue;
    std::size_t j = i + 1;
    while (j < s.size() && s[j] == ' ') ++j;
    if (j < s.size() && s[j] == ':') return std::make_pair(i, j + 1);
  }
  return std::nullopt;
}

std::string clean_side(std::string_view s) {
  s = text::trim(s);
  while (!s.empty() && (s.back() == ',' || s.back() == ';')) s = text::trim(s.substr(0, s.size() - 1));
  return std::string(text::strip_enclosing(s));
}

}  // namespace

SamplePair parse_reply(std::string_view raw, const ContradictionType& type) {
  const std::string text = text::straighten_quotes(raw);
  auto p = find_marker(text, 'P', 0);
  if (!p) throw FormatReject("format", "no 'P:' segment in reply");
  auto h = find_marker(text, 'H', p->second);
  if (!h) throw FormatReject("format", "no 'H:' segment in reply");

  char quote = '\0';
  for (std::size_t i = p->first; i > 0; --i) {
    char c = text[i - 1];
    if (c == ' ' || c == '\t') continue;
    if (c == '\'' || c == '"') quote = c;
    break;
  }

  std::string_view hyp = std::string_view(text).substr(h->second);
  hyp = hyp.substr(0, hyp.find('\n'));
  if (quote != '\0') {
    std::size_t close = hyp.rfind(quote);
    if (close != std::string_view::npos) {
      std::string_view rest = hyp.substr(close + 1);
      if (std::none_of(rest.begin(), rest.end(), is_alnum)) hyp = hyp.substr(0, close);
    }
  }
  std::string premise = clean_side(std::string_view(text).substr(p->second, h->first - p->second));
  std::string hypothesis = clean_side(hyp);
  if (premise.empty()) throw FormatReject("format", "empty 'P:' segment in reply");
  if (hypothesis.empty()) throw FormatReject("degenerate", "empty hypothesis");
  if (hypothesis == premise || text::normalize_key(hypothesis) == text::normalize_key(premise)) {
    throw FormatReject("degenerate", "hypothesis repeats the premise");
  }
  SamplePair out;
  out.premise = std::move(premise);
  out.hypothesis = std::move(hypothesis);
  out.label = Label::kContradiction;
  out.type = type.name;
  out.method = Method::kMethod2;
  out.provenance = {{"type_origin", origin_name(type.origin)}};
  return out;
}

void to_json(nlohmann::json& j, const RejectRecord& r) {
  j = nlohmann::json{{"raw_response", r.raw_response},
                     {"reason", r.reason},
                     {"fingerprint", r.fingerprint},
                     {"type", r.type},
                     {"premise_index", r.premise_index}};
}

llm::ChatRequest build_request(const llm::PromptTemplate& tmpl, std::string_view premise,
                               const ContradictionType& type, const Options& options) {
  llm::ChatRequest req = llm::render(tmpl, {{"PREMISE", std::string(premise)},
                                            {"CONTRADICTION_TYPE_NAME", type.name},
                                            {"CONTRADICTION_TYPE_DESCRIPTION", type.description}});
  req.model_id = options.model_id;
  req.max_tokens = options.max_tokens;
  req.temperature = options.temperature;
  return req;
}

Result generate_for_premises(const std::vector<std::string>& premises,
                             const std::vector<ContradictionType>& types,
                             llm::ChatClient& client, const llm::PromptTemplate& tmpl,
                             const Options& options) {
  if (options.quota_per_type < 0) throw PreconditionError("quota per type must be >= 0");
  Result result;
  if (options.quota_per_type == 0 || types.empty()) return result;
  if (premises.empty()) throw PreconditionError("no premises supplied");

  struct Cursor {
    std::size_t next_premise = 0;
    int accepted = 0;
    std::vector<SamplePair> pairs;
  };
  std::vector<Cursor> cursors(types.size());

  for (;;) {
    struct Cell {
      std::size_t type_index;
      std::size_t premise_index;
    };
    std::vector<Cell> cells;
    std::vector<llm::ChatRequest> requests;
    for (std::size_t t = 0; t < types.size(); ++t) {
      Cursor& c = cursors[t];
      const std::size_t missing = static_cast<std::size_t>(options.quota_per_type - c.accepted);
      const std::size_t take = std::min(missing, premises.size() - c.next_premise);
      for (std::size_t k = 0; k < take; ++k) {
        cells.push_back({t, c.next_premise});
        requests.push_back(build_request(tmpl, premises[c.next_premise], types[t], options));
        ++c.next_premise;
      }
    }
    if (requests.empty()) break;

    std::vector<llm::Completion> done = client.complete_all(requests);
    for (std::size_t i = 0; i < done.size(); ++i) {
      const Cell& cell = cells[i];
      const ContradictionType& type = types[cell.type_index];
      const std::string& premise = premises[cell.premise_index];
      llm::Completion& c = done[i];
      if (!c.ok()) {
        result.transport_failures.push_back({type.name, cell.premise_index, c.error});
        continue;
      }
      ++result.responses;
      try {
        SamplePair pair = parse_reply(c.response->content, type);
        if (pair.premise != premise) {
          pair.provenance["premise_mismatch"] = true;
          pair.provenance["model_premise"] = pair.premise;
          pair.premise = premise;
          if (text::normalize_key(pair.hypothesis) == text::normalize_key(premise)) {
            throw FormatReject("degenerate", "hypothesis repeats the premise");
          }
        } else {
          pair.provenance["premise_mismatch"] = false;
        }
        pair.provenance["premise_index"] = cell.premise_index;
        pair.provenance["fingerprint"] = c.fingerprint;
        pair.provenance["cassette_key"] = c.key;
        pair.provenance["model"] = options.model_id;
        cursors[cell.type_index].pairs.push_back(std::move(pair));
        ++cursors[cell.type_index].accepted;
      } catch (const FormatReject& e) {
        result.rejects.push_back(
            {c.response->content, e.reason(), c.fingerprint, type.name, cell.premise_index});
      }
    }
  }

  for (std::size_t t = 0; t < types.size(); ++t) {
    Cursor& c = cursors[t];
    result.accepted_per_type[types[t].name] = c.accepted;
    if (c.accepted < options.quota_per_type) {
      result.warnings.push_back("type " + types[t].name + ": " + std::to_string(c.accepted) +
                                " of " + std::to_string(options.quota_per_type) +
                                " pairs after exhausting " + std::to_string(premises.size()) +
                                " premises");
    }
    for (auto& p : c.pairs) result.pairs.push_back(std::move(p));
  }
  return result;
}

std::vector<std::string> parse_premises(std::string_view text, std::string_view source) {
  std::vector<std::string> out;
  std::size_t line_no = 0;
  for (const std::string& line : text::split(text, '\n')) {
    ++line_no;
    std::string_view l = text::trim(line);
    if (l.empty()) continue;
    if (l.front() == '{') {
      try {
        auto j = nlohmann::json::parse(l);
        out.push_back(j.at("premise").get<std::string>());
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string(source), line_no, e.what());
      }
    } else {
      out.emplace_back(l);
    }
    if (text::trim(out.back()).empty()) {
      throw ParseError(std::string(source), line_no, "empty premise");
    }
  }
  return out;
}

std::vector<std::string> read_premises(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open premise file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_premises(ss.str(), path.string());
}

}  // namespace contragen::method2
