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

#include "stub_responder.h"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "contragen/text.h"

namespace contragen::stub {

namespace {

constexpr std::string_view kMethod2Lead = "Please generate one contradictory Hypothesis for a ";
constexpr std::string_view kInstanceLead = "Please generate ";
constexpr std::string_view kNewTypeLead = "Please come up with a new category of contradiction";

struct Candidate {
  std::string_view name;
  std::string_view description;
};

constexpr std::array<Candidate, 12> kCandidates = {{
    {"Temporal", "Two statements place one event at incompatible times, for example a "
                 "meeting said to start at noon and also at midnight."},
    {"Spatial", "The statements put the same object or person in two places that cannot "
                "both hold, such as inside a building and far away across a river."},
    {"Causal", "One statement names a cause for an outcome while the other asserts that "
               "this cause was absent or produced the reverse effect."},
    {"Quantifier Scope", "A universal claim about every member of a group clashes with a "
                         "claim that some member lacks the property."},
    {"Modal", "Something described as necessary or certain is elsewhere described as "
              "impossible, ruling out any shared reading."},
    {"Comparative", "The statements order two entities in opposite directions on a scale "
                    "like height, price or speed."},
    {"Possession", "Ownership of an item is assigned to one person and denied to that person "
                   "or given exclusively to somebody else."},
    {"Identity", "Two descriptions pick out one referent yet attribute conflicting names, "
                 "roles or professions to it."},
    {"Sequence", "The order of steps in a process is reported differently so that an action "
                 "both precedes and follows another."},
    {"Perception", "What a witness reportedly saw, heard or felt is contradicted by a "
                   "statement that the sensory experience never occurred."},
    {"Membership", "An individual is listed as part of a team, club or category and "
                   "simultaneously excluded from it."},
    {"Attitude", "A person is said to love, trust or approve of something and also to hate, "
                 "distrust or reject that same thing."},
}};

constexpr std::array<std::string_view, 8> kRoles = {
    "teacher", "farmer", "pilot", "baker", "nurse", "painter", "driver", "singer"};
constexpr std::array<std::string_view, 6> kPlaces = {
    "the northern village", "the old harbor", "the city library",
    "the mountain school", "the central market", "the quiet suburb"};
constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kActs = {{
    {"opened", "open"},   {"painted", "paint"}, {"repaired", "repair"},
    {"cleaned", "clean"}, {"locked", "lock"},   {"visited", "visit"}}};
constexpr std::array<std::string_view, 6> kThings = {
    "wooden gate", "blue shed", "small bakery", "red bicycle", "front window", "garden fence"};

std::string between(std::string_view s, std::string_view a, std::string_view b) {
  std::size_t i = s.find(a);
  if (i == std::string_view::npos) throw std::logic_error("stub: marker not found: " + std::string(a));
  i += a.size();
  std::size_t j = s.find(b, i);
  if (j == std::string_view::npos) throw std::logic_error("stub: marker not found: " + std::string(b));
  return std::string(s.substr(i, j - i));
}

std::string body_of(std::string_view premise) {
  std::string p(text::trim(premise));
  while (!p.empty() && (p.back() == '.' || p.back() == '!')) p.pop_back();
  if (!p.empty() && !(p.size() > 1 && p[1] >= 'A' && p[1] <= 'Z') && p[0] >= 'A' && p[0] <= 'Z') {
    p[0] = static_cast<char>(p[0] - 'A' + 'a');
  }
  return p;
}

std::string hypothesis_for(const std::string& type, std::string_view premise) {
  const std::string p = body_of(premise);
  if (type == "Factive (embedding context)") return "It was only pretended that " + p + ".";
  if (type == "Structure") return "The roles are reversed from when " + p + ".";
  if (type == "Lexical") return "The opposite holds and it is not true that " + p + ".";
  if (type == "World Knowledge") return "It is physically impossible that " + p + ".";
  return "Contrary to the claim, in no way " + p + ".";
}

llm::ChatResponse method2_reply(const llm::ChatRequest& req, const StubOptions& options) {
  const std::string& user = req.messages.at(1).content;
  const std::string premise = between(user, kMethod2Lead, ", based on ");
  const std::string type = between(user, "following way: ", " 'P: [PREMISE]");
  const auto& known = options.reject_premises;
  const auto at = std::find(known.begin(), known.end(), premise);
  if (at != known.end()) {
    std::size_t type_index = 0;
    for (std::string_view t : {"Factive (embedding context)", "Structure", "Lexical"}) {
      if (type == t) break;
      ++type_index;
    }
    const auto index = static_cast<std::size_t>(at - known.begin());
    if (index == 17 + type_index || index == 117 + type_index) {
      return {"I am sorry, but I cannot produce a contradiction for this sentence.", "stop"};
    }
    if (index == 67 + type_index) return {type + " 'P: " + premise + ", H: " + premise + "'", "stop"};
  }
  return {type + " 'P: " + premise + ", H: " + hypothesis_for(type, premise) + "'", "stop"};
}

llm::ChatResponse instance_reply(const llm::ChatRequest& req, int occurrence) {
  const std::string& user = req.messages.at(1).content;
  const int n = std::stoi(between(user, kInstanceLead, " different contradictions"));
  const std::string type = between(user, "based on ", ". The contradictions should");
  const std::size_t h = std::hash<std::string>{}(type);
  std::string out;
  for (int j = 0; j < n; ++j) {
    const std::size_t day = static_cast<std::size_t>(occurrence * n + j + 1);
    const auto role = kRoles[(h + day) % kRoles.size()];
    const auto place = kPlaces[(h / 7 + day) % kPlaces.size()];
    const auto act = kActs[(h / 11 + day) % kActs.size()];
    const auto thing = kThings[(h / 13 + day) % kThings.size()];
    const std::string tail = " the " + std::string(thing) + " on day " + std::to_string(day) +
                             " of the " + text::to_lower(type) + " survey";
    out += "Premise: The " + std::string(role) + " from " + std::string(place) + " " +
           std::string(act.first) + tail + ", Hypothesis: The " + std::string(role) + " from " +
           std::string(place) + " did not " + std::string(act.second) + tail + ".\n";
  }
  return {out, "stop"};
}

llm::ChatResponse new_type_reply(const llm::ChatRequest& req) {
  const std::string& user = req.messages.at(1).content;
  const std::string known = between(user, "(other than ", "). Format");
  std::vector<std::string> names;
  for (const std::string& n : text::split(known, ',')) names.emplace_back(text::trim(n));
  for (const Candidate& c : kCandidates) {
    bool used = false;
    for (const std::string& n : names) used = used || n == c.name;
    if (used) continue;
    return {"Contradiction type name: " + std::string(c.name) +
                ", Contradiction type description: " + std::string(c.description),
            "stop"};
  }
  return {"I have no further categories to suggest.", "stop"};
}

}  // namespace

int occurrence_of(const std::string& key) {
  const std::size_t slash = key.rfind('/');
  if (slash == std::string::npos) return 0;
  return std::stoi(key.substr(slash + 1));
}

llm::ChatResponse ScriptedTransport::send(const llm::ChatRequest& req, const std::string& key) {
  ++calls_;
  if (req.messages.size() < 2) throw std::logic_error("stub: unexpected request shape");
  const std::string& user = req.messages[1].content;
  if (user.starts_with(kMethod2Lead)) return method2_reply(req, options_);
  if (user.starts_with(kNewTypeLead)) return new_type_reply(req);
  if (user.starts_with(kInstanceLead)) return instance_reply(req, occurrence_of(key));
  throw std::logic_error("stub: unrecognised prompt");
}

}  // namespace contragen::stub
