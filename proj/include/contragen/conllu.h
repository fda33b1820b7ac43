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

// CoNLL-U reading and writing. Only syntactic words are modeled: multiword
// token ranges (3-4) and empty nodes (3.1) are skipped with a warning.

#ifndef CONTRAGEN_CONLLU_H_
#define CONTRAGEN_CONLLU_H_

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace contragen::conllu {

// FEATS column. Entries keep their stored order so that str() reproduces
// the source column byte for byte.
class MorphFeatures {
 public:
  MorphFeatures() = default;

  // Parses "A=B|C=D" or "_". Throws std::invalid_argument on an entry
  // without '=' or with an empty side.
  static MorphFeatures parse(std::string_view column);

  std::optional<std::string_view> get(std::string_view name) const;
  bool has(std::string_view name, std::string_view value) const;
  // Replaces an existing value in place or appends.
  void set(std::string name, std::string value);

  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }
  std::string str() const;

  bool operator==(const MorphFeatures&) const = default;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct Token {
  int id = 0;
  std::string form;
  std::string lemma;
  std::string upos;
  std::string xpos = "_";
  MorphFeatures feats;
  int head = 0;
  std::string deprel;
  std::string deps = "_";
  std::string misc = "_";
  bool space_after = true;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::optional<std::string> sent_id;
  // The "# text =" comment.
  std::optional<std::string> source_text;
  // Other comment lines, verbatim without the leading '#'.
  std::vector<std::string> comments;
  std::vector<Token> tokens;

  // 1-based lookup; ids are contiguous so this is an index.
  const Token& token(int id) const { return tokens.at(static_cast<std::size_t>(id - 1)); }
  int root_id() const;
  std::vector<int> children(int id) const;
  // sent_id when present, otherwise the premise text.
  std::string label() const;

  bool operator==(const Sentence&) const = default;
};

struct ParseWarning {
  std::size_t line = 0;
  std::string message;
};

struct ParseResult {
  std::vector<Sentence> sentences;
  std::vector<ParseWarning> warnings;
};

// Throws ParseError (with the line number) on malformed input.
ParseResult parse(std::istream& in, std::string_view source_name = "<input>");
ParseResult parse_string(std::string_view text,
                         std::string_view source_name = "<input>");

std::string render(const Sentence& s);
std::string render(std::span<const Sentence> sentences);

// Forms joined by single spaces, except after SpaceAfter=No tokens.
std::string detokenize(const Sentence& s);

// The "# text =" comment when present, otherwise detokenize().
std::string premise_text(const Sentence& s);

using TokenPredicate = std::function<bool(const Token&)>;

std::vector<int> find_tokens(const Sentence& s, const TokenPredicate& pred);

TokenPredicate has_upos(std::string upos);
// Compares the full relation label, subtype included ("nsubj:pass").
TokenPredicate has_deprel(std::string deprel);

// "nsubj:pass" -> "nsubj".
std::string_view base_relation(std::string_view deprel);

}  // namespace contragen::conllu

#endif  // CONTRAGEN_CONLLU_H_
