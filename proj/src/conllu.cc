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

#include "contragen/conllu.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "contragen/errors.h"
#include "contragen/text.h"

namespace contragen::conllu {

namespace {

constexpr std::size_t kColumns = 10;

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool misc_has_no_space(std::string_view misc) {
  if (misc == "_") return false;
  for (const std::string& item : text::split(misc, '|')) {
    if (item == "SpaceAfter=No") return true;
  }
  return false;
}

enum class IdKind { kWord, kRange, kEmpty, kInvalid };

IdKind classify_id(std::string_view id) {
  if (id.find('-') != std::string_view::npos) return IdKind::kRange;
  if (id.find('.') != std::string_view::npos) return IdKind::kEmpty;
  int v = 0;
  return parse_int(id, v) && v >= 1 ? IdKind::kWord : IdKind::kInvalid;
}

class BlockParser {
 public:
  BlockParser(std::string_view source, ParseResult& result)
      : source_(source), result_(result) {}

  void comment(std::string_view line, std::size_t lineno) {
    start(lineno);
    std::string_view body = line.substr(1);
    std::string_view trimmed = text::trim(body);
    auto value_of = [&](std::string_view key) -> std::optional<std::string> {
      if (!trimmed.starts_with(key)) return std::nullopt;
      std::string_view rest = text::trim(trimmed.substr(key.size()));
      if (!rest.starts_with('=')) return std::nullopt;
      return std::string(text::trim(rest.substr(1)));
    };
    if (auto v = value_of("sent_id")) {
      current_.sent_id = *v;
    } else if (auto t = value_of("text")) {
      current_.source_text = *t;
    } else {
      current_.comments.emplace_back(body);
    }
  }

  void token(std::string_view line, std::size_t lineno) {
    start(lineno);
    std::vector<std::string> cols = text::split(line, '\t');
    if (cols.size() != kColumns) {
      throw ParseError(std::string(source_), lineno,
                       "expected 10 tab-separated columns, found " +
                           std::to_string(cols.size()));
    }
    switch (classify_id(cols[0])) {
      case IdKind::kRange:
        result_.warnings.push_back({lineno, "skipped multiword token " + cols[0]});
        return;
      case IdKind::kEmpty:
        result_.warnings.push_back({lineno, "skipped empty node " + cols[0]});
        return;
      case IdKind::kInvalid:
        throw ParseError(std::string(source_), lineno, "invalid token id '" + cols[0] + "'");
      case IdKind::kWord:
        break;
    }
    Token t;
    parse_int(cols[0], t.id);
    t.form = cols[1];
    if (t.form.empty()) {
      throw ParseError(std::string(source_), lineno, "empty FORM column");
    }
    t.lemma = cols[2];
    t.upos = cols[3];
    t.xpos = cols[4];
    try {
      t.feats = MorphFeatures::parse(cols[5]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(source_), lineno, e.what());
    }
    if (!parse_int(cols[6], t.head)) {
      throw ParseError(std::string(source_), lineno, "invalid HEAD '" + cols[6] + "'");
    }
    if (t.head == t.id) {
      throw ParseError(std::string(source_), lineno,
                       "token " + cols[0] + " is its own head");
    }
    t.deprel = cols[7];
    if (t.deprel.empty()) {
      throw ParseError(std::string(source_), lineno, "empty DEPREL column");
    }
    t.deps = cols[8];
    t.misc = cols[9];
    t.space_after = !misc_has_no_space(t.misc);
    lines_.push_back(lineno);
    current_.tokens.push_back(std::move(t));
  }

  void finish() {
    if (!open_) return;
    open_ = false;
    Sentence s = std::move(current_);
    current_ = Sentence{};
    std::vector<std::size_t> lines = std::move(lines_);
    lines_.clear();
    if (s.tokens.empty()) {
      // A comment-only block carries no sentence.
      return;
    }
    const std::string name = s.sent_id ? "sentence '" + *s.sent_id + "'"
                                       : "sentence at line " + std::to_string(block_line_);
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (s.tokens[i].id != static_cast<int>(i + 1)) {
        throw ParseError(std::string(source_), lines[i],
                         name + ": non-contiguous token ids (expected " +
                             std::to_string(i + 1) + ", found " +
                             std::to_string(s.tokens[i].id) + ")");
      }
    }
    const int n = static_cast<int>(s.tokens.size());
    int roots = 0;
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      const Token& t = s.tokens[i];
      if (t.head > n) {
        throw ParseError(std::string(source_), lines[i],
                         name + ": head " + std::to_string(t.head) + " of token " +
                             std::to_string(t.id) + " is not a token id");
      }
      if (t.head == 0) ++roots;
    }
    if (roots != 1) {
      throw ParseError(std::string(source_), block_line_,
                       name + ": expected exactly one root, found " + std::to_string(roots));
    }
    result_.sentences.push_back(std::move(s));
  }

 private:
  void start(std::size_t lineno) {
    if (!open_) {
      open_ = true;
      block_line_ = lineno;
    }
  }

  std::string_view source_;
  ParseResult& result_;
  Sentence current_;
  std::vector<std::size_t> lines_;
  bool open_ = false;
  std::size_t block_line_ = 0;
};

}  // namespace

MorphFeatures MorphFeatures::parse(std::string_view column) {
  MorphFeatures f;
  if (column == "_") return f;
  if (column.empty()) throw std::invalid_argument("empty FEATS column");
  for (const std::string& item : text::split(column, '|')) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw std::invalid_argument("malformed feature '" + item + "'");
    }
    f.entries_.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return f;
}

std::optional<std::string_view> MorphFeatures::get(std::string_view name) const {
  for (const auto& [k, v] : entries_) {
    if (k == name) return std::string_view(v);
  }
  return std::nullopt;
}

bool MorphFeatures::has(std::string_view name, std::string_view value) const {
  auto v = get(name);
  return v && *v == value;
}

void MorphFeatures::set(std::string name, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == name) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(name), std::move(value));
}

std::string MorphFeatures::str() const {
  if (entries_.empty()) return "_";
  std::string out;
  for (const auto& [k, v] : entries_) {
    if (!out.empty()) out.push_back('|');
    out += k;
    out.push_back('=');
    out += v;
  }
  return out;
}

int Sentence::root_id() const {
  for (const Token& t : tokens) {
    if (t.head == 0) return t.id;
  }
  return 0;
}

std::vector<int> Sentence::children(int id) const {
  std::vector<int> out;
  for (const Token& t : tokens) {
    if (t.head == id) out.push_back(t.id);
  }
  return out;
}

std::string Sentence::label() const {
  if (sent_id) return *sent_id;
  return premise_text(*this);
}

ParseResult parse(std::istream& in, std::string_view source_name) {
  ParseResult result;
  BlockParser block(source_name, result);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    if (text::trim(view).empty()) {
      block.finish();
    } else if (view.front() == '#') {
      block.comment(view, lineno);
    } else {
      block.token(view, lineno);
    }
  }
  block.finish();
  return result;
}

ParseResult parse_string(std::string_view text, std::string_view source_name) {
  std::istringstream in{std::string(text)};
  return parse(in, source_name);
}

std::string render(const Sentence& s) {
  std::string out;
  if (s.sent_id) out += "# sent_id = " + *s.sent_id + "\n";
  if (s.source_text) out += "# text = " + *s.source_text + "\n";
  for (const std::string& c : s.comments) out += "#" + c + "\n";
  for (const Token& t : s.tokens) {
    out += std::to_string(t.id);
    for (const std::string* col : {&t.form, &t.lemma, &t.upos, &t.xpos}) {
      out.push_back('\t');
      out += *col;
    }
    out.push_back('\t');
    out += t.feats.str();
    out.push_back('\t');
    out += std::to_string(t.head);
    for (const std::string* col : {&t.deprel, &t.deps}) {
      out.push_back('\t');
      out += *col;
    }
    out.push_back('\t');
    if (!t.space_after && !misc_has_no_space(t.misc)) {
      out += t.misc == "_" ? "SpaceAfter=No" : t.misc + "|SpaceAfter=No";
    } else {
      out += t.misc;
    }
    out.push_back('\n');
  }
  out.push_back('\n');
  return out;
}

std::string render(std::span<const Sentence> sentences) {
  std::string out;
  for (const Sentence& s : sentences) out += render(s);
  return out;
}

std::string detokenize(const Sentence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    out += s.tokens[i].form;
    if (i + 1 < s.tokens.size() && s.tokens[i].space_after) out.push_back(' ');
  }
  return out;
}

std::string premise_text(const Sentence& s) {
  return s.source_text ? *s.source_text : detokenize(s);
}

std::vector<int> find_tokens(const Sentence& s, const TokenPredicate& pred) {
  std::vector<int> ids;
  for (const Token& t : s.tokens) {
    if (pred(t)) ids.push_back(t.id);
  }
  return ids;
}

TokenPredicate has_upos(std::string upos) {
  return [upos = std::move(upos)](const Token& t) { return t.upos == upos; };
}

TokenPredicate has_deprel(std::string deprel) {
  return [deprel = std::move(deprel)](const Token& t) { return t.deprel == deprel; };
}

std::string_view base_relation(std::string_view deprel) {
  return deprel.substr(0, deprel.find(':'));
}

}  // namespace contragen::conllu
