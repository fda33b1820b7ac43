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

#include "contragen/wordnet.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "contragen/errors.h"
#include "contragen/text.h"

namespace contragen::wordnet {

namespace {

constexpr PartOfSpeech kAllPos[] = {PartOfSpeech::kNoun, PartOfSpeech::kVerb,
                                    PartOfSpeech::kAdjective, PartOfSpeech::kAdverb};

bool parse_unsigned(std::string_view s, int base, std::uint32_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out, base);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::optional<PartOfSpeech> pos_from_letter(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  switch (s[0]) {
    case 'n': return PartOfSpeech::kNoun;
    case 'v': return PartOfSpeech::kVerb;
    case 'a':
    case 's': return PartOfSpeech::kAdjective;
    case 'r': return PartOfSpeech::kAdverb;
    default: return std::nullopt;
  }
}

// "old(a)" -> "old". The marker is one of (a), (p), (ip).
std::string strip_marker(std::string_view word) {
  for (std::string_view m : {"(a)", "(p)", "(ip)"}) {
    if (word.size() > m.size() && word.ends_with(m)) {
      return std::string(word.substr(0, word.size() - m.size()));
    }
  }
  return std::string(word);
}

std::string file_name(std::string_view prefix, PartOfSpeech pos) {
  return std::string(prefix) + "." + std::string(pos_name(pos));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Splits into lines, dropping '\r' and the license header (lines that
// start with two spaces).
template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    start = nl == std::string_view::npos ? text.size() : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.starts_with("  ")) continue;
    fn(line, lineno);
  }
}

class FieldReader {
 public:
  FieldReader(std::vector<std::string> fields, std::string_view source, std::size_t line)
      : fields_(std::move(fields)), source_(source), line_(line) {}

  const std::string& next(std::string_view what) {
    if (pos_ >= fields_.size()) fail("truncated line, missing " + std::string(what));
    return fields_[pos_++];
  }
  std::uint32_t number(std::string_view what, int base = 10) {
    const std::string& f = next(what);
    std::uint32_t v = 0;
    if (!parse_unsigned(f, base, v)) fail("bad " + std::string(what) + " field '" + f + "'");
    return v;
  }
  bool done() const { return pos_ >= fields_.size(); }
  std::size_t remaining() const { return fields_.size() - pos_; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(std::string(source_), line_, msg);
  }

 private:
  std::vector<std::string> fields_;
  std::size_t pos_ = 0;
  std::string_view source_;
  std::size_t line_;
};

}  // namespace

std::optional<PartOfSpeech> parse_pos(std::string_view s) {
  std::string l = text::to_lower(s);
  if (auto p = pos_from_letter(l)) return p;
  if (l == "noun") return PartOfSpeech::kNoun;
  if (l == "verb") return PartOfSpeech::kVerb;
  if (l == "adj" || l == "adjective") return PartOfSpeech::kAdjective;
  if (l == "adv" || l == "adverb") return PartOfSpeech::kAdverb;
  return std::nullopt;
}

std::string_view pos_name(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kNoun: return "noun";
    case PartOfSpeech::kVerb: return "verb";
    case PartOfSpeech::kAdjective: return "adj";
    case PartOfSpeech::kAdverb: return "adv";
  }
  return "noun";
}

char pos_letter(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kNoun: return 'n';
    case PartOfSpeech::kVerb: return 'v';
    case PartOfSpeech::kAdjective: return 'a';
    case PartOfSpeech::kAdverb: return 'r';
  }
  return 'n';
}

std::optional<PartOfSpeech> pos_from_upos(std::string_view upos) {
  if (upos == "NOUN") return PartOfSpeech::kNoun;
  if (upos == "VERB") return PartOfSpeech::kVerb;
  if (upos == "ADJ") return PartOfSpeech::kAdjective;
  if (upos == "ADV") return PartOfSpeech::kAdverb;
  return std::nullopt;
}

std::string SynsetId::str() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08u", offset);
  return std::string(buf) + "-" + pos_letter(pos);
}

std::string Synset::lemma_text(std::size_t i) const {
  std::string s = lemmas.at(i);
  std::replace(s.begin(), s.end(), '_', ' ');
  return s;
}

std::optional<int> Synset::lemma_index(std::string_view lemma) const {
  const std::string want = normalize_lemma(lemma);
  for (std::size_t i = 0; i < lemmas.size(); ++i) {
    if (text::to_lower(lemmas[i]) == want) return static_cast<int>(i + 1);
  }
  return std::nullopt;
}

std::string normalize_lemma(std::string_view lemma) {
  std::string s = text::to_lower(text::trim(lemma));
  std::replace(s.begin(), s.end(), ' ', '_');
  return s;
}

Lexicon Lexicon::load(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoError("WordNet directory not found: " + dir.string());
  }
  Lexicon lex;
  bool any = false;
  for (PartOfSpeech pos : kAllPos) {
    const auto index_path = dir / file_name("index", pos);
    const auto data_path = dir / file_name("data", pos);
    const bool has_index = std::filesystem::exists(index_path, ec);
    const bool has_data = std::filesystem::exists(data_path, ec);
    if (!has_index && !has_data) continue;
    if (has_index != has_data) {
      throw IoError("incomplete WNDB pair in " + dir.string() + ": missing " +
                    (has_index ? data_path : index_path).filename().string());
    }
    WndbFiles files{pos, read_file(index_path), read_file(data_path)};
    lex.load_pair(files, index_path.string(), data_path.string());
    any = true;
  }
  if (!any) throw IoError("no WNDB index/data files in " + dir.string());
  lex.resolve();
  return lex;
}

Lexicon Lexicon::from_files(const std::vector<WndbFiles>& files) {
  Lexicon lex;
  for (const WndbFiles& f : files) {
    lex.load_pair(f, file_name("index", f.pos), file_name("data", f.pos));
  }
  lex.resolve();
  return lex;
}

void Lexicon::load_pair(const WndbFiles& files, std::string_view index_name,
                        std::string_view data_name) {
  const PartOfSpeech file_pos = files.pos;

  for_each_record(files.data_text, [&](std::string_view line, std::size_t lineno) {
    std::size_t bar = line.find('|');
    std::string_view body = line.substr(0, bar);
    FieldReader r(text::split_whitespace(body), data_name, lineno);
    Synset s;
    s.id.pos = file_pos;
    s.id.offset = r.number("synset_offset");
    r.number("lex_filenum");
    const std::string& ss_type = r.next("ss_type");
    auto ss_pos = pos_from_letter(ss_type);
    if (!ss_pos || *ss_pos != file_pos) r.fail("ss_type '" + ss_type + "' does not belong in this file");
    s.satellite = ss_type == "s";
    const std::uint32_t w_cnt = r.number("w_cnt", 16);
    if (w_cnt == 0) r.fail("w_cnt must be positive");
    if (w_cnt > r.remaining() / 2) r.fail("w_cnt larger than the line");
    for (std::uint32_t i = 0; i < w_cnt; ++i) {
      std::string word = strip_marker(r.next("word"));
      if (word.empty()) r.fail("empty word");
      r.number("lex_id", 16);
      s.lemmas.push_back(std::move(word));
    }
    const std::uint32_t p_cnt = r.number("p_cnt");
    if (p_cnt > r.remaining() / 4) r.fail("bad pointer count field (p_cnt " + std::to_string(p_cnt) + ")");
    for (std::uint32_t i = 0; i < p_cnt; ++i) {
      Pointer p;
      p.symbol = r.next("pointer_symbol");
      p.target.offset = r.number("pointer offset");
      const std::string& tpos = r.next("pointer pos");
      auto target_pos = pos_from_letter(tpos);
      if (!target_pos) r.fail("bad pointer pos '" + tpos + "'");
      p.target.pos = *target_pos;
      const std::string& st = r.next("source/target");
      std::uint32_t src = 0;
      std::uint32_t tgt = 0;
      if (st.size() != 4 || !parse_unsigned(std::string_view(st).substr(0, 2), 16, src) ||
          !parse_unsigned(std::string_view(st).substr(2, 2), 16, tgt)) {
        r.fail("bad source/target field '" + st + "'");
      }
      if (src > s.lemmas.size()) r.fail("pointer source word " + std::to_string(src) + " out of range");
      p.source_index = static_cast<int>(src);
      p.target_index = static_cast<int>(tgt);
      if (p.symbol == "!" && (src == 0 || tgt == 0)) {
        r.fail("antonym pointer must be lemma-level (source/target " + st + ")");
      }
      s.pointers.push_back(std::move(p));
    }
    if (file_pos == PartOfSpeech::kVerb && !r.done()) {
      const std::uint32_t f_cnt = r.number("f_cnt");
      if (f_cnt != r.remaining() / 3 || r.remaining() % 3 != 0) r.fail("bad frame count field");
      for (std::uint32_t i = 0; i < f_cnt; ++i) {
        if (r.next("frame marker") != "+") r.fail("frame entries must start with '+'");
        r.number("f_num");
        r.number("w_num", 16);
      }
    }
    if (!r.done()) r.fail("unexpected trailing fields");
    if (bar != std::string_view::npos) s.gloss = std::string(text::trim(line.substr(bar + 1)));
    if (data_.contains(s.id)) r.fail("duplicate synset offset " + s.id.str());
    data_.emplace(s.id, std::move(s));
  });

  for_each_record(files.index_text, [&](std::string_view line, std::size_t lineno) {
    FieldReader r(text::split_whitespace(line), index_name, lineno);
    std::string lemma = text::to_lower(r.next("lemma"));
    const std::string& pos = r.next("pos");
    auto p = pos_from_letter(pos);
    if (!p || *p != file_pos || pos == "s") r.fail("pos '" + pos + "' does not belong in this file");
    const std::uint32_t synset_cnt = r.number("synset_cnt");
    const std::uint32_t p_cnt = r.number("p_cnt");
    if (p_cnt > r.remaining()) r.fail("bad pointer count field (p_cnt " + std::to_string(p_cnt) + ")");
    for (std::uint32_t i = 0; i < p_cnt; ++i) r.next("ptr_symbol");
    r.number("sense_cnt");
    r.number("tagsense_cnt");
    if (synset_cnt == 0 || synset_cnt != r.remaining()) {
      r.fail("synset_cnt " + std::to_string(synset_cnt) + " does not match the offsets listed");
    }
    std::vector<std::uint32_t> offsets;
    for (std::uint32_t i = 0; i < synset_cnt; ++i) offsets.push_back(r.number("synset_offset"));
    auto key = std::make_pair(file_pos, std::move(lemma));
    if (index_.contains(key)) r.fail("duplicate index entry '" + key.second + "'");
    index_.emplace(std::move(key), std::move(offsets));
  });
}

void Lexicon::resolve() const {
  for (const auto& [key, offsets] : index_) {
    for (std::uint32_t off : offsets) {
      SynsetId id{key.first, off};
      auto it = data_.find(id);
      if (it == data_.end()) {
        throw ResolutionError("index entry '" + key.second + "' lists unknown synset " + id.str());
      }
      if (!it->second.lemma_index(key.second)) {
        throw ResolutionError("synset " + id.str() + " does not contain index lemma '" +
                              key.second + "'");
      }
    }
  }
  for (const auto& [id, s] : data_) {
    for (const Pointer& p : s.pointers) {
      auto it = data_.find(p.target);
      if (it == data_.end()) {
        throw ResolutionError("pointer '" + p.symbol + "' from " + id.str() +
                              " targets unknown synset " + p.target.str());
      }
      if (p.target_index > static_cast<int>(it->second.lemmas.size())) {
        throw ResolutionError("pointer '" + p.symbol + "' from " + id.str() +
                              " targets word " + std::to_string(p.target_index) + " of " +
                              p.target.str() + ", which has " +
                              std::to_string(it->second.lemmas.size()));
      }
    }
  }
}

std::vector<const Synset*> Lexicon::synsets_of(std::string_view lemma, PartOfSpeech pos) const {
  std::vector<const Synset*> out;
  auto it = index_.find({pos, normalize_lemma(lemma)});
  if (it == index_.end()) return out;
  for (std::uint32_t off : it->second) out.push_back(&data_.at(SynsetId{pos, off}));
  return out;
}

const Synset* Lexicon::find(SynsetId id) const {
  auto it = data_.find(id);
  return it == data_.end() ? nullptr : &it->second;
}

std::vector<std::string> Lexicon::antonyms_of(std::string_view lemma, PartOfSpeech pos) const {
  auto senses = synsets_of(lemma, pos);
  if (senses.empty()) return {};
  return antonyms_of(lemma, *senses.front());
}

std::vector<std::string> Lexicon::antonyms_of(std::string_view lemma, const Synset& sense) const {
  auto idx = sense.lemma_index(lemma);
  if (!idx) {
    throw std::invalid_argument("synset " + sense.id.str() + " does not contain '" +
                                std::string(lemma) + "'");
  }
  const std::string self = normalize_lemma(lemma);
  std::vector<std::string> out;
  for (const Pointer& p : sense.pointers) {
    if (p.symbol != "!" || p.source_index != *idx) continue;
    const Synset& target = data_.at(p.target);
    std::string word = target.lemma_text(static_cast<std::size_t>(p.target_index - 1));
    if (normalize_lemma(word) == self) continue;
    if (std::find(out.begin(), out.end(), word) == out.end()) out.push_back(std::move(word));
  }
  return out;
}

std::vector<std::string> Lexicon::antonym_asymmetries() const {
  std::vector<std::string> problems;
  for (const auto& [id, s] : data_) {
    for (const Pointer& p : s.pointers) {
      if (p.symbol != "!") continue;
      const Synset& t = data_.at(p.target);
      bool back = std::any_of(t.pointers.begin(), t.pointers.end(), [&](const Pointer& q) {
        return q.symbol == "!" && q.target == id && q.source_index == p.target_index &&
               q.target_index == p.source_index;
      });
      if (!back) {
        problems.push_back(id.str() + ":" + s.lemmas[p.source_index - 1] + " -> " +
                           p.target.str() + ":" + t.lemmas[p.target_index - 1]);
      }
    }
  }
  return problems;
}

SenseMap SenseMap::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

SenseMap SenseMap::parse(std::string_view text, std::string_view source_name) {
  SenseMap map;
  std::size_t lineno = 0;
  for (const std::string& raw : text::split(text, '\n')) {
    ++lineno;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.front() == '#') continue;
    std::vector<std::string> cols = text::split(line, '\t');
    if (cols.size() != 4) {
      throw ParseError(std::string(source_name), lineno,
                       "sense map records need 4 tab-separated fields");
    }
    auto pos = parse_pos(cols[1]);
    if (!pos) throw ParseError(std::string(source_name), lineno, "unknown pos '" + cols[1] + "'");
    std::uint32_t offset = 0;
    if (!parse_unsigned(text::trim(cols[3]), 10, offset)) {
      throw ParseError(std::string(source_name), lineno, "bad offset '" + cols[3] + "'");
    }
    if (cols[0].empty() || cols[2].empty()) {
      throw ParseError(std::string(source_name), lineno, "empty lemma or context");
    }
    map.add(cols[0], *pos, cols[2], offset);
  }
  return map;
}

void SenseMap::add(std::string_view lemma, PartOfSpeech pos, std::string_view context,
                   std::uint32_t offset) {
  entries_[{normalize_lemma(lemma), pos, normalize_lemma(context)}] = offset;
}

std::optional<std::uint32_t> SenseMap::lookup(std::string_view lemma, PartOfSpeech pos,
                                              std::string_view context) const {
  auto it = entries_.find({normalize_lemma(lemma), pos, normalize_lemma(context)});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::string token_lemma(const conllu::Token& t) {
  if (t.lemma.empty() || t.lemma == "_") return text::to_lower(t.form);
  return t.lemma;
}

const Synset* disambiguate(const conllu::Sentence& s, int token_id, const Lexicon& lex,
                           const WsdStrategy& strategy) {
  const conllu::Token& tok = s.token(token_id);
  auto pos = pos_from_upos(tok.upos);
  if (!pos) return nullptr;
  const std::string lemma = token_lemma(tok);
  auto senses = lex.synsets_of(lemma, *pos);
  if (senses.empty()) return nullptr;
  if (strategy.sense_map != nullptr) {
    for (const conllu::Token& ctx : s.tokens) {
      if (ctx.id == token_id) continue;
      auto offset = strategy.sense_map->lookup(lemma, *pos, token_lemma(ctx));
      if (!offset) continue;
      for (const Synset* sense : senses) {
        if (sense->id.offset == *offset) return sense;
      }
    }
  }
  return senses.front();
}

}  // namespace contragen::wordnet
