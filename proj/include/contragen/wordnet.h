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

// In-memory WordNet built from the WNDB text files (index.* / data.*),
// with sense-ordered lookup, lemma-level antonyms and a pluggable
// word-sense disambiguation strategy.

#ifndef CONTRAGEN_WORDNET_H_
#define CONTRAGEN_WORDNET_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "contragen/conllu.h"

namespace contragen::wordnet {

enum class PartOfSpeech { kNoun, kVerb, kAdjective, kAdverb };

// Accepts WNDB letters (n v a s r) and the names noun/verb/adj/adjective/
// adv/adverb, case-insensitively.
std::optional<PartOfSpeech> parse_pos(std::string_view s);
std::string_view pos_name(PartOfSpeech pos);   // "noun", "adj", ...
char pos_letter(PartOfSpeech pos);              // 'n', 'a', ...
// NOUN, VERB, ADJ, ADV; everything else has no WordNet counterpart.
std::optional<PartOfSpeech> pos_from_upos(std::string_view upos);

struct SynsetId {
  PartOfSpeech pos = PartOfSpeech::kNoun;
  std::uint32_t offset = 0;

  auto operator<=>(const SynsetId&) const = default;
  std::string str() const;  // "10787470-n"
};

struct Pointer {
  std::string symbol;  // "!" is antonymy
  SynsetId target;
  // 1-based word numbers; 0 means the whole synset.
  int source_index = 0;
  int target_index = 0;
};

struct Synset {
  SynsetId id;
  bool satellite = false;
  // As stored: underscores for spaces, adjective markers like "(a)" removed.
  std::vector<std::string> lemmas;
  std::vector<Pointer> pointers;
  std::string gloss;

  // lemmas[i] with underscores rendered as spaces.
  std::string lemma_text(std::size_t i) const;
  // 1-based position of `lemma` (case-insensitive, spaces or underscores).
  std::optional<int> lemma_index(std::string_view lemma) const;
};

// The text of one index/data pair, for loading without touching disk.
struct WndbFiles {
  PartOfSpeech pos;
  std::string index_text;
  std::string data_text;
};

class Lexicon {
 public:
  // Reads every index.X / data.X pair present in dir. Throws IoError when
  // the directory or all pairs are missing, ParseError on a malformed line
  // and ResolutionError on a dangling offset.
  static Lexicon load(const std::filesystem::path& dir);
  static Lexicon from_files(const std::vector<WndbFiles>& files);

  // Sense-frequency order, exactly as listed in the index file.
  std::vector<const Synset*> synsets_of(std::string_view lemma, PartOfSpeech pos) const;
  const Synset* find(SynsetId id) const;

  // Antonyms of the first sense.
  std::vector<std::string> antonyms_of(std::string_view lemma, PartOfSpeech pos) const;
  // Antonyms of `lemma` within `sense`. Throws std::invalid_argument when
  // the sense does not contain the lemma.
  std::vector<std::string> antonyms_of(std::string_view lemma, const Synset& sense) const;

  const std::map<SynsetId, Synset>& synsets() const { return data_; }
  std::size_t index_size() const { return index_.size(); }

  // Descriptions of '!' pointers that have no pointer back; empty in WNDB.
  std::vector<std::string> antonym_asymmetries() const;

 private:
  void load_pair(const WndbFiles& files, std::string_view index_name,
                 std::string_view data_name);
  void resolve() const;

  std::map<std::pair<PartOfSpeech, std::string>, std::vector<std::uint32_t>> index_;
  std::map<SynsetId, Synset> data_;
};

// Lowercase and map spaces to underscores, the WNDB lemma spelling.
std::string normalize_lemma(std::string_view lemma);

// Static (lemma, pos, context lemma) -> offset overrides.
class SenseMap {
 public:
  // One record per line: lemma<TAB>pos<TAB>context_lemma<TAB>offset.
  // Blank lines and lines starting with '#' are ignored.
  static SenseMap load(const std::filesystem::path& path);
  static SenseMap parse(std::string_view text, std::string_view source_name = "<sense-map>");

  void add(std::string_view lemma, PartOfSpeech pos, std::string_view context,
           std::uint32_t offset);
  std::optional<std::uint32_t> lookup(std::string_view lemma, PartOfSpeech pos,
                                      std::string_view context) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::tuple<std::string, PartOfSpeech, std::string>, std::uint32_t> entries_;
};

// Most-frequent-sense when sense_map is null; otherwise the sense map is
// consulted first, falling back to the most frequent sense on a miss.
struct WsdStrategy {
  const SenseMap* sense_map = nullptr;
};

// The chosen synset for a token, or nullptr when its UPOS has no WordNet
// part of speech or the lemma is not in the lexicon.
const Synset* disambiguate(const conllu::Sentence& s, int token_id, const Lexicon& lex,
                           const WsdStrategy& strategy = {});

// The lookup form of a token: its lemma, or its lowercased form when the
// lemma column is empty.
std::string token_lemma(const conllu::Token& t);

}  // namespace contragen::wordnet

#endif  // CONTRAGEN_WORDNET_H_
