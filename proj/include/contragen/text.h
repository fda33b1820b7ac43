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

// Small ASCII-oriented string helpers. UTF-8 bytes >= 0x80 pass through
// untouched by the case functions.

#ifndef CONTRAGEN_TEXT_H_
#define CONTRAGEN_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace contragen::text {

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split_whitespace(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool iequals(std::string_view a, std::string_view b);

// Position of the first case-insensitive occurrence of `needle` at or after
// `from`, or npos.
std::size_t ifind(std::string_view haystack, std::string_view needle,
                  std::size_t from = 0);

// Applies the capitalization pattern of `model` (all-caps, initial cap, or
// lower) to `word`.
std::string match_case(std::string_view model, std::string_view word);

// Lowercases, deletes ASCII punctuation, collapses whitespace runs to one
// space and trims.
std::string normalize_key(std::string_view s);

// Replaces the UTF-8 curly quotes U+2018/2019/201C/201D by ' and ".
std::string straighten_quotes(std::string_view s);

// Trims, then repeatedly removes a matching pair of enclosing quotes or
// square brackets, trimming again after each removal.
std::string_view strip_enclosing(std::string_view s);

// Number of whitespace-separated words.
std::size_t word_count(std::string_view s);

}  // namespace contragen::text

#endif  // CONTRAGEN_TEXT_H_
