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

// English cardinal numerals: digit strings, zero..twenty, the tens up to
// ninety, hyphenated compounds (twenty-one) and "hundred" / "one hundred".

#ifndef CONTRAGEN_NUMERALS_H_
#define CONTRAGEN_NUMERALS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace contragen::rules {

enum class NumeralStyle { kDigits, kWords };

struct Numeral {
  std::int64_t value = 0;
  NumeralStyle style = NumeralStyle::kDigits;
};

// Case-insensitive. Returns nullopt for anything else ("dozens", "2.5").
std::optional<Numeral> parse_numeral(std::string_view form);

// Lowercase words for 0..100; any other value is rendered as digits.
std::string number_to_words(std::int64_t value);

// Renders in the given style, falling back to digits when words do not
// cover the value.
std::string render_numeral(std::int64_t value, NumeralStyle style);

}  // namespace contragen::rules

#endif  // CONTRAGEN_NUMERALS_H_
