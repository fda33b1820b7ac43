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

#include "contragen/numerals.h"

#include <array>
#include <charconv>

#include "contragen/text.h"

namespace contragen::rules {

namespace {

constexpr std::array<std::string_view, 20> kUnits = {
    "zero",    "one",     "two",       "three",    "four",
    "five",    "six",     "seven",     "eight",    "nine",
    "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};

// Index i holds the word for 10 * i; 0 and 1 are covered by kUnits.
constexpr std::array<std::string_view, 10> kTens = {
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"};

std::optional<std::int64_t> simple_word(std::string_view w) {
  for (std::size_t i = 0; i < kUnits.size(); ++i) {
    if (w == kUnits[i]) return static_cast<std::int64_t>(i);
  }
  for (std::size_t i = 2; i < kTens.size(); ++i) {
    if (w == kTens[i]) return static_cast<std::int64_t>(10 * i);
  }
  return std::nullopt;
}

std::optional<std::int64_t> word_value(std::string_view w) {
  if (w == "hundred" || w == "one hundred" || w == "one-hundred") return 100;
  if (auto v = simple_word(w)) return v;
  std::size_t dash = w.find('-');
  if (dash == std::string_view::npos) return std::nullopt;
  auto tens = simple_word(w.substr(0, dash));
  auto unit = simple_word(w.substr(dash + 1));
  if (!tens || !unit || *tens < 20 || *tens % 10 != 0 || *unit < 1 || *unit > 9) {
    return std::nullopt;
  }
  return *tens + *unit;
}

}  // namespace

std::optional<Numeral> parse_numeral(std::string_view form) {
  if (form.empty()) return std::nullopt;
  bool digits = true;
  for (char c : form) digits &= (c >= '0' && c <= '9');
  if (digits) {
    if (form.size() > 15) return std::nullopt;
    std::int64_t v = 0;
    std::from_chars(form.data(), form.data() + form.size(), v);
    return Numeral{v, NumeralStyle::kDigits};
  }
  if (auto v = word_value(text::to_lower(form))) return Numeral{*v, NumeralStyle::kWords};
  return std::nullopt;
}

std::string number_to_words(std::int64_t value) {
  if (value < 0 || value > 100) return std::to_string(value);
  if (value == 100) return "one hundred";
  if (value < 20) return std::string(kUnits[static_cast<std::size_t>(value)]);
  std::string out(kTens[static_cast<std::size_t>(value / 10)]);
  if (value % 10 != 0) {
    out.push_back('-');
    out += kUnits[static_cast<std::size_t>(value % 10)];
  }
  return out;
}

std::string render_numeral(std::int64_t value, NumeralStyle style) {
  return style == NumeralStyle::kWords ? number_to_words(value) : std::to_string(value);
}

}  // namespace contragen::rules
