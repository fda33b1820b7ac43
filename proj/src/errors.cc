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

#include "contragen/errors.h"

namespace contragen {

namespace {

std::string located(const std::string& source, std::size_t line,
                    const std::string& message) {
  if (line == 0) return source + ": " + message;
  return source + ":" + std::to_string(line) + ": " + message;
}

}  // namespace

ParseError::ParseError(std::string source, std::size_t line,
                       const std::string& message)
    : Error(located(source, line, message)),
      source_(std::move(source)),
      line_(line) {}

CassetteMiss::CassetteMiss(std::string key)
    : TransportError("cassette miss: no recorded response for " + key),
      key_(std::move(key)) {}

}  // namespace contragen
