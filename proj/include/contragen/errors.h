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

#ifndef CONTRAGEN_ERRORS_H_
#define CONTRAGEN_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contragen {

// Base of every data-level failure raised by the library. The CLI maps
// these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input. `source` is a file name (or "<input>"), `line` is 1-based
// and 0 when the problem is not tied to a single line.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// A reference (offset, id) that does not resolve.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

class TemplateError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class TransportError : public Error {
 public:
  explicit TransportError(const std::string& message, int status = 0)
      : Error(message), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

class CassetteMiss : public TransportError {
 public:
  explicit CassetteMiss(std::string key);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// An LLM reply that does not follow the requested output format.
class FormatReject : public Error {
 public:
  FormatReject(std::string reason, const std::string& message)
      : Error(message), reason_(std::move(reason)) {}
  // Short machine-readable tag, e.g. "format" or "degenerate".
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

class AssemblyError : public Error {
 public:
  using Error::Error;
};

}  // namespace contragen

#endif  // CONTRAGEN_ERRORS_H_
