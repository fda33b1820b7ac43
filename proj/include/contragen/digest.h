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

#ifndef CONTRAGEN_DIGEST_H_
#define CONTRAGEN_DIGEST_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace contragen {

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::filesystem::path& path);

// Current UTC time as 2026-01-31T12:00:00Z.
std::string utc_timestamp();

}  // namespace contragen

#endif  // CONTRAGEN_DIGEST_H_
