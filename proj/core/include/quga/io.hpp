// Copyright 2026 The quga Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace quga::io {

/// Drops a trailing '\r' left by CRLF files.
void strip_cr(std::string &line);

/// Splits on commas. Quoting is not supported; fields are not trimmed.
[[nodiscard]] std::vector<std::string> split_csv(std::string_view line);

/// Throw ParseError prefixed with `where` on malformed text.
[[nodiscard]] std::int64_t parse_int(std::string_view text, const std::string &where);
[[nodiscard]] double parse_double(std::string_view text, const std::string &where);

/// 17 significant digits, round-trip exact.
[[nodiscard]] std::string format_double(double v);

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
[[nodiscard]] std::string fnv1a_hex(std::string_view bytes);

[[nodiscard]] std::string read_file(const std::filesystem::path &path);

/// Writes via a temporary file and rename so readers never see partial output.
void write_file_atomic(const std::filesystem::path &path, std::string_view contents);

}  // namespace quga::io
