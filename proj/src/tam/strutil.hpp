// Copyright 2026 The tam authors.
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

#ifndef TAM_STRUTIL_HPP_
#define TAM_STRUTIL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tam {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);

// Lowercases, folds common Latin-1/Latin Extended-A accents to ASCII and
// collapses whitespace runs to single spaces.
std::string normalize(std::string_view s);

// Normalized alphanumeric tokens; everything else is a separator.
std::vector<std::string> tokenize(std::string_view s);

// Raw tokens split on whitespace only (keeps punctuation, original case).
std::vector<std::string> split_ws(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

// Tab/backslash escaping for the tab-separated file formats.
std::string escape_field(std::string_view s);
std::string unescape_field(std::string_view s);

std::optional<double> parse_number(std::string_view s);

bool starts_with_ci(std::string_view text, std::string_view prefix);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace tam

#endif  // TAM_STRUTIL_HPP_
