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

#include "tam/strutil.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>

namespace tam {
namespace {

// Two-byte UTF-8 accent folding for Latin-1 supplement and Latin Extended-A.
// Returns the ASCII replacement (possibly two chars, e.g. ae) or empty when
// the pair is not a known accent.
std::string fold_accent(unsigned char b0, unsigned char b1) {
  const std::uint32_t cp = (static_cast<std::uint32_t>(b0 & 0x1f) << 6) | (b1 & 0x3f);
  auto in = [cp](std::uint32_t lo, std::uint32_t hi) { return cp >= lo && cp <= hi; };
  if (in(0xc0, 0xc5) || in(0xe0, 0xe5) || in(0x100, 0x105)) return "a";
  if (cp == 0xc6 || cp == 0xe6) return "ae";
  if (cp == 0xc7 || cp == 0xe7 || in(0x106, 0x10d)) return "c";
  if (in(0x10e, 0x111)) return "d";
  if (in(0xc8, 0xcb) || in(0xe8, 0xeb) || in(0x112, 0x11b)) return "e";
  if (in(0x11c, 0x123)) return "g";
  if (in(0x124, 0x127)) return "h";
  if (in(0xcc, 0xcf) || in(0xec, 0xef) || in(0x128, 0x131)) return "i";
  if (in(0x134, 0x135)) return "j";
  if (in(0x136, 0x138)) return "k";
  if (in(0x139, 0x142)) return "l";
  if (cp == 0xd1 || cp == 0xf1 || in(0x143, 0x14b)) return "n";
  if (in(0xd2, 0xd6) || cp == 0xd8 || in(0xf2, 0xf6) || cp == 0xf8 || in(0x14c, 0x151)) return "o";
  if (in(0x154, 0x159)) return "r";
  if (in(0x15a, 0x161) || cp == 0xdf) return "s";
  if (in(0x162, 0x167)) return "t";
  if (in(0xd9, 0xdc) || in(0xf9, 0xfc) || in(0x168, 0x173)) return "u";
  if (in(0x174, 0x175)) return "w";
  if (cp == 0xdd || cp == 0xfd || cp == 0xff || in(0x176, 0x178)) return "y";
  if (in(0x179, 0x17e)) return "z";
  return "";
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) out.push_back(static_cast<char>(std::tolower(c)));
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string normalize(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  auto put = [&](char c) {
    if (c == ' ') {
      pending_space = !out.empty();
      return;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(c);
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
      put(std::isspace(c) ? ' ' : static_cast<char>(std::tolower(c)));
    } else if ((c & 0xe0) == 0xc0 && i + 1 < s.size()) {
      const std::string folded = fold_accent(c, static_cast<unsigned char>(s[i + 1]));
      for (char f : folded) put(f);
      if (folded.empty()) {  // unknown two-byte sequence, keep verbatim
        put(static_cast<char>(c));
        put(s[i + 1]);
      }
      ++i;
    } else {
      put(static_cast<char>(c));
    }
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view s) {
  const std::string n = normalize(s);
  std::vector<std::string> tokens;
  std::string cur;
  for (unsigned char c : n) {
    if (std::isalnum(c)) {
      cur.push_back(static_cast<char>(c));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char c : s) {
    if (std::isspace(c)) {
      if (!cur.empty()) {
        out.push_back(std::move(cur));
        cur.clear();
      }
    } else {
      cur.push_back(static_cast<char>(c));
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string escape_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\') {
      out += "\\\\";
    } else if (c == '\t') {
      out += "\\t";
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string unescape_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      const char n = s[i + 1];
      if (n == 't') {
        out.push_back('\t');
        ++i;
        continue;
      }
      if (n == 'n') {
        out.push_back('\n');
        ++i;
        continue;
      }
      if (n == '\\') {
        out.push_back('\\');
        ++i;
        continue;
      }
    }
    out.push_back(s[i]);
  }
  return out;
}

std::optional<double> parse_number(std::string_view s) {
  const std::string t = trim(s);
  if (t.empty()) return std::nullopt;
  double value = 0;
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

bool starts_with_ci(std::string_view text, std::string_view prefix) {
  if (prefix.size() > text.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i]))) {
      return false;
    }
  }
  return true;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace tam
