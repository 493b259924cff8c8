// Copyright 2026 The gramnoise Authors
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

#ifndef GRAMNOISE_TEXT_HPP
#define GRAMNOISE_TEXT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gramnoise {

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_ascii_space(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_ascii_space(s[i])) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

inline std::string join(const std::vector<std::string>& tokens,
                        std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += sep;
    out += tokens[i];
  }
  return out;
}

inline char to_lower_ascii(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline char to_upper_ascii(char c) {
  return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
}

inline bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

inline bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_ascii_lower(char c) { return c >= 'a' && c <= 'z'; }

// ASCII-only lowering; non-ASCII bytes pass through untouched.
inline std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = to_lower_ascii(c);
  return out;
}

inline std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = to_upper_ascii(c);
  return out;
}

inline bool is_all_alpha(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_ascii_alpha(c)) return false;
  return true;
}

// Surface capitalization pattern of a token.
enum class CasePattern { kLower, kInitialUpper, kAllUpper, kOther };

inline CasePattern case_pattern(std::string_view s) {
  bool any_upper = false, any_lower = false;
  for (char c : s) {
    if (is_ascii_upper(c)) any_upper = true;
    if (is_ascii_lower(c)) any_lower = true;
  }
  if (!any_upper) return CasePattern::kLower;
  if (!any_lower) return CasePattern::kAllUpper;
  if (is_ascii_upper(s.front())) {
    for (std::size_t i = 1; i < s.size(); ++i)
      if (is_ascii_upper(s[i])) return CasePattern::kOther;
    return CasePattern::kInitialUpper;
  }
  return CasePattern::kOther;
}

// Renders `form` (assumed lowercase) with the capitalization of `sample`.
inline std::string apply_case(std::string_view sample, std::string_view form) {
  std::string out(form);
  switch (case_pattern(sample)) {
    case CasePattern::kAllUpper:
      if (sample.size() > 1) return upper(out);
      [[fallthrough]];  // single capital letter reads as initial-upper
    case CasePattern::kInitialUpper:
      if (!out.empty()) out[0] = to_upper_ascii(out[0]);
      return out;
    default:
      return out;
  }
}

inline std::string capitalize_first(std::string_view s) {
  std::string out(s);
  if (!out.empty()) out[0] = to_upper_ascii(out[0]);
  return out;
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

// Splits a UTF-8 string into codepoint-sized chunks. Invalid continuation
// bytes are passed through as single-byte chunks rather than rejected.
inline std::vector<std::string> utf8_chars(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    if (b >= 0xF0)
      len = 4;
    else if (b >= 0xE0)
      len = 3;
    else if (b >= 0xC0)
      len = 2;
    if (i + len > s.size()) len = 1;
    out.emplace_back(s.substr(i, len));
    i += len;
  }
  return out;
}

}  // namespace gramnoise

#endif  // GRAMNOISE_TEXT_HPP
