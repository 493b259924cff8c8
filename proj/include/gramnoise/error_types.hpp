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

#ifndef GRAMNOISE_ERROR_TYPES_HPP
#define GRAMNOISE_ERROR_TYPES_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gramnoise {

// The five error types this toolkit injects. DROP is character-level and
// has no confusion set; the other four carry one.
enum class ErrorType { kDrop, kArt, kPrep, kNn, kSva };

inline constexpr std::array<ErrorType, 5> kAllErrorTypes = {
    ErrorType::kDrop, ErrorType::kArt, ErrorType::kPrep, ErrorType::kNn,
    ErrorType::kSva};

inline std::string to_string(ErrorType t) {
  switch (t) {
    case ErrorType::kDrop: return "drop";
    case ErrorType::kArt:  return "art";
    case ErrorType::kPrep: return "prep";
    case ErrorType::kNn:   return "nn";
    case ErrorType::kSva:  return "sva";
  }
  return "?";
}

inline std::optional<ErrorType> parse_error_type(std::string_view s) {
  if (s == "drop") return ErrorType::kDrop;
  if (s == "art") return ErrorType::kArt;
  if (s == "prep") return ErrorType::kPrep;
  if (s == "nn") return ErrorType::kNn;
  if (s == "sva") return ErrorType::kSva;
  return std::nullopt;
}

// The empty token: "no word here". As a matrix row key it means an
// erroneous word gets inserted; as a column value it means the correct
// word gets deleted.
inline const std::string kNullForm = "∅";

// Abstract noun-number and verb-agreement categories.
inline const std::string kFormSg = "SG";
inline const std::string kFormPl = "PL";
inline const std::string kForm3sg = "3SG";
inline const std::string kFormNot3sg = "not-3SG";
inline const std::string kForm2sgPast = "2SG-Past";      // "were"
inline const std::string kFormNot2sgPast = "not-2SG-Past";  // "was"

// Confusion set of each error type, in canonical order. The art and prep
// sets include the empty token, allowing insertions and deletions.
inline const std::vector<std::string>& confusion_set(ErrorType t) {
  static const std::vector<std::string> art = {"a", "an", "the", kNullForm};
  static const std::vector<std::string> prep = {
      "on",    "in",         "at",  "from", "for",    "under",  "over",
      "with",  "into",       "during", "until", "against", "among",
      "throughout", "of",    "to",  "by",   "about",  "like",   "before",
      "after", "since",      "across", "behind", "but", "out",  "up",
      "down",  "off",        kNullForm};
  static const std::vector<std::string> nn = {kFormSg, kFormPl};
  static const std::vector<std::string> sva = {kForm3sg, kFormNot3sg,
                                               kForm2sgPast, kFormNot2sgPast};
  static const std::vector<std::string> none = {};
  switch (t) {
    case ErrorType::kArt:  return art;
    case ErrorType::kPrep: return prep;
    case ErrorType::kNn:   return nn;
    case ErrorType::kSva:  return sva;
    case ErrorType::kDrop: return none;
  }
  return none;
}

inline bool in_confusion_set(ErrorType t, std::string_view form) {
  const auto& set = confusion_set(t);
  return std::find(set.begin(), set.end(), form) != set.end();
}

// The SVA categories pair off: a present-tense verb toggles between 3SG
// and not-3SG, past "to be" between was and were. Cross-pair cells are
// not realizable substitutions.
inline std::optional<std::string> sva_partner(std::string_view form) {
  if (form == kForm3sg) return kFormNot3sg;
  if (form == kFormNot3sg) return kForm3sg;
  if (form == kForm2sgPast) return kFormNot2sgPast;
  if (form == kFormNot2sgPast) return kForm2sgPast;
  return std::nullopt;
}

// Column support of a matrix row: the erroneous forms a correct `row`
// form may turn into. Never contains the identity.
inline std::vector<std::string> column_support(ErrorType t,
                                               const std::string& row) {
  std::vector<std::string> out;
  if (t == ErrorType::kSva) {
    if (auto p = sva_partner(row)) out.push_back(*p);
    return out;
  }
  for (const auto& f : confusion_set(t))
    if (f != row) out.push_back(f);
  return out;
}

}  // namespace gramnoise

#endif  // GRAMNOISE_ERROR_TYPES_HPP
