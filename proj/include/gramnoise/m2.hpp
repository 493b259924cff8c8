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
//
// Reader/writer for the M2 annotation format used by the CoNLL GEC shared
// tasks: "S" lines carry the tokenized learner sentence, "A" lines carry
// corrections as token spans with an error code, and a blank line closes
// the entry.

#ifndef GRAMNOISE_M2_HPP
#define GRAMNOISE_M2_HPP

#include <cstddef>
#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gramnoise/io.hpp"
#include "gramnoise/text.hpp"

namespace gramnoise {

struct M2Annotation {
  int span_start = 0;       // token index, inclusive
  int span_end = 0;         // token index, exclusive; == start for insertions
  std::string code;         // error code, e.g. "ArtOrDet"
  std::string correction;   // replacement text; empty for deletions
  int annotator = 0;

  bool operator==(const M2Annotation&) const = default;
};

struct M2Entry {
  std::vector<std::string> tokens;
  std::vector<M2Annotation> annotations;

  bool operator==(const M2Entry&) const = default;
};

class M2ParseError : public DataError {
 public:
  M2ParseError(std::size_t line_no, const std::string& what)
      : DataError("m2 parse error at line " + std::to_string(line_no) + ": " +
                  what) {}
};

namespace detail {

inline std::vector<std::string> split_on(std::string_view s,
                                         std::string_view delim) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  for (;;) {
    std::size_t next = s.find(delim, pos);
    if (next == std::string_view::npos) {
      fields.emplace_back(s.substr(pos));
      return fields;
    }
    fields.emplace_back(s.substr(pos, next - pos));
    pos = next + delim.size();
  }
}

inline bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    i = 1;
    if (s.size() == 1) return false;
  }
  long v = 0;
  for (; i < s.size(); ++i) {
    if (!is_ascii_digit(s[i])) return false;
    v = v * 10 + (s[i] - '0');
    if (v > 1000000000) return false;
  }
  out = static_cast<int>(neg ? -v : v);
  return true;
}

}  // namespace detail

// Parses a whole M2 stream. Entries without any A-line are kept: error-free
// sentences are data too. Annotator noop markers (span -1 -1) are dropped.
inline std::vector<M2Entry> parse_m2(std::istream& in) {
  std::vector<M2Entry> entries;
  bool in_entry = false;
  M2Entry current;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (in_entry) {
        entries.push_back(std::move(current));
        current = {};
        in_entry = false;
      }
      continue;
    }
    if (starts_with(line, "S ") || line == "S") {
      if (in_entry) {  // a new S line implicitly closes the previous entry
        entries.push_back(std::move(current));
        current = {};
      }
      current.tokens = split_ws(std::string_view(line).substr(1));
      in_entry = true;
      continue;
    }
    if (starts_with(line, "A ")) {
      if (!in_entry)
        throw M2ParseError(line_no, "annotation before any S line");
      auto fields = detail::split_on(std::string_view(line).substr(2), "|||");
      if (fields.size() < 2)
        throw M2ParseError(line_no, "expected |||-separated fields");
      auto span_parts = split_ws(fields[0]);
      int start = 0, end = 0;
      if (span_parts.size() != 2 || !detail::parse_int(span_parts[0], start) ||
          !detail::parse_int(span_parts[1], end))
        throw M2ParseError(line_no, "malformed span \"" + fields[0] + "\"");
      if (start == -1 && end == -1) continue;  // noop annotation
      if (start < 0 || end < start ||
          static_cast<std::size_t>(end) > current.tokens.size())
        throw M2ParseError(line_no, "span out of range \"" + fields[0] + "\"");
      M2Annotation a;
      a.span_start = start;
      a.span_end = end;
      a.code = fields[1];
      if (fields.size() > 2) a.correction = fields[2];
      if (fields.size() > 5) {
        int annot = 0;
        if (detail::parse_int(fields[5], annot)) a.annotator = annot;
      }
      current.annotations.push_back(std::move(a));
      continue;
    }
    throw M2ParseError(line_no, "unrecognized line prefix");
  }
  if (in_entry) entries.push_back(std::move(current));
  return entries;
}

inline std::vector<M2Entry> parse_m2(const std::string& text) {
  std::istringstream in(text);
  return parse_m2(in);
}

inline std::vector<M2Entry> parse_m2_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open m2 file: " + path);
  return parse_m2(in);
}

inline std::string render_m2(std::span<const M2Entry> entries) {
  std::string out;
  for (const auto& e : entries) {
    out += "S " + join(e.tokens) + "\n";
    for (const auto& a : e.annotations) {
      out += "A " + std::to_string(a.span_start) + " " +
             std::to_string(a.span_end) + "|||" + a.code + "|||" +
             a.correction + "|||REQUIRED|||-NONE-|||" +
             std::to_string(a.annotator) + "\n";
    }
    out += "\n";
  }
  return out;
}

}  // namespace gramnoise

#endif  // GRAMNOISE_M2_HPP
