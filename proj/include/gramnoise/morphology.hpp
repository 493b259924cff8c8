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
// Deterministic English inflection: noun number toggling, verb agreement
// toggling, and a/an selection. Suffix rules plus a small exception
// lexicon; when neither applies the word is flagged so callers can skip
// the site instead of emitting a mangled form.

#ifndef GRAMNOISE_MORPHOLOGY_HPP
#define GRAMNOISE_MORPHOLOGY_HPP

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "gramnoise/inflection_data.hpp"
#include "gramnoise/io.hpp"
#include "gramnoise/text.hpp"

namespace gramnoise {

class InflectionLexicon {
 public:
  static InflectionLexicon from_tsv(std::istream& in) {
    InflectionLexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      auto tab1 = line.find('\t');
      auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
      if (tab2 == std::string::npos)
        throw DataError("lexicon line " + std::to_string(line_no) +
                        ": expected form1<TAB>form2<TAB>kind");
      std::string form1 = lower(line.substr(0, tab1));
      std::string form2 = lower(line.substr(tab1 + 1, tab2 - tab1 - 1));
      std::string kind = line.substr(tab2 + 1);
      if (kind == "noun") {
        lex.noun_sg2pl_.emplace(form1, form2);
        lex.noun_pl2sg_.emplace(form2, form1);
      } else if (kind == "verb") {
        lex.verb_to_3sg_.emplace(form1, form2);
        lex.verb_from_3sg_.emplace(form2, form1);
      } else if (kind == "invariant") {
        lex.invariant_nouns_.insert(form1);
      } else if (kind == "article") {
        lex.article_choice_.emplace(form1, form2);
      } else {
        throw DataError("lexicon line " + std::to_string(line_no) +
                        ": unknown kind \"" + kind + "\"");
      }
    }
    return lex;
  }

  static InflectionLexicon from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open lexicon file: " + path);
    return from_tsv(in);
  }

  // The embedded copy of data/inflections.tsv.
  static const InflectionLexicon& builtin() {
    static const InflectionLexicon lex = [] {
      std::istringstream in(kBuiltinInflectionsTsv);
      return from_tsv(in);
    }();
    return lex;
  }

  bool is_invariant_noun(const std::string& w) const {
    return invariant_nouns_.count(w) != 0;
  }

  std::optional<std::string> noun_sg2pl(const std::string& w) const {
    return find(noun_sg2pl_, w);
  }
  std::optional<std::string> noun_pl2sg(const std::string& w) const {
    return find(noun_pl2sg_, w);
  }
  std::optional<std::string> verb_to_3sg(const std::string& w) const {
    return find(verb_to_3sg_, w);
  }
  std::optional<std::string> verb_from_3sg(const std::string& w) const {
    return find(verb_from_3sg_, w);
  }
  std::optional<std::string> article_for(const std::string& w) const {
    return find(article_choice_, w);
  }

 private:
  static std::optional<std::string> find(
      const std::unordered_map<std::string, std::string>& m,
      const std::string& k) {
    auto it = m.find(k);
    if (it == m.end()) return std::nullopt;
    return it->second;
  }

  std::unordered_map<std::string, std::string> noun_sg2pl_;
  std::unordered_map<std::string, std::string> noun_pl2sg_;
  std::unordered_map<std::string, std::string> verb_to_3sg_;
  std::unordered_map<std::string, std::string> verb_from_3sg_;
  std::unordered_set<std::string> invariant_nouns_;
  std::unordered_map<std::string, std::string> article_choice_;
};

namespace detail {

inline bool is_vowel_letter(char c) {
  c = to_lower_ascii(c);
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// The regular English -s suffix, shared by noun plurals and 3SG verbs.
inline std::string add_s_suffix(const std::string& w) {
  auto n = w.size();
  if (n >= 2 && w[n - 1] == 'y' && !is_vowel_letter(w[n - 2]))
    return w.substr(0, n - 1) + "ies";
  if (ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "z") ||
      ends_with(w, "ch") || ends_with(w, "sh"))
    return w + "es";
  if (n >= 2 && w[n - 1] == 'o' && !is_vowel_letter(w[n - 2]))
    return w + "es";
  return w + "s";
}

inline std::optional<std::string> strip_s_suffix(const std::string& w) {
  auto n = w.size();
  if (n > 4 && ends_with(w, "ies")) return w.substr(0, n - 3) + "y";
  if (ends_with(w, "sses") || ends_with(w, "zzes") || ends_with(w, "xes") ||
      ends_with(w, "ches") || ends_with(w, "shes") || ends_with(w, "oes"))
    return w.substr(0, n - 2);
  if (n > 2 && ends_with(w, "es")) return w.substr(0, n - 1);
  if (n > 1 && ends_with(w, "s") && !ends_with(w, "ss"))
    return w.substr(0, n - 1);
  return std::nullopt;
}

}  // namespace detail

struct InflectionResult {
  std::string form;       // surface form, original capitalization
  bool changed = false;   // form differs from the input
  bool invariant = false; // no distinct counterpart exists; skip the site
};

// Plural of a lowercase singular noun; nullopt when the noun has no
// distinct plural.
inline std::optional<std::string> pluralize(const std::string& w,
                                            const InflectionLexicon& lex) {
  if (lex.is_invariant_noun(w)) return std::nullopt;
  if (auto v = lex.noun_sg2pl(w)) return v;
  return detail::add_s_suffix(w);
}

// Singular of a lowercase plural noun; nullopt when no rule applies.
inline std::optional<std::string> singularize(const std::string& w,
                                              const InflectionLexicon& lex) {
  if (lex.is_invariant_noun(w)) return std::nullopt;
  if (auto v = lex.noun_pl2sg(w)) return v;
  return detail::strip_s_suffix(w);
}

// SG -> PL or PL -> SG, direction guessed from the surface form (lexicon
// first, then suffix shape). Capitalization is preserved. Callers that
// know the POS tag should use pluralize/singularize directly.
inline InflectionResult toggle_noun_number(const std::string& token,
                                           const InflectionLexicon& lex) {
  if (!is_all_alpha(token))
    throw DataError("toggle_noun_number: non-alphabetic token \"" + token +
                    "\"");
  const std::string w = lower(token);
  std::optional<std::string> out;
  if (lex.is_invariant_noun(w)) {
    return {token, false, true};
  } else if (lex.noun_pl2sg(w)) {
    out = lex.noun_pl2sg(w);
  } else if (lex.noun_sg2pl(w)) {
    out = lex.noun_sg2pl(w);
  } else {
    bool looks_plural = ends_with(w, "s") && !ends_with(w, "ss") &&
                        !ends_with(w, "us") && !ends_with(w, "is");
    out = looks_plural ? detail::strip_s_suffix(w) : detail::add_s_suffix(w);
  }
  if (!out || *out == w) return {token, false, true};
  return {apply_case(token, *out), true, false};
}

// 3SG form of a lowercase base verb.
inline std::string verb_to_3sg(const std::string& w,
                               const InflectionLexicon& lex) {
  if (auto v = lex.verb_to_3sg(w)) return *v;
  return detail::add_s_suffix(w);
}

// Base form of a lowercase 3SG verb; nullopt when the token does not look
// like a 3SG form.
inline std::optional<std::string> verb_from_3sg(const std::string& w,
                                                const InflectionLexicon& lex) {
  if (auto v = lex.verb_from_3sg(w)) return v;
  return detail::strip_s_suffix(w);
}

// Toggles agreement: VBZ -> base, VBP -> 3SG, VBD only for was/were.
inline InflectionResult toggle_verb_agreement(const std::string& token,
                                              std::string_view tag,
                                              const InflectionLexicon& lex) {
  const std::string w = lower(token);
  std::optional<std::string> out;
  if (tag == "VBZ") {
    out = verb_from_3sg(w, lex);
  } else if (tag == "VBP") {
    out = verb_to_3sg(w, lex);
  } else if (tag == "VBD") {
    if (w == "was")
      out = "were";
    else if (w == "were")
      out = "was";
    else
      throw DataError("toggle_verb_agreement: VBD token \"" + token +
                      "\" is not was/were");
  } else {
    throw DataError("toggle_verb_agreement: unsupported tag \"" +
                    std::string(tag) + "\"");
  }
  if (!out || *out == w) return {token, false, true};
  return {apply_case(token, *out), true, false};
}

// "a" or "an" for the word the article will precede. Exception list first,
// then the vowel-letter rule.
inline std::string choose_indefinite(const std::string& following_word,
                                     const InflectionLexicon& lex) {
  if (following_word.empty()) return "a";
  const std::string w = lower(following_word);
  if (auto v = lex.article_for(w)) return *v;
  return detail::is_vowel_letter(w[0]) ? "an" : "a";
}

}  // namespace gramnoise

#endif  // GRAMNOISE_MORPHOLOGY_HPP
