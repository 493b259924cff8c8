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
// One-sentence-per-line bracketed constituency trees, and the structural
// queries the injector needs: where an article or preposition lives, where
// one could be inserted, which leaves are nouns or finite verbs.

#ifndef GRAMNOISE_TREEBANK_HPP
#define GRAMNOISE_TREEBANK_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gramnoise/error_types.hpp"
#include "gramnoise/io.hpp"
#include "gramnoise/text.hpp"

namespace gramnoise {

struct ParseTree {
  std::string label;                // constituent label or POS tag
  std::vector<ParseTree> children;  // empty for leaves
  std::string token;                // leaves only, PTB escapes kept raw
  int token_index = -1;             // leaves only, 0-based

  bool is_leaf() const { return children.empty(); }
};

class TreeParseError : public DataError {
 public:
  TreeParseError(std::size_t offset, const std::string& what)
      : DataError("tree parse error at offset " + std::to_string(offset) +
                  ": " + what) {}
};

namespace detail {

struct PtbParser {
  std::string_view input;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < input.size() && is_ascii_space(input[pos])) ++pos;
  }

  std::string read_atom() {
    std::size_t start = pos;
    while (pos < input.size() && !is_ascii_space(input[pos]) &&
           input[pos] != '(' && input[pos] != ')')
      ++pos;
    return std::string(input.substr(start, pos - start));
  }

  ParseTree parse_node() {
    if (pos >= input.size() || input[pos] != '(')
      throw TreeParseError(pos, "expected '('");
    ++pos;
    ParseTree node;
    skip_ws();
    node.label = read_atom();  // may be empty: "( (S ...))" root wrappers
    skip_ws();
    if (pos >= input.size()) throw TreeParseError(pos, "unbalanced brackets");
    if (input[pos] == '(') {
      while (pos < input.size() && input[pos] == '(') {
        node.children.push_back(parse_node());
        skip_ws();
      }
      if (pos >= input.size() || input[pos] != ')')
        throw TreeParseError(pos, "unbalanced brackets");
      ++pos;
      return node;
    }
    node.token = read_atom();
    if (node.token.empty())
      throw TreeParseError(pos, "leaf with empty token");
    skip_ws();
    if (pos >= input.size() || input[pos] != ')')
      throw TreeParseError(pos, "unbalanced brackets");
    ++pos;
    return node;
  }
};

inline void number_leaves(ParseTree& node, int& next) {
  if (node.is_leaf()) {
    node.token_index = next++;
    return;
  }
  for (auto& c : node.children) number_leaves(c, next);
}

// Strips PTB function tags and indices ("NP-SBJ-1" -> "NP"). Labels that
// start with '-' (-NONE-, -LRB-) are kept whole.
inline std::string_view base_label(std::string_view label) {
  if (label.empty() || label[0] == '-') return label;
  auto cut = label.find_first_of("-=");
  return cut == std::string_view::npos ? label : label.substr(0, cut);
}

inline std::string decode_ptb_token(const std::string& tok) {
  if (tok == "-LRB-") return "(";
  if (tok == "-RRB-") return ")";
  if (tok == "-LCB-") return "{";
  if (tok == "-RCB-") return "}";
  if (tok == "-LSB-") return "[";
  if (tok == "-RSB-") return "]";
  return tok;
}

}  // namespace detail

inline ParseTree parse_ptb(std::string_view line) {
  detail::PtbParser p{line};
  p.skip_ws();
  if (p.pos >= line.size())
    throw TreeParseError(p.pos, "empty line");
  ParseTree root = p.parse_node();
  p.skip_ws();
  if (p.pos < line.size())
    throw TreeParseError(p.pos, "trailing content after tree");
  int next = 0;
  detail::number_leaves(root, next);
  return root;
}

inline void render_bracketed(const ParseTree& node, std::string& out) {
  out += '(';
  out += node.label;
  if (node.is_leaf()) {
    out += ' ';
    out += node.token;
  } else {
    for (const auto& c : node.children) {
      out += ' ';
      render_bracketed(c, out);
    }
  }
  out += ')';
}

inline std::string render_bracketed(const ParseTree& node) {
  std::string out;
  render_bracketed(node, out);
  return out;
}

struct Leaf {
  std::string token;  // decoded surface form
  std::string tag;
  int token_index;
};

inline void collect_leaves(const ParseTree& node, std::vector<Leaf>& out) {
  if (node.is_leaf()) {
    out.push_back(
        {detail::decode_ptb_token(node.token), node.label, node.token_index});
    return;
  }
  for (const auto& c : node.children) collect_leaves(c, out);
}

inline std::vector<Leaf> leaves(const ParseTree& tree) {
  std::vector<Leaf> out;
  collect_leaves(tree, out);
  return out;
}

// Left-to-right leaf tokens with PTB escapes decoded.
inline std::vector<std::string> render_tokens(const ParseTree& tree) {
  std::vector<std::string> out;
  for (const auto& leaf : leaves(tree)) out.push_back(leaf.token);
  return out;
}

enum class SiteKind { kDelete, kSubstitute, kInsert, kCharDrop };

inline std::string to_string(SiteKind k) {
  switch (k) {
    case SiteKind::kDelete:     return "delete";
    case SiteKind::kSubstitute: return "substitute";
    case SiteKind::kInsert:     return "insert";
    case SiteKind::kCharDrop:   return "char_drop";
  }
  return "?";
}

inline std::optional<SiteKind> parse_site_kind(std::string_view s) {
  if (s == "delete") return SiteKind::kDelete;
  if (s == "substitute") return SiteKind::kSubstitute;
  if (s == "insert") return SiteKind::kInsert;
  if (s == "char_drop") return SiteKind::kCharDrop;
  return std::nullopt;
}

// One position where an error of `error_type` can be introduced. A
// substitute site also covers deletion: drawing the empty token from the
// matrix row deletes the word. Insert sites exist only for art/prep.
struct CandidateSite {
  ErrorType error_type;
  SiteKind site_kind;        // kSubstitute or kInsert
  int token_index;           // for kInsert: position BEFORE which to insert
  std::string current_form;  // confusion-set member or category; ∅ for insert
};

namespace detail {

inline bool tag_blocks_article_insert(std::string_view tag) {
  // Determiner-like and pronoun-like first words rule an NP out as an
  // article-insertion site.
  return tag == "DT" || tag == "PDT" || tag == "WDT" || tag == "PRP" ||
         tag == "PRP$" || tag == "WP" || tag == "WP$" || tag == "EX" ||
         tag == "POS" || tag == "-NONE-";
}

// First leaf index of every NP constituent, paired with that leaf's tag.
inline void np_first_leaves(const ParseTree& node,
                            std::vector<std::pair<int, std::string>>& out) {
  if (node.is_leaf()) return;
  if (base_label(node.label) == "NP") {
    const ParseTree* n = &node;
    while (!n->is_leaf()) n = &n->children.front();
    out.emplace_back(n->token_index, n->label);
  }
  for (const auto& c : node.children) np_first_leaves(c, out);
}

}  // namespace detail

// Enumerates the positions where one error of the requested type can be
// introduced, left to right. DROP is character-level and needs no tree.
inline std::vector<CandidateSite> candidate_sites(const ParseTree& tree,
                                                  ErrorType error_type) {
  std::vector<CandidateSite> sites;
  if (error_type == ErrorType::kDrop) return sites;

  const auto leaf_seq = leaves(tree);
  std::vector<std::pair<int, std::string>> np_firsts;
  detail::np_first_leaves(tree, np_firsts);

  auto add_insert_site = [&sites, error_type](int index) {
    for (const auto& s : sites)
      if (s.site_kind == SiteKind::kInsert && s.token_index == index)
        return;  // nested NPs can share a first leaf
    sites.push_back({error_type, SiteKind::kInsert, index, kNullForm});
  };

  switch (error_type) {
    case ErrorType::kArt: {
      for (const auto& leaf : leaf_seq) {
        std::string form = lower(leaf.token);
        if (leaf.tag == "DT" && (form == "a" || form == "an" || form == "the"))
          sites.push_back(
              {error_type, SiteKind::kSubstitute, leaf.token_index, form});
      }
      for (const auto& [index, tag] : np_firsts)
        if (!detail::tag_blocks_article_insert(tag)) add_insert_site(index);
      break;
    }
    case ErrorType::kPrep: {
      for (const auto& leaf : leaf_seq) {
        std::string form = lower(leaf.token);
        if ((leaf.tag == "IN" || leaf.tag == "TO") &&
            in_confusion_set(ErrorType::kPrep, form) && form != kNullForm)
          sites.push_back(
              {error_type, SiteKind::kSubstitute, leaf.token_index, form});
      }
      // An NP directly following a verbal or nominal head, with no
      // preposition in between, admits a spurious preposition.
      for (const auto& [index, tag] : np_firsts) {
        if (index <= 0 || tag == "-NONE-") continue;
        const auto& prev = leaf_seq[static_cast<std::size_t>(index - 1)];
        if (starts_with(prev.tag, "VB") || starts_with(prev.tag, "NN"))
          add_insert_site(index);
      }
      break;
    }
    case ErrorType::kNn: {
      for (const auto& leaf : leaf_seq) {
        if (leaf.tag == "NN")
          sites.push_back(
              {error_type, SiteKind::kSubstitute, leaf.token_index, kFormSg});
        else if (leaf.tag == "NNS")
          sites.push_back(
              {error_type, SiteKind::kSubstitute, leaf.token_index, kFormPl});
      }
      break;
    }
    case ErrorType::kSva: {
      for (const auto& leaf : leaf_seq) {
        if (leaf.tag == "VBZ") {
          sites.push_back(
              {error_type, SiteKind::kSubstitute, leaf.token_index, kForm3sg});
        } else if (leaf.tag == "VBP") {
          sites.push_back({error_type, SiteKind::kSubstitute, leaf.token_index,
                           kFormNot3sg});
        } else if (leaf.tag == "VBD") {
          std::string form = lower(leaf.token);
          if (form == "was")
            sites.push_back({error_type, SiteKind::kSubstitute,
                             leaf.token_index, kFormNot2sgPast});
          else if (form == "were")
            sites.push_back({error_type, SiteKind::kSubstitute,
                             leaf.token_index, kForm2sgPast});
        }
      }
      break;
    }
    case ErrorType::kDrop:
      break;
  }

  std::stable_sort(sites.begin(), sites.end(),
                   [](const CandidateSite& a, const CandidateSite& b) {
                     if (a.token_index != b.token_index)
                       return a.token_index < b.token_index;
                     return static_cast<int>(a.site_kind) <
                            static_cast<int>(b.site_kind);
                   });
  return sites;
}

}  // namespace gramnoise

#endif  // GRAMNOISE_TREEBANK_HPP
