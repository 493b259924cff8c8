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
// Distills M2 correction annotations into per-error-type confusion
// matrices. Raw counts are tallied in the correction direction
// (learner form -> corrected form); the built matrices run the other way:
// a row is keyed by the CORRECT form and distributes probability over the
// erroneous replacements, which is the direction injection consumes.

#ifndef GRAMNOISE_CONFUSION_HPP
#define GRAMNOISE_CONFUSION_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "gramnoise/error_types.hpp"
#include "gramnoise/io.hpp"
#include "gramnoise/m2.hpp"
#include "gramnoise/morphology.hpp"
#include "gramnoise/text.hpp"
#include "gramnoise/version.hpp"

namespace gramnoise {

using CodeMap = std::map<std::string, ErrorType>;

// NUCLE error codes for the four matrix-backed types. Other corpora use
// different inventories; the CLI lets callers extend or replace this.
inline CodeMap default_code_map() {
  return {{"ArtOrDet", ErrorType::kArt},
          {"Prep", ErrorType::kPrep},
          {"Nn", ErrorType::kNn},
          {"SVA", ErrorType::kSva}};
}

struct CountTable {
  // counts[learner_form][corrected_form]
  std::map<std::string, std::map<std::string, std::uint64_t>> counts;
  // Mapped annotations whose forms fall outside the confusion set (or that
  // do not change anything). Reported, never silently dropped.
  std::uint64_t other = 0;

  std::uint64_t cell_total() const {
    std::uint64_t n = 0;
    for (const auto& [l, row] : counts)
      for (const auto& [c, v] : row) n += v;
    return n;
  }
};

struct ErrorStats {
  std::map<ErrorType, CountTable> tables;
  std::uint64_t total_mapped = 0;
  std::map<std::string, std::uint64_t> unmapped_codes;
};

namespace detail {

// Single confusion-set member or the empty token; nullopt = outside set.
inline std::optional<std::string> classify_set_form(ErrorType type,
                                                    std::string_view text) {
  auto tokens = split_ws(text);
  if (tokens.empty()) return kNullForm;
  if (tokens.size() != 1) return std::nullopt;
  std::string form = lower(tokens[0]);
  if (form == "-none-") return kNullForm;
  if (in_confusion_set(type, form)) return form;
  return std::nullopt;
}

struct CategoryPair {
  std::string learner, corrected;
};

inline std::optional<CategoryPair> classify_nn(std::string_view span,
                                               std::string_view corr,
                                               const InflectionLexicon& lex) {
  auto ls = split_ws(span);
  auto cs = split_ws(corr);
  if (ls.size() != 1 || cs.size() != 1) return std::nullopt;
  std::string l = lower(ls[0]), c = lower(cs[0]);
  if (l == c) return std::nullopt;
  if (auto pl = pluralize(l, lex); pl && *pl == c)
    return CategoryPair{kFormSg, kFormPl};
  if (auto sg = singularize(l, lex); sg && *sg == c)
    return CategoryPair{kFormPl, kFormSg};
  return std::nullopt;
}

inline std::optional<CategoryPair> classify_sva(std::string_view span,
                                                std::string_view corr,
                                                const InflectionLexicon& lex) {
  auto ls = split_ws(span);
  auto cs = split_ws(corr);
  if (ls.size() != 1 || cs.size() != 1) return std::nullopt;
  std::string l = lower(ls[0]), c = lower(cs[0]);
  if (l == c) return std::nullopt;
  if (l == "was" && c == "were")
    return CategoryPair{kFormNot2sgPast, kForm2sgPast};
  if (l == "were" && c == "was")
    return CategoryPair{kForm2sgPast, kFormNot2sgPast};
  if (verb_to_3sg(l, lex) == c) return CategoryPair{kFormNot3sg, kForm3sg};
  if (auto base = verb_from_3sg(l, lex); base && *base == c)
    return CategoryPair{kForm3sg, kFormNot3sg};
  return std::nullopt;
}

}  // namespace detail

// Tallies every mapped annotation into count[type][learner][corrected].
// All annotators are counted independently. Forms are lowercased; surface
// case is a rendering concern handled at injection time.
inline ErrorStats collect_stats(
    std::span<const M2Entry> entries, const CodeMap& code_map,
    const InflectionLexicon& lex = InflectionLexicon::builtin()) {
  ErrorStats stats;
  for (ErrorType t :
       {ErrorType::kArt, ErrorType::kPrep, ErrorType::kNn, ErrorType::kSva})
    stats.tables[t];  // ensure tables exist even with no data
  for (const auto& entry : entries) {
    for (const auto& a : entry.annotations) {
      auto it = code_map.find(a.code);
      if (it == code_map.end()) {
        ++stats.unmapped_codes[a.code];
        continue;
      }
      ErrorType type = it->second;
      ++stats.total_mapped;
      CountTable& table = stats.tables[type];

      std::string span_text;
      for (int i = a.span_start; i < a.span_end; ++i) {
        if (!span_text.empty()) span_text += ' ';
        span_text += entry.tokens[static_cast<std::size_t>(i)];
      }

      if (type == ErrorType::kArt || type == ErrorType::kPrep) {
        auto learner = detail::classify_set_form(type, span_text);
        auto corrected = detail::classify_set_form(type, a.correction);
        if (!learner || !corrected || *learner == *corrected) {
          ++table.other;
        } else {
          ++table.counts[*learner][*corrected];
        }
      } else if (type == ErrorType::kNn) {
        if (auto pair = detail::classify_nn(span_text, a.correction, lex))
          ++table.counts[pair->learner][pair->corrected];
        else
          ++table.other;
      } else if (type == ErrorType::kSva) {
        if (auto pair = detail::classify_sva(span_text, a.correction, lex))
          ++table.counts[pair->learner][pair->corrected];
        else
          ++table.other;
      } else {
        ++table.other;  // drop has no M2 source
      }
    }
  }
  return stats;
}

struct SiteActionPriors {
  double del = 0.0, sub = 1.0, ins = 0.0;
};

class ConfusionMatrixSet {
 public:
  double alpha = 0.0;
  // rows[type][correct_form][erroneous_form] = probability
  std::map<ErrorType, std::map<std::string, std::map<std::string, double>>>
      rows;
  std::map<ErrorType, SiteActionPriors> priors;
  std::map<ErrorType, std::vector<std::string>> uniform_rows;  // zero-mass rows
  std::map<ErrorType, std::uint64_t> other_bucket;
  std::uint64_t total_mapped = 0;
  std::map<std::string, std::uint64_t> unmapped_codes;
  nlohmann::json source;  // corpus provenance, filled by the CLI

  bool has(ErrorType t) const { return rows.count(t) != 0; }

  const std::map<std::string, double>& row(ErrorType t,
                                           const std::string& form) const {
    auto mt = rows.find(t);
    if (mt == rows.end())
      throw DataError("confusion matrices missing type " + to_string(t));
    auto r = mt->second.find(form);
    if (r == mt->second.end())
      throw DataError("confusion matrix " + to_string(t) +
                      " has no row for \"" + form + "\"");
    return r->second;
  }

  void validate() const {
    for (const auto& [type, matrix] : rows) {
      for (const auto& [form, cells] : matrix) {
        if (!in_confusion_set(type, form))
          throw DataError("matrix " + to_string(type) + ": row \"" + form +
                          "\" outside the confusion set");
        double sum = 0.0;
        for (const auto& [col, p] : cells) {
          if (!in_confusion_set(type, col) || col == form)
            throw DataError("matrix " + to_string(type) + ": cell \"" + form +
                            "\"->\"" + col + "\" outside the row support");
          if (p < 0.0)
            throw DataError("matrix " + to_string(type) +
                            ": negative probability");
          sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9)
          throw DataError("matrix " + to_string(type) + ": row \"" + form +
                          "\" sums to " + std::to_string(sum));
      }
    }
  }
};

// Normalizes counts into noise-direction matrices. Every form of the
// confusion set gets a row; rows with zero mass fall back to a uniform
// distribution over the support and are listed in uniform_rows.
inline ConfusionMatrixSet build_confusion_matrices(const ErrorStats& stats,
                                                   double alpha = 0.0) {
  if (alpha < 0.0) throw DataError("smoothing alpha must be >= 0");
  ConfusionMatrixSet set;
  set.alpha = alpha;
  set.total_mapped = stats.total_mapped;
  set.unmapped_codes = stats.unmapped_codes;
  for (ErrorType type :
       {ErrorType::kArt, ErrorType::kPrep, ErrorType::kNn, ErrorType::kSva}) {
    const CountTable empty;
    auto ti = stats.tables.find(type);
    const CountTable& table = ti == stats.tables.end() ? empty : ti->second;
    set.other_bucket[type] = table.other;

    auto count_of = [&table](const std::string& learner,
                             const std::string& corrected) -> std::uint64_t {
      auto li = table.counts.find(learner);
      if (li == table.counts.end()) return 0;
      auto ci = li->second.find(corrected);
      return ci == li->second.end() ? 0 : ci->second;
    };

    for (const auto& correct : confusion_set(type)) {
      auto support = column_support(type, correct);
      std::vector<double> weights;
      weights.reserve(support.size());
      double total = 0.0;
      for (const auto& erroneous : support) {
        // Noise direction reverses the correction direction.
        double w = static_cast<double>(count_of(erroneous, correct)) + alpha;
        weights.push_back(w);
        total += w;
      }
      auto& row = set.rows[type][correct];
      if (total <= 0.0) {
        set.uniform_rows[type].push_back(correct);
        double u = 1.0 / static_cast<double>(support.size());
        for (const auto& erroneous : support) row[erroneous] = u;
      } else {
        for (std::size_t i = 0; i < support.size(); ++i)
          row[support[i]] = weights[i] / total;
      }
    }

    SiteActionPriors p;
    if (type == ErrorType::kArt || type == ErrorType::kPrep) {
      std::uint64_t del = 0, ins = 0, sub = 0;
      for (const auto& [learner, cells] : table.counts) {
        for (const auto& [corrected, n] : cells) {
          if (learner == kNullForm)
            del += n;  // learner omitted a needed word: noise deletes
          else if (corrected == kNullForm)
            ins += n;  // learner added a spurious word: noise inserts
          else
            sub += n;
        }
      }
      std::uint64_t tot = del + ins + sub;
      if (tot == 0) {
        p = {1.0 / 3, 1.0 / 3, 1.0 / 3};
      } else {
        p.del = static_cast<double>(del) / static_cast<double>(tot);
        p.sub = static_cast<double>(sub) / static_cast<double>(tot);
        p.ins = static_cast<double>(ins) / static_cast<double>(tot);
      }
    }
    set.priors[type] = p;
  }
  return set;
}

// --- JSON (de)serialization -------------------------------------------

inline nlohmann::json to_json(const ConfusionMatrixSet& set) {
  nlohmann::json j;
  j["format_version"] = 1;
  j["alpha"] = set.alpha;
  j["total_mapped_annotations"] = set.total_mapped;
  j["unmapped_codes"] = set.unmapped_codes;
  for (const auto& [type, n] : set.other_bucket)
    j["other_bucket"][to_string(type)] = n;
  for (const auto& [type, p] : set.priors) {
    j["site_action_priors"][to_string(type)] = {
        {"delete", p.del}, {"substitute", p.sub}, {"insert", p.ins}};
  }
  j["site_action_priors_note"] =
      "estimated from the correction direction of the annotations: "
      "delete = corrections that insert a missing word, insert = "
      "corrections that remove a spurious word, substitute = the rest; "
      "this estimation recipe is one reasonable choice, not a standard";
  for (const auto& [type, forms] : set.uniform_rows)
    j["uniform_rows"][to_string(type)] = forms;
  for (const auto& [type, matrix] : set.rows)
    j["matrices"][to_string(type)] = matrix;
  if (!set.source.is_null()) j["source"] = set.source;
  return j;
}

inline ConfusionMatrixSet matrices_from_json(const nlohmann::json& j) {
  if (!j.contains("format_version") || j["format_version"].get<int>() != 1)
    throw DataError("confusion matrix file: unsupported format_version");
  ConfusionMatrixSet set;
  set.alpha = j.value("alpha", 0.0);
  set.total_mapped = j.value("total_mapped_annotations", std::uint64_t{0});
  if (j.contains("unmapped_codes"))
    set.unmapped_codes =
        j["unmapped_codes"].get<std::map<std::string, std::uint64_t>>();
  auto type_of = [](const std::string& name) {
    auto t = parse_error_type(name);
    if (!t) throw DataError("confusion matrix file: unknown type " + name);
    return *t;
  };
  if (j.contains("other_bucket"))
    for (const auto& [name, n] : j["other_bucket"].items())
      set.other_bucket[type_of(name)] = n.get<std::uint64_t>();
  if (j.contains("uniform_rows"))
    for (const auto& [name, forms] : j["uniform_rows"].items())
      set.uniform_rows[type_of(name)] = forms.get<std::vector<std::string>>();
  if (j.contains("site_action_priors")) {
    for (const auto& [name, p] : j["site_action_priors"].items()) {
      SiteActionPriors pr;
      pr.del = p.value("delete", 0.0);
      pr.sub = p.value("substitute", 0.0);
      pr.ins = p.value("insert", 0.0);
      set.priors[type_of(name)] = pr;
    }
  }
  for (const auto& [name, matrix] : j.at("matrices").items()) {
    ErrorType t = type_of(name);
    for (const auto& [form, cells] : matrix.items())
      set.rows[t][form] = cells.get<std::map<std::string, double>>();
  }
  if (j.contains("source")) set.source = j["source"];
  set.validate();
  return set;
}

inline std::string render_matrices(const ConfusionMatrixSet& set) {
  return to_json(set).dump(2) + "\n";
}

inline ConfusionMatrixSet load_matrices(const std::string& path) {
  return matrices_from_json(nlohmann::json::parse(read_file(path)));
}

}  // namespace gramnoise

#endif  // GRAMNOISE_CONFUSION_HPP
