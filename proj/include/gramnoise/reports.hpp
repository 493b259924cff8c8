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
// Analysis reports: per-substitution BLEU deltas (how much each
// original->replacement pair costs, as a matrix with marginals) and the
// self-BLEU robustness probe (noisy-input translations scored against the
// clean-input translations of the same system).

#ifndef GRAMNOISE_REPORTS_HPP
#define GRAMNOISE_REPORTS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "gramnoise/bleu.hpp"
#include "gramnoise/error_types.hpp"
#include "gramnoise/noiser.hpp"

namespace gramnoise {

struct DeltaCell {
  std::size_t lines = 0;
  double noisy_bleu = 0.0;
  double clean_bleu = 0.0;
  double delta = 0.0;  // noisy_bleu - clean_bleu
};

inline const std::string kMarginalKey = "all";

// BLEU deltas broken down by substitution pair. Rows are original forms,
// columns replacement forms; each cell is corpus BLEU over the noisy-input
// translations of that subset minus corpus BLEU of the clean-input
// translations of the same subset.
struct DeltaReport {
  std::vector<std::string> row_forms;
  std::vector<std::string> col_forms;
  std::map<std::pair<std::string, std::string>, DeltaCell> cells;
  std::map<std::string, DeltaCell> row_marginals;
  std::map<std::string, DeltaCell> col_marginals;
  DeltaCell all;
  std::size_t event_count = 0;
};

namespace detail {

inline DeltaCell score_subset(const std::vector<std::size_t>& lines,
                              const std::vector<std::string>& noisy,
                              const std::vector<std::string>& clean,
                              const std::vector<std::vector<std::string>>& refs) {
  DeltaCell cell;
  cell.lines = lines.size();
  std::vector<std::string> noisy_sub, clean_sub;
  std::vector<std::vector<std::string>> refs_sub;
  for (std::size_t i : lines) {
    noisy_sub.push_back(noisy[i]);
    clean_sub.push_back(clean[i]);
    refs_sub.push_back(refs[i]);
  }
  cell.noisy_bleu = corpus_bleu(noisy_sub, refs_sub).score;
  cell.clean_bleu = corpus_bleu(clean_sub, refs_sub).score;
  cell.delta = cell.noisy_bleu - cell.clean_bleu;
  return cell;
}

// Orders forms canonically when they all belong to one confusion set
// (Table-style layout), lexicographically otherwise.
inline std::vector<std::string> order_forms(const std::set<std::string>& seen) {
  for (ErrorType t : {ErrorType::kArt, ErrorType::kPrep}) {
    const auto& canon = confusion_set(t);
    bool all_in = std::all_of(seen.begin(), seen.end(), [&](const auto& f) {
      return std::find(canon.begin(), canon.end(), f) != canon.end();
    });
    if (all_in) {
      std::vector<std::string> out;
      for (const auto& f : canon)
        if (seen.count(f)) out.push_back(f);
      return out;
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

// Groups the changed sentences by the event's (original, replacement)
// pair, lowercased, and corpus-scores each subset. The subsets partition
// the changed lines: one event per changed line.
inline DeltaReport delta_report(
    std::span<const ErrorEvent> events, const std::vector<std::string>& noisy_translations,
    const std::vector<std::string>& clean_translations,
    const std::vector<std::vector<std::string>>& reference_sets) {
  if (noisy_translations.size() != clean_translations.size() ||
      noisy_translations.size() != reference_sets.size())
    throw DataError("delta_report: translation and reference files must be "
                    "aligned line for line");

  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>>
      groups;
  std::map<std::string, std::vector<std::size_t>> by_row, by_col;
  std::vector<std::size_t> changed;
  for (const auto& e : events) {
    if (e.line_index >= noisy_translations.size())
      throw DataError("delta_report: event references line " +
                      std::to_string(e.line_index) + " with no translation");
    std::string orig = lower(e.original);
    std::string repl = lower(e.replacement);
    groups[{orig, repl}].push_back(e.line_index);
    by_row[orig].push_back(e.line_index);
    by_col[repl].push_back(e.line_index);
    changed.push_back(e.line_index);
  }

  DeltaReport report;
  report.event_count = events.size();
  if (events.empty()) return report;

  std::set<std::string> rows_seen, cols_seen;
  for (const auto& [key, lines] : groups) {
    rows_seen.insert(key.first);
    cols_seen.insert(key.second);
    report.cells[key] = detail::score_subset(lines, noisy_translations,
                                             clean_translations, reference_sets);
  }
  for (const auto& [form, lines] : by_row)
    report.row_marginals[form] = detail::score_subset(
        lines, noisy_translations, clean_translations, reference_sets);
  for (const auto& [form, lines] : by_col)
    report.col_marginals[form] = detail::score_subset(
        lines, noisy_translations, clean_translations, reference_sets);
  report.all = detail::score_subset(changed, noisy_translations,
                                    clean_translations, reference_sets);
  report.row_forms = detail::order_forms(rows_seen);
  report.col_forms = detail::order_forms(cols_seen);
  return report;
}

// Scores noisy-input translations against the clean-input translations of
// the same system as references. 100 means the noise changed nothing.
inline BleuScore self_bleu_robustness(
    const std::vector<std::string>& noisy_translations,
    const std::vector<std::vector<std::string>>& clean_translation_sets) {
  return corpus_bleu(noisy_translations, clean_translation_sets);
}

inline BleuScore self_bleu_robustness(
    const std::vector<std::string>& noisy_translations,
    const std::vector<std::string>& clean_translations) {
  std::vector<std::vector<std::string>> refs;
  refs.reserve(clean_translations.size());
  for (const auto& c : clean_translations) refs.push_back({c});
  return corpus_bleu(noisy_translations, refs);
}

inline nlohmann::json to_json(const DeltaCell& c) {
  return {{"lines", c.lines},
          {"noisy_bleu", c.noisy_bleu},
          {"clean_bleu", c.clean_bleu},
          {"delta", c.delta}};
}

inline nlohmann::json to_json(const DeltaReport& r) {
  nlohmann::json j;
  j["format_version"] = 1;
  j["normalization"] = kScoringNormalizationVersion;
  j["event_count"] = r.event_count;
  j["row_forms"] = r.row_forms;
  j["col_forms"] = r.col_forms;
  for (const auto& [key, cell] : r.cells)
    j["cells"][key.first][key.second] = to_json(cell);
  for (const auto& [form, cell] : r.row_marginals)
    j["row_marginals"][form] = to_json(cell);
  for (const auto& [form, cell] : r.col_marginals)
    j["col_marginals"][form] = to_json(cell);
  j["all"] = to_json(r.all);
  return j;
}

// Plain-text matrix: rows = original (correct) forms, columns = the
// substituted forms, with row/column marginals labeled "all".
inline std::string format_delta_report(const DeltaReport& r) {
  std::vector<std::string> cols = r.col_forms;
  cols.push_back(kMarginalKey);
  auto display_width = [](const std::string& s) {
    return utf8_chars(s).size();
  };
  std::size_t width = 10;
  for (const auto& f : r.row_forms)
    width = std::max(width, display_width(f) + 2);
  for (const auto& f : cols) width = std::max(width, display_width(f) + 2);

  auto pad = [width, &display_width](const std::string& s) {
    std::size_t w = display_width(s);
    return w >= width ? s : std::string(width - w, ' ') + s;
  };
  auto cell_str = [&](const DeltaCell* c) {
    if (!c) return pad("--");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%+.1f", c->delta);
    return pad(buf);
  };

  std::string out = pad("correct\\err");
  for (const auto& c : cols) out += pad(c);
  out += '\n';
  for (const auto& row : r.row_forms) {
    out += pad(row);
    for (const auto& col : r.col_forms) {
      auto it = r.cells.find({row, col});
      out += cell_str(it == r.cells.end() ? nullptr : &it->second);
    }
    auto rm = r.row_marginals.find(row);
    out += cell_str(rm == r.row_marginals.end() ? nullptr : &rm->second);
    out += '\n';
  }
  out += pad(kMarginalKey);
  for (const auto& col : r.col_forms) {
    auto cm = r.col_marginals.find(col);
    out += cell_str(cm == r.col_marginals.end() ? nullptr : &cm->second);
  }
  out += cell_str(&r.all);
  out += '\n';
  return out;
}

}  // namespace gramnoise

#endif  // GRAMNOISE_REPORTS_HPP
