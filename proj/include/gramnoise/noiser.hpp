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
// Introduces exactly one grammatical error per sentence, wherever
// possible: candidate positions come from the parse tree, the replacement
// is drawn from the learned confusion matrices, and every change is
// recorded as a replayable event. Unchanged sentences produce no event.

#ifndef GRAMNOISE_NOISER_HPP
#define GRAMNOISE_NOISER_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gramnoise/confusion.hpp"
#include "gramnoise/error_types.hpp"
#include "gramnoise/morphology.hpp"
#include "gramnoise/rng.hpp"
#include "gramnoise/text.hpp"
#include "gramnoise/treebank.hpp"

namespace gramnoise {

struct NoiseConfig {
  ErrorType error_type = ErrorType::kDrop;
  const ConfusionMatrixSet* matrices = nullptr;  // required except for drop
  std::uint64_t seed = kDefaultSeed;
};

// Provenance of one applied error. `position` is a token index, or a
// codepoint index for char_drop. The empty token stands in for "nothing":
// original ∅ marks an insertion, replacement ∅ a deletion.
struct ErrorEvent {
  std::uint64_t line_index = 0;
  ErrorType error_type = ErrorType::kDrop;
  SiteKind site_kind = SiteKind::kCharDrop;
  std::size_t position = 0;
  std::string original = kNullForm;
  std::string replacement = kNullForm;

  bool operator==(const ErrorEvent&) const = default;
};

namespace detail {

// Applies one token-level edit. Shared by the noiser and by event replay
// so the two can never drift apart. Sentence-initial case repair: deleting
// a capitalized first token capitalizes its successor.
inline std::vector<std::string> apply_token_edit(std::vector<std::string> tokens,
                                                 SiteKind kind, std::size_t pos,
                                                 const std::string& replacement) {
  switch (kind) {
    case SiteKind::kDelete: {
      if (pos >= tokens.size()) throw DataError("edit position out of range");
      const bool was_capitalized =
          !tokens[pos].empty() && is_ascii_upper(tokens[pos][0]);
      tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(pos));
      if (pos == 0 && was_capitalized && !tokens.empty() &&
          case_pattern(tokens[0]) == CasePattern::kLower)
        tokens[0] = capitalize_first(tokens[0]);
      return tokens;
    }
    case SiteKind::kSubstitute: {
      if (pos >= tokens.size()) throw DataError("edit position out of range");
      tokens[pos] = replacement;
      return tokens;
    }
    case SiteKind::kInsert: {
      if (pos > tokens.size()) throw DataError("edit position out of range");
      tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                    replacement);
      return tokens;
    }
    case SiteKind::kCharDrop:
      throw DataError("char_drop is not a token edit");
  }
  return tokens;
}

struct PreparedSite {
  CandidateSite site;
  std::string fixed_replacement;  // nn/sva only: the toggled surface form
};

// Keeps the sites where an error can actually be realized. For nn/sva the
// toggled form is computed here and the site dropped when the lexicon
// flags the word as invariant.
inline std::vector<PreparedSite> realizable_sites(
    const std::vector<CandidateSite>& sites,
    const std::vector<std::string>& tokens, const InflectionLexicon& lex) {
  std::vector<PreparedSite> out;
  for (const auto& site : sites) {
    if (site.error_type == ErrorType::kArt ||
        site.error_type == ErrorType::kPrep) {
      out.push_back({site, {}});
      continue;
    }
    const std::string& token = tokens[static_cast<std::size_t>(site.token_index)];
    if (!is_all_alpha(token)) continue;
    const std::string w = lower(token);
    std::optional<std::string> toggled;
    if (site.current_form == kFormSg)
      toggled = pluralize(w, lex);
    else if (site.current_form == kFormPl)
      toggled = singularize(w, lex);
    else if (site.current_form == kForm3sg)
      toggled = verb_from_3sg(w, lex);
    else if (site.current_form == kFormNot3sg)
      toggled = verb_to_3sg(w, lex);
    else if (site.current_form == kForm2sgPast)
      toggled = "was";
    else if (site.current_form == kFormNot2sgPast)
      toggled = "were";
    if (!toggled || *toggled == w) continue;
    out.push_back({site, apply_case(token, *toggled)});
  }
  return out;
}

// Draws an erroneous form from the matrix row, walking the support in
// canonical confusion-set order so the byte-identical-output contract
// holds across platforms.
inline std::string sample_replacement_form(const ConfusionMatrixSet& matrices,
                                           ErrorType type,
                                           const std::string& current_form,
                                           Rng& rng) {
  const auto& row = matrices.row(type, current_form);
  auto support = column_support(type, current_form);
  std::vector<double> weights;
  weights.reserve(support.size());
  double total = 0.0;
  for (const auto& form : support) {
    auto it = row.find(form);
    double w = it == row.end() ? 0.0 : it->second;
    weights.push_back(w);
    total += w;
  }
  if (total <= 0.0)
    throw DataError("matrix row \"" + current_form + "\" of " +
                    to_string(type) + " has no probability mass");
  return support[rng.pick_weighted(weights)];
}

}  // namespace detail

// Introduces one error of config.error_type into the sentence, sampling
// the site uniformly over the realizable candidates and the replacement
// from the confusion-matrix row of the site's current form. Sentences
// with no candidate site come back unchanged with no event.
inline std::pair<std::vector<std::string>, std::optional<ErrorEvent>>
noisify_sentence(const std::vector<std::string>& tokens, const ParseTree& tree,
                 const NoiseConfig& config, std::uint64_t line_index,
                 const InflectionLexicon& lex = InflectionLexicon::builtin()) {
  if (render_tokens(tree) != tokens)
    throw DataError("line " + std::to_string(line_index + 1) +
                    ": tree leaves do not match the sentence tokens");
  if (config.error_type != ErrorType::kDrop && config.matrices == nullptr)
    throw DataError("noisify_sentence: confusion matrices are required");

  auto sites = candidate_sites(tree, config.error_type);
  auto prepared = detail::realizable_sites(sites, tokens, lex);
  if (prepared.empty()) return {tokens, std::nullopt};

  Rng rng = Rng::for_line(config.seed, line_index);
  const auto& pick = prepared[rng.next_below(prepared.size())];
  const CandidateSite& site = pick.site;
  const auto pos = static_cast<std::size_t>(site.token_index);

  ErrorEvent event;
  event.line_index = line_index;
  event.error_type = config.error_type;
  event.position = pos;

  std::string replacement_surface;
  if (site.error_type == ErrorType::kNn || site.error_type == ErrorType::kSva) {
    // The matrix row of a category has a single partner outcome; the draw
    // keeps the sampling path uniform across types.
    (void)detail::sample_replacement_form(*config.matrices, site.error_type,
                                          site.current_form, rng);
    event.site_kind = SiteKind::kSubstitute;
    event.original = tokens[pos];
    event.replacement = pick.fixed_replacement;
    replacement_surface = pick.fixed_replacement;
  } else {
    std::string form = detail::sample_replacement_form(
        *config.matrices, site.error_type, site.current_form, rng);
    if (site.site_kind == SiteKind::kInsert) {
      std::string surface = form;
      if (form == "a" || form == "an")
        surface = choose_indefinite(tokens[pos], lex);
      if (pos == 0 && !tokens.empty() && !tokens[0].empty() &&
          is_ascii_upper(tokens[0][0]))
        surface = capitalize_first(surface);
      event.site_kind = SiteKind::kInsert;
      event.original = kNullForm;
      event.replacement = surface;
      replacement_surface = surface;
    } else if (form == kNullForm) {
      event.site_kind = SiteKind::kDelete;
      event.original = tokens[pos];
      event.replacement = kNullForm;
    } else {
      event.site_kind = SiteKind::kSubstitute;
      event.original = tokens[pos];
      event.replacement = apply_case(tokens[pos], form);
      replacement_surface = event.replacement;
    }
  }

  auto noisy = detail::apply_token_edit(tokens, event.site_kind, pos,
                                        replacement_surface);
  return {std::move(noisy), event};
}

// Removes one uniformly chosen non-whitespace character (codepoint) from
// the raw sentence string. Empty and all-whitespace sentences pass
// through unchanged.
inline std::pair<std::string, std::optional<ErrorEvent>> drop_one_char(
    const std::string& sentence, const NoiseConfig& config,
    std::uint64_t line_index) {
  auto chars = utf8_chars(sentence);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < chars.size(); ++i)
    if (!(chars[i].size() == 1 && is_ascii_space(chars[i][0])))
      candidates.push_back(i);
  if (candidates.empty()) return {sentence, std::nullopt};

  Rng rng = Rng::for_line(config.seed, line_index);
  std::size_t target = candidates[rng.next_below(candidates.size())];

  ErrorEvent event;
  event.line_index = line_index;
  event.error_type = ErrorType::kDrop;
  event.site_kind = SiteKind::kCharDrop;
  event.position = target;
  event.original = chars[target];
  event.replacement = kNullForm;

  std::string out;
  out.reserve(sentence.size());
  for (std::size_t i = 0; i < chars.size(); ++i)
    if (i != target) out += chars[i];
  return {std::move(out), event};
}

struct NoisyCorpus {
  std::vector<std::string> lines;
  std::vector<ErrorEvent> events;  // one per changed line, in line order

  std::size_t changed() const { return events.size(); }
};

// Applies noisify_sentence (or drop_one_char) line by line. Lines are
// mutually independent, so any worker count yields identical output; the
// event log is emitted in line order regardless.
inline NoisyCorpus noisify_corpus(
    const std::vector<std::string>& raw, const std::vector<std::string>& trees,
    const NoiseConfig& config,
    const InflectionLexicon& lex = InflectionLexicon::builtin(),
    unsigned workers = 1) {
  const bool is_drop = config.error_type == ErrorType::kDrop;
  if (!is_drop && raw.size() != trees.size())
    throw DataError("line-count mismatch: corpus has " +
                    std::to_string(raw.size()) + " lines, trees has " +
                    std::to_string(trees.size()));

  const std::size_t n = raw.size();
  std::vector<std::string> out_lines(n);
  std::vector<std::optional<ErrorEvent>> out_events(n);

  auto process_range = [&](std::size_t begin, std::size_t end,
                           std::exception_ptr& error) {
    try {
      for (std::size_t i = begin; i < end; ++i) {
        if (is_drop) {
          auto [line, event] = drop_one_char(raw[i], config, i);
          out_lines[i] = std::move(line);
          out_events[i] = event;
          continue;
        }
        auto tokens = split_ws(raw[i]);
        if (tokens.empty()) {
          out_lines[i] = raw[i];
          continue;
        }
        ParseTree tree;
        try {
          tree = parse_ptb(trees[i]);
        } catch (const DataError& e) {
          throw DataError("line " + std::to_string(i + 1) + ": " + e.what());
        }
        auto [noisy, event] = noisify_sentence(tokens, tree, config, i, lex);
        // Untouched lines pass through byte-for-byte, even when their
        // whitespace is not canonical.
        out_lines[i] = event ? join(noisy) : raw[i];
        out_events[i] = event;
      }
    } catch (...) {
      error = std::current_exception();
    }
  };

  if (workers <= 1 || n < 2) {
    std::exception_ptr error;
    process_range(0, n, error);
    if (error) std::rethrow_exception(error);
  } else {
    const std::size_t k = std::min<std::size_t>(workers, n);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(k);
    const std::size_t chunk = (n + k - 1) / k;
    for (std::size_t t = 0; t < k; ++t) {
      std::size_t begin = t * chunk;
      std::size_t end = std::min(n, begin + chunk);
      threads.emplace_back(process_range, begin, end, std::ref(errors[t]));
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  NoisyCorpus result;
  result.lines = std::move(out_lines);
  for (auto& e : out_events)
    if (e) result.events.push_back(*e);
  return result;
}

// --- Event log round-trip ----------------------------------------------

// Tab-separated rows: line_index, type, site_kind, position, original,
// replacement. Lines starting with '#' carry run provenance.
inline std::string render_event_log(
    std::span<const ErrorEvent> events,
    const std::vector<std::string>& header_comments = {}) {
  std::string out;
  for (const auto& c : header_comments) out += "# " + c + "\n";
  for (const auto& e : events) {
    out += std::to_string(e.line_index);
    out += '\t';
    out += to_string(e.error_type);
    out += '\t';
    out += to_string(e.site_kind);
    out += '\t';
    out += std::to_string(e.position);
    out += '\t';
    out += e.original;
    out += '\t';
    out += e.replacement;
    out += '\n';
  }
  return out;
}

inline std::vector<ErrorEvent> parse_event_log(std::istream& in) {
  std::vector<ErrorEvent> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = detail::split_on(line, "\t");
    if (fields.size() != 6)
      throw DataError("event log line " + std::to_string(line_no) +
                      ": expected 6 tab-separated fields");
    ErrorEvent e;
    try {
      e.line_index = std::stoull(fields[0]);
      e.position = std::stoull(fields[3]);
    } catch (const std::exception&) {
      throw DataError("event log line " + std::to_string(line_no) +
                      ": bad index field");
    }
    auto type = parse_error_type(fields[1]);
    auto kind = parse_site_kind(fields[2]);
    if (!type || !kind)
      throw DataError("event log line " + std::to_string(line_no) +
                      ": bad type or site_kind");
    e.error_type = *type;
    e.site_kind = *kind;
    e.original = fields[4];
    e.replacement = fields[5];
    events.push_back(std::move(e));
  }
  return events;
}

inline std::vector<ErrorEvent> parse_event_log(const std::string& text) {
  std::istringstream in(text);
  return parse_event_log(in);
}

// Reapplies an event log to the clean corpus. Round-trips byte-for-byte
// with noisify_corpus output; mismatched positions or originals fail loud.
inline std::vector<std::string> replay_events(
    std::vector<std::string> lines, std::span<const ErrorEvent> events) {
  for (const auto& e : events) {
    if (e.line_index >= lines.size())
      throw DataError("event references line " + std::to_string(e.line_index) +
                      " beyond corpus end");
    std::string& line = lines[e.line_index];
    if (e.site_kind == SiteKind::kCharDrop) {
      auto chars = utf8_chars(line);
      if (e.position >= chars.size() || chars[e.position] != e.original)
        throw DataError("char_drop event does not match line " +
                        std::to_string(e.line_index));
      std::string out;
      for (std::size_t i = 0; i < chars.size(); ++i)
        if (i != e.position) out += chars[i];
      line = std::move(out);
      continue;
    }
    auto tokens = split_ws(line);
    if (e.site_kind != SiteKind::kInsert) {
      if (e.position >= tokens.size() || tokens[e.position] != e.original)
        throw DataError("event original does not match line " +
                        std::to_string(e.line_index));
    }
    line = join(detail::apply_token_edit(std::move(tokens), e.site_kind,
                                         e.position, e.replacement));
  }
  return lines;
}

// "art 96.4%" — the changed-line share of a noised corpus.
inline std::string format_change_summary(ErrorType type, std::size_t total,
                                         std::size_t changed) {
  double pct = total == 0 ? 0.0
                          : 100.0 * static_cast<double>(changed) /
                                static_cast<double>(total);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s %.1f%%", to_string(type).c_str(), pct);
  return buf;
}

}  // namespace gramnoise

#endif  // GRAMNOISE_NOISER_HPP
