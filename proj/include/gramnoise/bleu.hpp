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
// Corpus-level, multi-reference BLEU over detokenized text. Scoring
// tokenization is the fixed "13a.1" normalization below; its version tag
// is printed in every report so scores are comparable only when it
// matches.

#ifndef GRAMNOISE_BLEU_HPP
#define GRAMNOISE_BLEU_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "gramnoise/io.hpp"
#include "gramnoise/text.hpp"
#include "gramnoise/version.hpp"

namespace gramnoise {

inline constexpr int kBleuMaxOrder = 4;

// Normalization "13a.1": every ASCII punctuation character except
// apostrophe is split off as its own token, with two exceptions in the
// 13a tradition: '.' and ',' stay attached between digits (2.5 stays),
// and '-' is split only after a digit (25-30 splits, well-known stays).
inline std::vector<std::string> tokenize_13a(std::string_view text) {
  std::string padded;
  padded.reserve(text.size() + 8);
  auto at = [&text](std::size_t i) -> char {
    return i < text.size() ? text[i] : '\0';
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (is_ascii_space(c)) {
      padded += ' ';
      continue;
    }
    bool split = false;
    if (c == '.' || c == ',') {
      bool prev_digit = i > 0 && is_ascii_digit(text[i - 1]);
      bool next_digit = is_ascii_digit(at(i + 1));
      split = !(prev_digit && next_digit);
    } else if (c == '-') {
      split = i > 0 && is_ascii_digit(text[i - 1]);
    } else if (c != '\'' && static_cast<unsigned char>(c) >= 0x21 &&
               static_cast<unsigned char>(c) <= 0x7E && !is_ascii_alpha(c) &&
               !is_ascii_digit(c)) {
      split = true;
    }
    if (split) {
      padded += ' ';
      padded += c;
      padded += ' ';
    } else {
      padded += c;
    }
  }
  return split_ws(padded);
}

struct BleuScore {
  double score = 0.0;  // 0..100
  std::array<double, kBleuMaxOrder> precisions{};
  double brevity_penalty = 1.0;
  std::uint64_t hyp_length = 0;
  std::uint64_t ref_length = 0;
};

namespace detail {

// Clipped n-gram match statistics of one line against its references.
struct LineStats {
  std::array<std::uint64_t, kBleuMaxOrder> matched{};
  std::array<std::uint64_t, kBleuMaxOrder> total{};
  std::uint64_t hyp_length = 0;
  std::uint64_t ref_length = 0;

  void add(const LineStats& o) {
    for (int n = 0; n < kBleuMaxOrder; ++n) {
      matched[n] += o.matched[n];
      total[n] += o.total[n];
    }
    hyp_length += o.hyp_length;
    ref_length += o.ref_length;
  }
};

inline void count_ngrams(const std::vector<std::string>& tokens, int n,
                         std::unordered_map<std::string, std::uint64_t>& out) {
  if (tokens.size() < static_cast<std::size_t>(n)) return;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key;
    for (int k = 0; k < n; ++k) {
      if (k) key += '\x1f';
      key += tokens[i + k];
    }
    ++out[key];
  }
}

inline LineStats line_stats(const std::vector<std::string>& hyp,
                            const std::vector<std::vector<std::string>>& refs) {
  LineStats s;
  s.hyp_length = hyp.size();

  // Reference length closest to the hypothesis length; ties go to the
  // shorter reference.
  std::uint64_t best_len = refs.front().size();
  for (const auto& r : refs) {
    auto diff = [&](std::uint64_t len) {
      return len > s.hyp_length ? len - s.hyp_length : s.hyp_length - len;
    };
    std::uint64_t len = r.size();
    if (diff(len) < diff(best_len) || (diff(len) == diff(best_len) &&
                                       len < best_len))
      best_len = len;
  }
  s.ref_length = best_len;

  for (int n = 1; n <= kBleuMaxOrder; ++n) {
    std::unordered_map<std::string, std::uint64_t> hyp_counts;
    count_ngrams(hyp, n, hyp_counts);
    if (hyp_counts.empty()) continue;
    std::unordered_map<std::string, std::uint64_t> ref_max;
    for (const auto& r : refs) {
      std::unordered_map<std::string, std::uint64_t> rc;
      count_ngrams(r, n, rc);
      for (const auto& [gram, c] : rc) {
        auto& m = ref_max[gram];
        if (c > m) m = c;
      }
    }
    for (const auto& [gram, c] : hyp_counts) {
      s.total[n - 1] += c;
      auto it = ref_max.find(gram);
      if (it != ref_max.end()) s.matched[n - 1] += std::min(c, it->second);
    }
  }
  return s;
}

inline BleuScore score_from_stats(const LineStats& s, bool smooth) {
  BleuScore b;
  b.hyp_length = s.hyp_length;
  b.ref_length = s.ref_length;
  double log_sum = 0.0;
  bool any_zero = false;
  for (int n = 0; n < kBleuMaxOrder; ++n) {
    // Add-one smoothing on the higher orders for sentence-level scores.
    double matched = static_cast<double>(s.matched[n]) + (smooth && n ? 1 : 0);
    double total = static_cast<double>(s.total[n]) + (smooth && n ? 1 : 0);
    double p = total > 0.0 ? matched / total : 0.0;
    b.precisions[n] = p;
    if (p > 0.0)
      log_sum += std::log(p);
    else
      any_zero = true;
  }
  if (s.hyp_length == 0) {
    b.brevity_penalty =
        s.ref_length == 0
            ? 1.0
            : std::exp(1.0 - static_cast<double>(s.ref_length));
    b.score = 0.0;
    return b;
  }
  b.brevity_penalty =
      s.hyp_length >= s.ref_length
          ? 1.0
          : std::exp(1.0 - static_cast<double>(s.ref_length) /
                               static_cast<double>(s.hyp_length));
  b.score = any_zero ? 0.0
                     : 100.0 * b.brevity_penalty *
                           std::exp(log_sum / kBleuMaxOrder);
  return b;
}

}  // namespace detail

// Corpus BLEU of `hypotheses` against per-line reference sets. Modified
// n-gram precision clips hypothesis counts by the per-reference maximum;
// the brevity penalty uses the per-line closest reference length.
inline BleuScore corpus_bleu(
    const std::vector<std::string>& hypotheses,
    const std::vector<std::vector<std::string>>& reference_sets,
    unsigned workers = 1) {
  if (hypotheses.empty()) throw DataError("corpus_bleu: no hypotheses");
  if (hypotheses.size() != reference_sets.size())
    throw DataError("corpus_bleu: " + std::to_string(hypotheses.size()) +
                    " hypotheses vs " + std::to_string(reference_sets.size()) +
                    " reference sets");
  for (std::size_t i = 0; i < reference_sets.size(); ++i)
    if (reference_sets[i].empty())
      throw DataError("corpus_bleu: line " + std::to_string(i + 1) +
                      " has no references");

  const std::size_t n = hypotheses.size();
  auto stats_of = [&](std::size_t i) {
    std::vector<std::vector<std::string>> refs;
    refs.reserve(reference_sets[i].size());
    for (const auto& r : reference_sets[i]) refs.push_back(tokenize_13a(r));
    return detail::line_stats(tokenize_13a(hypotheses[i]), refs);
  };

  detail::LineStats total;
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) total.add(stats_of(i));
  } else {
    // Per-line stats merge associatively, so any chunking gives the same
    // corpus totals.
    const std::size_t k = std::min<std::size_t>(workers, n);
    std::vector<detail::LineStats> partial(k);
    std::vector<std::thread> threads;
    const std::size_t chunk = (n + k - 1) / k;
    for (std::size_t t = 0; t < k; ++t) {
      threads.emplace_back([&, t] {
        std::size_t begin = t * chunk;
        std::size_t end = std::min(n, begin + chunk);
        for (std::size_t i = begin; i < end; ++i) partial[t].add(stats_of(i));
      });
    }
    for (auto& th : threads) th.join();
    for (const auto& p : partial) total.add(p);
  }
  return detail::score_from_stats(total, /*smooth=*/false);
}

// One-line BLEU with add-one smoothing on the n>1 counts. An empty
// hypothesis scores 0 rather than erroring.
inline BleuScore sentence_bleu(const std::string& hypothesis,
                               const std::vector<std::string>& references) {
  if (references.empty()) throw DataError("sentence_bleu: no references");
  std::vector<std::vector<std::string>> refs;
  refs.reserve(references.size());
  for (const auto& r : references) refs.push_back(tokenize_13a(r));
  return detail::score_from_stats(
      detail::line_stats(tokenize_13a(hypothesis), refs), /*smooth=*/true);
}

inline nlohmann::json to_json(const BleuScore& b) {
  return {{"score", b.score},
          {"precisions", b.precisions},
          {"brevity_penalty", b.brevity_penalty},
          {"hyp_length", b.hyp_length},
          {"ref_length", b.ref_length},
          {"normalization", kScoringNormalizationVersion}};
}

inline std::string format_bleu(const BleuScore& b) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "BLEU = %.2f  %.1f/%.1f/%.1f/%.1f  (BP = %.3f, hyp_len = %llu, "
                "ref_len = %llu, norm = %s)",
                b.score, 100.0 * b.precisions[0], 100.0 * b.precisions[1],
                100.0 * b.precisions[2], 100.0 * b.precisions[3],
                b.brevity_penalty,
                static_cast<unsigned long long>(b.hyp_length),
                static_cast<unsigned long long>(b.ref_length),
                kScoringNormalizationVersion);
  return buf;
}

}  // namespace gramnoise

#endif  // GRAMNOISE_BLEU_HPP
