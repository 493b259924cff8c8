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
// Test-only oracles, kept independent of the library's implementation
// paths: BLEU by exhaustive n-gram enumeration over token vectors, and
// token/codepoint edit distances by dynamic programming.

#ifndef GRAMNOISE_TESTS_ORACLES_HPP
#define GRAMNOISE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gramnoise/bleu.hpp"
#include "gramnoise/text.hpp"

namespace oracle {

// Counts occurrences of the n-gram starting at `at` by scanning the whole
// token vector. Deliberately quadratic and map-free.
inline int count_ngram_occurrences(const std::vector<std::string>& tokens,
                                   std::size_t at, int n) {
  int count = 0;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    bool equal = true;
    for (int k = 0; k < n; ++k)
      if (tokens[i + k] != tokens[at + k]) equal = false;
    if (equal) ++count;
  }
  return count;
}

// Corpus BLEU by brute-force enumeration, mirroring the textbook
// definition: per line, each distinct hypothesis n-gram contributes
// min(hyp_count, max over references of ref_count).
inline double bleu_brute_force(
    const std::vector<std::string>& hyps,
    const std::vector<std::vector<std::string>>& refsets) {
  long long matched[4] = {0, 0, 0, 0};
  long long total[4] = {0, 0, 0, 0};
  long long hyp_len = 0, ref_len = 0;

  for (std::size_t line = 0; line < hyps.size(); ++line) {
    auto hyp = gramnoise::tokenize_13a(hyps[line]);
    std::vector<std::vector<std::string>> refs;
    for (const auto& r : refsets[line]) refs.push_back(gramnoise::tokenize_13a(r));

    hyp_len += static_cast<long long>(hyp.size());
    std::size_t best = refs.front().size();
    auto dist = [&](std::size_t len) {
      return len > hyp.size() ? len - hyp.size() : hyp.size() - len;
    };
    for (const auto& r : refs)
      if (dist(r.size()) < dist(best) ||
          (dist(r.size()) == dist(best) && r.size() < best))
        best = r.size();
    ref_len += static_cast<long long>(best);

    for (int n = 1; n <= 4; ++n) {
      for (std::size_t i = 0; i + n <= hyp.size(); ++i) {
        // Count each distinct n-gram once, at its first occurrence.
        bool first = true;
        for (std::size_t j = 0; j < i; ++j) {
          bool equal = true;
          for (int k = 0; k < n; ++k)
            if (hyp[j + k] != hyp[i + k]) equal = false;
          if (equal) first = false;
        }
        if (!first) continue;
        int hyp_count = count_ngram_occurrences(hyp, i, n);
        int ref_best = 0;
        for (const auto& r : refs) {
          int c = 0;
          for (std::size_t j = 0; j + n <= r.size(); ++j) {
            bool equal = true;
            for (int k = 0; k < n; ++k)
              if (r[j + k] != hyp[i + k]) equal = false;
            if (equal) ++c;
          }
          ref_best = std::max(ref_best, c);
        }
        total[n - 1] += hyp_count;
        matched[n - 1] += std::min(hyp_count, ref_best);
      }
    }
  }

  double product = 1.0;
  for (int n = 0; n < 4; ++n) {
    if (total[n] == 0 || matched[n] == 0) return 0.0;
    product *= static_cast<double>(matched[n]) / static_cast<double>(total[n]);
  }
  if (hyp_len == 0) return 0.0;
  double bp = hyp_len >= ref_len
                  ? 1.0
                  : std::exp(1.0 - static_cast<double>(ref_len) /
                                       static_cast<double>(hyp_len));
  return 100.0 * bp * std::pow(product, 0.25);
}

// Levenshtein over tokens. `fold_case` compares tokens case-insensitively,
// which makes the sentence-initial case repair invisible to the metric.
inline std::size_t token_edit_distance(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b,
                                       bool fold_case) {
  auto eq = [fold_case](const std::string& x, const std::string& y) {
    return fold_case ? gramnoise::lower(x) == gramnoise::lower(y) : x == y;
  };
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (eq(a[i - 1], b[j - 1]) ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

inline std::size_t char_edit_distance(const std::string& a,
                                      const std::string& b) {
  auto ca = gramnoise::utf8_chars(a);
  auto cb = gramnoise::utf8_chars(b);
  return token_edit_distance(ca, cb, /*fold_case=*/false);
}

}  // namespace oracle

#endif  // GRAMNOISE_TESTS_ORACLES_HPP
