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
// Builders for the training mixtures: clean+error (each sentence once
// clean, once noised) and mix-all (each sentence six times, once clean and
// once per error type). Every build carries a manifest with content
// digests so a dataset can be audited and reproduced.

#ifndef GRAMNOISE_DATASETS_HPP
#define GRAMNOISE_DATASETS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gramnoise/error_types.hpp"
#include "gramnoise/io.hpp"
#include "gramnoise/text.hpp"
#include "gramnoise/version.hpp"

namespace gramnoise {

inline const std::string kCleanTag = "clean";

struct ParallelCorpus {
  std::vector<std::string> source;
  std::vector<std::string> target;
  std::vector<std::string> tags;  // empty, or one origin tag per line

  std::size_t size() const { return source.size(); }

  void check_aligned() const {
    if (source.size() != target.size())
      throw DataError("parallel corpus has " + std::to_string(source.size()) +
                      " source lines but " + std::to_string(target.size()) +
                      " target lines");
    if (!tags.empty() && tags.size() != source.size())
      throw DataError("tag file does not cover all corpus lines");
  }

  static ParallelCorpus load(const std::string& source_path,
                             const std::string& target_path) {
    ParallelCorpus c;
    c.source = read_lines(source_path);
    c.target = read_lines(target_path);
    c.check_aligned();
    return c;
  }
};

struct BuiltDataset {
  ParallelCorpus corpus;
  nlohmann::json manifest;
};

namespace detail {

inline void require_same_targets(const ParallelCorpus& clean,
                                 const ParallelCorpus& other,
                                 const std::string& what) {
  if (clean.size() != other.size())
    throw DataError(what + " has " + std::to_string(other.size()) +
                    " lines, expected " + std::to_string(clean.size()));
  for (std::size_t i = 0; i < clean.size(); ++i)
    if (clean.target[i] != other.target[i])
      throw DataError(what + ": target side differs at line " +
                      std::to_string(i + 1));
}

inline std::size_t changed_lines(const ParallelCorpus& clean,
                                 const ParallelCorpus& noisy) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < clean.size(); ++i)
    if (clean.source[i] != noisy.source[i]) ++n;
  return n;
}

inline nlohmann::json corpus_digest(const ParallelCorpus& c) {
  return {{"source", digest_lines(c.source)},
          {"target", digest_lines(c.target)},
          {"lines", c.size()}};
}

}  // namespace detail

// Concatenation of the clean corpus with one noised copy of it: 2N lines,
// clean block first. The manifest reports the changed fraction over the
// whole output, which is exactly half the noised corpus's own rate.
inline BuiltDataset build_clean_plus_error(const ParallelCorpus& clean,
                                           const ParallelCorpus& noisy,
                                           ErrorType noisy_type) {
  clean.check_aligned();
  noisy.check_aligned();
  detail::require_same_targets(clean, noisy, "noisy corpus");

  const std::size_t n = clean.size();
  const std::size_t changed = detail::changed_lines(clean, noisy);
  const std::string tag = to_string(noisy_type);

  BuiltDataset out;
  out.corpus.source = clean.source;
  out.corpus.source.insert(out.corpus.source.end(), noisy.source.begin(),
                           noisy.source.end());
  out.corpus.target = clean.target;
  out.corpus.target.insert(out.corpus.target.end(), noisy.target.begin(),
                           noisy.target.end());
  out.corpus.tags.assign(n, kCleanTag);
  out.corpus.tags.insert(out.corpus.tags.end(), n, tag);

  nlohmann::json& m = out.manifest;
  m["format_version"] = 1;
  m["mode"] = "clean+error";
  m["error_type"] = tag;
  m["total_lines"] = 2 * n;
  m["composition"] = {{kCleanTag, n}, {tag, n}};
  m["changed_lines"] = changed;
  m["changed_fraction"] =
      n == 0 ? 0.0 : static_cast<double>(changed) / static_cast<double>(2 * n);
  m["error_changed_fraction"] =
      n == 0 ? 0.0 : static_cast<double>(changed) / static_cast<double>(n);
  m["inputs"] = {{"clean", detail::corpus_digest(clean)},
                 {tag, detail::corpus_digest(noisy)}};
  m["tool"] = {{"name", "gramnoise"}, {"version", kVersion}};
  return out;
}

// Six versions of every training sentence: the clean one plus one per
// error type, blocks in canonical type order. Inputs are keyed by type,
// so supplying the five noisy corpora in any order builds the same output.
inline BuiltDataset build_mix_all(
    const ParallelCorpus& clean,
    const std::map<ErrorType, ParallelCorpus>& noisy_by_type) {
  clean.check_aligned();
  std::string missing;
  for (ErrorType t : kAllErrorTypes) {
    if (noisy_by_type.find(t) == noisy_by_type.end()) {
      if (!missing.empty()) missing += ", ";
      missing += to_string(t);
    }
  }
  if (!missing.empty())
    throw DataError("mix-all is missing noisy corpora for: " + missing);

  const std::size_t n = clean.size();
  BuiltDataset out;
  out.corpus.source = clean.source;
  out.corpus.target = clean.target;
  out.corpus.tags.assign(n, kCleanTag);

  nlohmann::json composition = {{kCleanTag, n}};
  nlohmann::json changed_by_type;
  nlohmann::json inputs = {{"clean", detail::corpus_digest(clean)}};
  std::size_t changed_total = 0;

  for (ErrorType t : kAllErrorTypes) {
    const auto& noisy = noisy_by_type.at(t);
    noisy.check_aligned();
    detail::require_same_targets(clean, noisy, to_string(t) + " corpus");
    const std::size_t changed = detail::changed_lines(clean, noisy);
    changed_total += changed;
    const std::string tag = to_string(t);
    out.corpus.source.insert(out.corpus.source.end(), noisy.source.begin(),
                             noisy.source.end());
    out.corpus.target.insert(out.corpus.target.end(), noisy.target.begin(),
                             noisy.target.end());
    out.corpus.tags.insert(out.corpus.tags.end(), n, tag);
    composition[tag] = n;
    changed_by_type[tag] = changed;
    inputs[tag] = detail::corpus_digest(noisy);
  }

  nlohmann::json& m = out.manifest;
  m["format_version"] = 1;
  m["mode"] = "mix-all";
  m["total_lines"] = 6 * n;
  m["composition"] = composition;
  m["changed_lines_by_type"] = changed_by_type;
  m["changed_lines"] = changed_total;
  m["changed_fraction"] = n == 0 ? 0.0
                                 : static_cast<double>(changed_total) /
                                       static_cast<double>(6 * n);
  m["inputs"] = inputs;
  m["tool"] = {{"name", "gramnoise"}, {"version", kVersion}};
  return out;
}

// Drops pairs where either side exceeds max_words whitespace tokens.
inline BuiltDataset filter_by_length(const ParallelCorpus& corpus,
                                     std::size_t max_words) {
  if (max_words == 0) throw DataError("max_words must be positive");
  corpus.check_aligned();
  BuiltDataset out;
  std::size_t removed = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (split_ws(corpus.source[i]).size() > max_words ||
        split_ws(corpus.target[i]).size() > max_words) {
      ++removed;
      continue;
    }
    out.corpus.source.push_back(corpus.source[i]);
    out.corpus.target.push_back(corpus.target[i]);
    if (!corpus.tags.empty()) out.corpus.tags.push_back(corpus.tags[i]);
  }
  nlohmann::json& m = out.manifest;
  m["format_version"] = 1;
  m["mode"] = "filter";
  m["max_words"] = max_words;
  m["total_lines"] = out.corpus.size();
  m["removed_lines"] = removed;
  m["inputs"] = {{"corpus", detail::corpus_digest(corpus)}};
  m["tool"] = {{"name", "gramnoise"}, {"version", kVersion}};
  return out;
}

}  // namespace gramnoise

#endif  // GRAMNOISE_DATASETS_HPP
