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

#ifndef GRAMNOISE_VERSION_HPP
#define GRAMNOISE_VERSION_HPP

namespace gramnoise {

inline constexpr const char* kVersion = "0.1.0";

// Version tag of the scoring tokenizer (see bleu.hpp). Bumped whenever the
// normalization rules change, and printed in every score report header.
inline constexpr const char* kScoringNormalizationVersion = "13a.1";

// Seed used by the CLI when --seed is not given. Fixed, never time-based.
inline constexpr unsigned long long kDefaultSeed = 1729;

}  // namespace gramnoise

#endif  // GRAMNOISE_VERSION_HPP
