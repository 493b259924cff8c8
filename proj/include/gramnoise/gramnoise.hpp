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

#ifndef GRAMNOISE_GRAMNOISE_HPP
#define GRAMNOISE_GRAMNOISE_HPP

#include "gramnoise/bleu.hpp"
#include "gramnoise/confusion.hpp"
#include "gramnoise/datasets.hpp"
#include "gramnoise/error_types.hpp"
#include "gramnoise/io.hpp"
#include "gramnoise/m2.hpp"
#include "gramnoise/morphology.hpp"
#include "gramnoise/noiser.hpp"
#include "gramnoise/reports.hpp"
#include "gramnoise/rng.hpp"
#include "gramnoise/text.hpp"
#include "gramnoise/treebank.hpp"
#include "gramnoise/version.hpp"

#endif  // GRAMNOISE_GRAMNOISE_HPP
