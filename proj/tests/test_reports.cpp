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

#include <catch2/catch_amalgamated.hpp>

#include "gramnoise/reports.hpp"
#include "oracles.hpp"

using namespace gramnoise;
using Catch::Matchers::WithinAbs;

static ErrorEvent art_event(std::uint64_t line, const std::string& original,
                            const std::string& replacement) {
  ErrorEvent e;
  e.line_index = line;
  e.error_type = ErrorType::kArt;
  e.site_kind = replacement == kNullForm ? SiteKind::kDelete
                                         : SiteKind::kSubstitute;
  e.position = 0;
  e.original = original;
  e.replacement = replacement;
  return e;
}

// Six translated lines; lines 0-4 carry one article error each.
struct DeltaFixture {
  std::vector<ErrorEvent> events;
  std::vector<std::string> noisy, clean;
  std::vector<std::vector<std::string>> refs;
};

static DeltaFixture make_fixture() {
  DeltaFixture f;
  f.events = {art_event(0, "the", "a"), art_event(1, "The", "A"),
              art_event(2, "a", kNullForm), art_event(3, "an", "the"),
              art_event(4, "the", kNullForm)};
  f.clean = {"el gato duerme en la cama hoy",
             "la casa grande tiene dos puertas",
             "un hombre camina por la calle",
             "ella compra una manzana roja madura",
             "el tren llega tarde cada noche",
             "nada cambia en esta linea limpia"};
  // Noisy-side translations degrade on some lines, match on others.
  f.noisy = f.clean;
  f.noisy[1] = "una casa grande tiene puertas dos";
  f.noisy[2] = "hombre camina por calle gris";
  f.noisy[4] = "tren llega tarde la noche";
  for (const auto& line : f.clean) f.refs.push_back({line});
  return f;
}

TEST_CASE("delta groups partition the changed lines", "[reports]") {
  auto f = make_fixture();
  auto report = delta_report(f.events, f.noisy, f.clean, f.refs);
  CHECK(report.event_count == 5);
  std::size_t grouped = 0;
  for (const auto& [key, cell] : report.cells) grouped += cell.lines;
  CHECK(grouped == 5);
  CHECK(report.all.lines == 5);
  // "the"->"a" and "The"->"A" fold to one lowercased group.
  CHECK(report.cells.count({"the", "a"}) == 1);
  CHECK(report.cells.at({"the", "a"}).lines == 2);
}

TEST_CASE("identical translation subsets give a zero delta", "[reports]") {
  auto f = make_fixture();
  auto report = delta_report(f.events, f.noisy, f.clean, f.refs);
  // Line 3 (an->the) translates identically on both sides.
  CHECK_THAT(report.cells.at({"an", "the"}).delta, WithinAbs(0.0, 0));
}

TEST_CASE("delta cells equal oracle corpus-BLEU differences", "[reports]") {
  auto f = make_fixture();
  auto report = delta_report(f.events, f.noisy, f.clean, f.refs);
  auto oracle_delta = [&](std::vector<std::size_t> lines) {
    std::vector<std::string> n, c;
    std::vector<std::vector<std::string>> r;
    for (auto i : lines) {
      n.push_back(f.noisy[i]);
      c.push_back(f.clean[i]);
      r.push_back(f.refs[i]);
    }
    return oracle::bleu_brute_force(n, r) - oracle::bleu_brute_force(c, r);
  };
  CHECK_THAT(report.cells.at({"the", "a"}).delta,
             WithinAbs(oracle_delta({0, 1}), 1e-9));
  CHECK_THAT(report.cells.at({"a", kNullForm}).delta,
             WithinAbs(oracle_delta({2}), 1e-9));
  CHECK_THAT(report.cells.at({"the", kNullForm}).delta,
             WithinAbs(oracle_delta({4}), 1e-9));
  CHECK_THAT(report.row_marginals.at("the").delta,
             WithinAbs(oracle_delta({0, 1, 4}), 1e-9));
  CHECK_THAT(report.col_marginals.at(kNullForm).delta,
             WithinAbs(oracle_delta({2, 4}), 1e-9));
  CHECK_THAT(report.all.delta, WithinAbs(oracle_delta({0, 1, 2, 3, 4}), 1e-9));
}

TEST_CASE("article report rows follow the confusion-set order", "[reports]") {
  auto f = make_fixture();
  auto report = delta_report(f.events, f.noisy, f.clean, f.refs);
  CHECK(report.row_forms == std::vector<std::string>{"a", "an", "the"});
  CHECK(report.col_forms ==
        std::vector<std::string>{"a", "the", kNullForm});
  auto text = format_delta_report(report);
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("all"));
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("--"));
}

TEST_CASE("events beyond the translations are rejected", "[reports]") {
  auto f = make_fixture();
  f.events.push_back(art_event(99, "the", "a"));
  CHECK_THROWS_WITH(delta_report(f.events, f.noisy, f.clean, f.refs),
                    Catch::Matchers::ContainsSubstring("99"));
}

TEST_CASE("misaligned inputs are rejected", "[reports]") {
  auto f = make_fixture();
  f.clean.pop_back();
  CHECK_THROWS_AS(delta_report(f.events, f.noisy, f.clean, f.refs), DataError);
}

TEST_CASE("self-BLEU robustness probe", "[reports]") {
  std::vector<std::string> noisy = {"uno dos tres cuatro",
                                    "cinco seis siete ocho"};
  CHECK(self_bleu_robustness(noisy, noisy).score == 100.0);
  std::vector<std::string> disjoint = {"aa bb cc dd", "ee ff gg hh"};
  CHECK(self_bleu_robustness(noisy, disjoint).score == 0.0);
  // Definitional equality with corpus_bleu.
  std::vector<std::string> clean = {"uno dos tres cinco",
                                    "cinco seis siete nueve"};
  std::vector<std::vector<std::string>> refs = {{clean[0]}, {clean[1]}};
  CHECK(self_bleu_robustness(noisy, clean).score ==
        corpus_bleu(noisy, refs).score);
}

TEST_CASE("delta report JSON is complete", "[reports]") {
  auto f = make_fixture();
  auto report = delta_report(f.events, f.noisy, f.clean, f.refs);
  auto j = to_json(report);
  CHECK(j["event_count"] == 5);
  CHECK(j["cells"]["the"]["a"]["lines"] == 2);
  CHECK(j["all"]["lines"] == 5);
  CHECK(j.contains("row_marginals"));
  CHECK(j["normalization"] == kScoringNormalizationVersion);
}
