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

#include "gramnoise/confusion.hpp"
#include "gramnoise/m2.hpp"
#include "gramnoise/rng.hpp"

using namespace gramnoise;
using Catch::Matchers::WithinAbs;

static const std::string kFixtureDir = GRAMNOISE_FIXTURE_DIR;

static ErrorStats fixture_stats() {
  auto entries = parse_m2_file(kFixtureDir + "/sample.m2");
  return collect_stats(entries, default_code_map());
}

TEST_CASE("collect_stats tallies in the correction direction", "[confusion]") {
  auto entries = parse_m2(
      "S I saw a dog .\nA 2 3|||ArtOrDet|||the|||REQUIRED|||-NONE-|||0\n\n"
      "S He waited hours .\nA 2 2|||Prep|||for|||REQUIRED|||-NONE-|||0\n\n"
      "S One vote counts .\nA 1 2|||Nn|||votes|||REQUIRED|||-NONE-|||0\n\n");
  auto stats = collect_stats(entries, default_code_map());
  CHECK(stats.tables[ErrorType::kArt].counts["a"]["the"] == 1);
  CHECK(stats.tables[ErrorType::kPrep].counts[kNullForm]["for"] == 1);
  CHECK(stats.tables[ErrorType::kNn].counts[kFormSg][kFormPl] == 1);
  CHECK(stats.total_mapped == 3);
}

TEST_CASE("unmapped codes are skipped and reported", "[confusion]") {
  auto entries = parse_m2(
      "S He said me the truth .\nA 1 2|||Wci|||told|||REQUIRED|||-NONE-|||0\n\n");
  auto stats = collect_stats(entries, default_code_map());
  CHECK(stats.total_mapped == 0);
  CHECK(stats.unmapped_codes.at("Wci") == 1);
}

TEST_CASE("out-of-set annotations land in the other bucket", "[confusion]") {
  auto entries = parse_m2(
      "S I like this movie .\nA 2 3|||ArtOrDet|||the|||REQUIRED|||-NONE-|||0\n\n");
  auto stats = collect_stats(entries, default_code_map());
  CHECK(stats.tables[ErrorType::kArt].other == 1);
  CHECK(stats.tables[ErrorType::kArt].cell_total() == 0);
  CHECK(stats.total_mapped == 1);
}

TEST_CASE("build normalizes into the noise direction", "[confusion]") {
  // Correct "the" was written as "a" three times and omitted once.
  ErrorStats stats;
  stats.tables[ErrorType::kArt].counts["a"]["the"] = 3;
  stats.tables[ErrorType::kArt].counts[kNullForm]["the"] = 1;
  stats.total_mapped = 4;
  auto set = build_confusion_matrices(stats);
  const auto& row = set.row(ErrorType::kArt, "the");
  CHECK_THAT(row.at("a"), WithinAbs(0.75, 1e-12));
  CHECK_THAT(row.at(kNullForm), WithinAbs(0.25, 1e-12));
  CHECK_THAT(row.at("an"), WithinAbs(0.0, 1e-12));
  CHECK(row.count("the") == 0);  // no identity column
}

TEST_CASE("zero-mass rows fall back to uniform and are flagged",
          "[confusion]") {
  ErrorStats stats;
  auto set = build_confusion_matrices(stats);
  CHECK_THAT(set.row(ErrorType::kNn, kFormSg).at(kFormPl), WithinAbs(1.0, 0));
  CHECK_THAT(set.row(ErrorType::kNn, kFormPl).at(kFormSg), WithinAbs(1.0, 0));
  CHECK(set.uniform_rows[ErrorType::kNn] ==
        std::vector<std::string>{kFormSg, kFormPl});
  const auto& art_a = set.row(ErrorType::kArt, "a");
  CHECK_THAT(art_a.at("an"), WithinAbs(1.0 / 3, 1e-12));
  CHECK_THAT(art_a.at("the"), WithinAbs(1.0 / 3, 1e-12));
  CHECK_THAT(art_a.at(kNullForm), WithinAbs(1.0 / 3, 1e-12));
}

TEST_CASE("additive smoothing spreads mass over the support", "[confusion]") {
  ErrorStats stats;
  stats.tables[ErrorType::kArt].counts["a"]["the"] = 3;
  stats.total_mapped = 3;
  auto set = build_confusion_matrices(stats, 1.0);
  const auto& row = set.row(ErrorType::kArt, "the");
  CHECK_THAT(row.at("a"), WithinAbs(4.0 / 6, 1e-12));
  CHECK_THAT(row.at("an"), WithinAbs(1.0 / 6, 1e-12));
  CHECK_THAT(row.at(kNullForm), WithinAbs(1.0 / 6, 1e-12));
  CHECK(set.uniform_rows[ErrorType::kArt].empty());
}

// Hand tally of tests/fixtures/sample.m2, done against the file with a
// spreadsheet. Correction direction:
//   art:  a->the x3, a->an x2, the->a x2, null->the x2, the->null x1,
//         an->a x1, other x1 (this->the)
//   prep: in->on x2, null->on x1, on->in x1, at->in x1, of->for x1,
//         for->null x1, other x1 (multi-token span)
//   nn:   SG->PL x3, PL->SG x2, other x1
//   sva:  not3SG->3SG x2, 3SG->not3SG x1, was->were x1, were->was x1,
//         other x1
TEST_CASE("fixture matrices match the hand-tallied table exactly",
          "[confusion][oracle]") {
  auto stats = fixture_stats();
  CHECK(stats.total_mapped == 32);
  CHECK(stats.unmapped_codes.at("Wci") == 2);
  CHECK(stats.unmapped_codes.at("Vt") == 1);
  CHECK(stats.unmapped_codes.at("Trans") == 1);

  auto set = build_confusion_matrices(stats);

  const auto& art_a = set.row(ErrorType::kArt, "a");
  CHECK_THAT(art_a.at("the"), WithinAbs(2.0 / 3, 1e-12));
  CHECK_THAT(art_a.at("an"), WithinAbs(1.0 / 3, 1e-12));
  CHECK_THAT(art_a.at(kNullForm), WithinAbs(0.0, 0));

  const auto& art_an = set.row(ErrorType::kArt, "an");
  CHECK_THAT(art_an.at("a"), WithinAbs(1.0, 0));

  const auto& art_the = set.row(ErrorType::kArt, "the");
  CHECK_THAT(art_the.at("a"), WithinAbs(0.6, 1e-12));
  CHECK_THAT(art_the.at("an"), WithinAbs(0.0, 0));
  CHECK_THAT(art_the.at(kNullForm), WithinAbs(0.4, 1e-12));

  const auto& art_null = set.row(ErrorType::kArt, kNullForm);
  CHECK_THAT(art_null.at("the"), WithinAbs(1.0, 0));

  CHECK(set.other_bucket[ErrorType::kArt] == 1);
  CHECK(set.uniform_rows[ErrorType::kArt].empty());

  const auto& prep_on = set.row(ErrorType::kPrep, "on");
  CHECK_THAT(prep_on.at("in"), WithinAbs(2.0 / 3, 1e-12));
  CHECK_THAT(prep_on.at(kNullForm), WithinAbs(1.0 / 3, 1e-12));
  const auto& prep_in = set.row(ErrorType::kPrep, "in");
  CHECK_THAT(prep_in.at("on"), WithinAbs(0.5, 1e-12));
  CHECK_THAT(prep_in.at("at"), WithinAbs(0.5, 1e-12));
  CHECK_THAT(set.row(ErrorType::kPrep, "for").at("of"), WithinAbs(1.0, 0));
  CHECK_THAT(set.row(ErrorType::kPrep, kNullForm).at("for"),
             WithinAbs(1.0, 0));
  CHECK(set.other_bucket[ErrorType::kPrep] == 1);
  CHECK(set.uniform_rows[ErrorType::kPrep].size() == 26);

  CHECK_THAT(set.row(ErrorType::kNn, kFormSg).at(kFormPl), WithinAbs(1.0, 0));
  CHECK_THAT(set.row(ErrorType::kNn, kFormPl).at(kFormSg), WithinAbs(1.0, 0));
  CHECK(set.uniform_rows[ErrorType::kNn].empty());
  CHECK(set.other_bucket[ErrorType::kNn] == 1);

  CHECK_THAT(set.row(ErrorType::kSva, kForm3sg).at(kFormNot3sg),
             WithinAbs(1.0, 0));
  CHECK_THAT(set.row(ErrorType::kSva, kForm2sgPast).at(kFormNot2sgPast),
             WithinAbs(1.0, 0));
  CHECK(set.uniform_rows[ErrorType::kSva].empty());
  CHECK(set.other_bucket[ErrorType::kSva] == 1);

  // Site-action priors, correction direction reversed.
  const auto& art_priors = set.priors[ErrorType::kArt];
  CHECK_THAT(art_priors.del, WithinAbs(2.0 / 11, 1e-12));
  CHECK_THAT(art_priors.sub, WithinAbs(8.0 / 11, 1e-12));
  CHECK_THAT(art_priors.ins, WithinAbs(1.0 / 11, 1e-12));
  const auto& prep_priors = set.priors[ErrorType::kPrep];
  CHECK_THAT(prep_priors.del, WithinAbs(1.0 / 7, 1e-12));
  CHECK_THAT(prep_priors.sub, WithinAbs(5.0 / 7, 1e-12));
  CHECK_THAT(prep_priors.ins, WithinAbs(1.0 / 7, 1e-12));
}

TEST_CASE("count conservation on the fixture", "[confusion][property]") {
  auto stats = fixture_stats();
  std::uint64_t cells = 0, other = 0;
  for (const auto& [type, table] : stats.tables) {
    cells += table.cell_total();
    other += table.other;
  }
  CHECK(cells + other == stats.total_mapped);
  CHECK(cells == 28);
  CHECK(other == 4);
}

TEST_CASE("rows are stochastic and supports closed for random counts",
          "[confusion][property]") {
  Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    ErrorStats stats;
    for (ErrorType t : {ErrorType::kArt, ErrorType::kPrep, ErrorType::kNn,
                        ErrorType::kSva}) {
      const auto& forms = confusion_set(t);
      for (int k = 0; k < 12; ++k) {
        const auto& learner = forms[rng.next_below(forms.size())];
        const auto& corrected = forms[rng.next_below(forms.size())];
        if (learner == corrected) continue;
        if (t == ErrorType::kSva && sva_partner(learner) != corrected)
          continue;
        stats.tables[t].counts[learner][corrected] += rng.next_below(5);
      }
    }
    double alpha = trial % 3 == 0 ? 0.5 : 0.0;
    auto set = build_confusion_matrices(stats, alpha);
    set.validate();  // throws on any row-sum or support violation
    for (const auto& [type, matrix] : set.rows) {
      CHECK(matrix.size() == confusion_set(type).size());
      for (const auto& [form, cells] : matrix) {
        double sum = 0;
        for (const auto& [col, p] : cells) sum += p;
        CHECK_THAT(sum, WithinAbs(1.0, 1e-9));
      }
    }
  }
}

TEST_CASE("matrix JSON round-trips", "[confusion]") {
  auto set = build_confusion_matrices(fixture_stats(), 0.25);
  set.source = {{"note", "fixture"}};
  auto loaded = matrices_from_json(to_json(set));
  CHECK(loaded.rows == set.rows);
  CHECK(loaded.alpha == set.alpha);
  CHECK(loaded.total_mapped == set.total_mapped);
  CHECK(loaded.uniform_rows == set.uniform_rows);
  CHECK(loaded.priors[ErrorType::kArt].del == set.priors[ErrorType::kArt].del);
  CHECK(render_matrices(loaded) == render_matrices(set));
}

TEST_CASE("loading rejects corrupt matrices", "[confusion]") {
  auto set = build_confusion_matrices(fixture_stats());
  auto j = to_json(set);
  j["matrices"]["art"]["the"]["a"] = 0.9;  // breaks the row sum
  CHECK_THROWS_AS(matrices_from_json(j), DataError);
  auto j2 = to_json(set);
  j2["matrices"]["art"]["the"]["banana"] = 0.0;  // outside the support
  CHECK_THROWS_AS(matrices_from_json(j2), DataError);
}
