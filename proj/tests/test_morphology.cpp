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

#include "gramnoise/inflection_data.hpp"
#include "gramnoise/io.hpp"
#include "gramnoise/morphology.hpp"

using namespace gramnoise;

static const std::string kFixtureDir = GRAMNOISE_FIXTURE_DIR;
static const std::string kDataDir = GRAMNOISE_DATA_DIR;
static const InflectionLexicon& lex() { return InflectionLexicon::builtin(); }

TEST_CASE("noun number toggling", "[morphology]") {
  CHECK(toggle_noun_number("votes", lex()).form == "vote");
  CHECK(toggle_noun_number("verdict", lex()).form == "verdicts");
  CHECK(toggle_noun_number("city", lex()).form == "cities");
  CHECK(toggle_noun_number("child", lex()).form == "children");
  CHECK(toggle_noun_number("children", lex()).form == "child");
  CHECK(toggle_noun_number("boxes", lex()).form == "box");
  CHECK(toggle_noun_number("heroes", lex()).form == "hero");
}

TEST_CASE("invariant nouns are flagged, not mangled", "[morphology]") {
  auto r = toggle_noun_number("sheep", lex());
  CHECK(r.form == "sheep");
  CHECK(!r.changed);
  CHECK(r.invariant);
  CHECK(toggle_noun_number("news", lex()).invariant);
}

TEST_CASE("non-alphabetic nouns are rejected", "[morphology]") {
  CHECK_THROWS_AS(toggle_noun_number("226", lex()), DataError);
  CHECK_THROWS_AS(toggle_noun_number("decision-making", lex()), DataError);
}

TEST_CASE("verb agreement toggling", "[morphology]") {
  CHECK(toggle_verb_agreement("win", "VBP", lex()).form == "wins");
  CHECK(toggle_verb_agreement("accompanies", "VBZ", lex()).form ==
        "accompany");
  CHECK(toggle_verb_agreement("was", "VBD", lex()).form == "were");
  CHECK(toggle_verb_agreement("were", "VBD", lex()).form == "was");
  CHECK(toggle_verb_agreement("is", "VBZ", lex()).form == "are");
  CHECK(toggle_verb_agreement("are", "VBP", lex()).form == "is");
  CHECK(toggle_verb_agreement("has", "VBZ", lex()).form == "have");
  CHECK(toggle_verb_agreement("goes", "VBZ", lex()).form == "go");
  CHECK(toggle_verb_agreement("go", "VBP", lex()).form == "goes");
}

TEST_CASE("verb toggling rejects bad tags and VBD non-be forms",
          "[morphology]") {
  CHECK_THROWS_AS(toggle_verb_agreement("went", "VBD", lex()), DataError);
  CHECK_THROWS_AS(toggle_verb_agreement("win", "NN", lex()), DataError);
}

TEST_CASE("indefinite article choice", "[morphology]") {
  CHECK(choose_indefinite("apple", lex()) == "an");
  CHECK(choose_indefinite("gas", lex()) == "a");
  CHECK(choose_indefinite("hour", lex()) == "an");
  CHECK(choose_indefinite("university", lex()) == "a");
  CHECK(choose_indefinite("one", lex()) == "a");
  CHECK(choose_indefinite("European", lex()) == "a");
  CHECK(choose_indefinite("226", lex()) == "a");
  CHECK(choose_indefinite("Umbrella", lex()) == "an");
}

TEST_CASE("capitalization pattern is preserved", "[morphology]") {
  CHECK(toggle_noun_number("Votes", lex()).form == "Vote");
  CHECK(toggle_noun_number("VOTES", lex()).form == "VOTE");
  CHECK(toggle_noun_number("City", lex()).form == "Cities");
  CHECK(toggle_verb_agreement("Was", "VBD", lex()).form == "Were");
}

TEST_CASE("noun toggle is an involution over the fixture word list",
          "[morphology][property]") {
  auto words = read_lines(kFixtureDir + "/regular_nouns.txt");
  REQUIRE(words.size() > 100);
  for (const auto& w : words) {
    auto once = toggle_noun_number(w, lex());
    REQUIRE(once.changed);
    auto twice = toggle_noun_number(once.form, lex());
    INFO(w << " -> " << once.form << " -> " << twice.form);
    CHECK(twice.form == w);
  }
}

TEST_CASE("verb agreement toggle is an involution over the fixture list",
          "[morphology][property]") {
  auto verbs = read_lines(kFixtureDir + "/regular_verbs.txt");
  REQUIRE(verbs.size() > 50);
  for (const auto& v : verbs) {
    auto to = toggle_verb_agreement(v, "VBP", lex());
    REQUIRE(to.changed);
    auto back = toggle_verb_agreement(to.form, "VBZ", lex());
    INFO(v << " -> " << to.form << " -> " << back.form);
    CHECK(back.form == v);
  }
}

TEST_CASE("builtin lexicon equals the committed data file", "[morphology]") {
  CHECK(read_file(kDataDir + "/inflections.tsv") ==
        std::string(kBuiltinInflectionsTsv));
}

TEST_CASE("lexicon file loading and error reporting", "[morphology]") {
  auto from_file = InflectionLexicon::from_file(kDataDir + "/inflections.tsv");
  CHECK(from_file.noun_sg2pl("child") == std::string("children"));
  std::istringstream bad("only-one-field\n");
  CHECK_THROWS_AS(InflectionLexicon::from_tsv(bad), DataError);
}
