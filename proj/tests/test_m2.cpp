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

#include "gramnoise/io.hpp"
#include "gramnoise/m2.hpp"

using namespace gramnoise;

static const std::string kFixtureDir = GRAMNOISE_FIXTURE_DIR;

TEST_CASE("parse_m2 reads a one-annotation entry", "[m2]") {
  auto entries = parse_m2(
      "S The cat sit .\nA 2 3|||SVA|||sits|||REQUIRED|||-NONE-|||0\n\n");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].tokens ==
        std::vector<std::string>{"The", "cat", "sit", "."});
  REQUIRE(entries[0].annotations.size() == 1);
  const auto& a = entries[0].annotations[0];
  CHECK(a.span_start == 2);
  CHECK(a.span_end == 3);
  CHECK(a.code == "SVA");
  CHECK(a.correction == "sits");
  CHECK(a.annotator == 0);
}

TEST_CASE("parse_m2 keeps error-free entries", "[m2]") {
  auto entries = parse_m2("S A perfect sentence .\n\n");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].annotations.empty());
}

TEST_CASE("parse_m2 on an empty stream", "[m2]") {
  CHECK(parse_m2("").empty());
}

TEST_CASE("parse_m2 rejects malformed input with line numbers", "[m2]") {
  CHECK_THROWS_WITH(
      parse_m2("S a b\nA x 1|||Nn|||c|||REQUIRED|||-NONE-|||0\n\n"),
      Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(
      parse_m2("S a b\nA 2 1|||Nn|||c|||REQUIRED|||-NONE-|||0\n\n"),
      Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(parse_m2("A 0 1|||Nn|||c|||REQUIRED|||-NONE-|||0\n"),
                    Catch::Matchers::ContainsSubstring("before any S line"));
}

TEST_CASE("parse_m2 drops noop annotations", "[m2]") {
  auto entries =
      parse_m2("S fine .\nA -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0\n\n");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].annotations.empty());
}

TEST_CASE("insertion spans and empty corrections survive", "[m2]") {
  auto entries = parse_m2(
      "S He go to school .\n"
      "A 1 1|||Prep|||for|||REQUIRED|||-NONE-|||1\n"
      "A 1 2|||ArtOrDet||||||REQUIRED|||-NONE-|||0\n\n");
  REQUIRE(entries.size() == 1);
  REQUIRE(entries[0].annotations.size() == 2);
  CHECK(entries[0].annotations[0].span_start == 1);
  CHECK(entries[0].annotations[0].span_end == 1);  // insertion point
  CHECK(entries[0].annotations[0].correction == "for");
  CHECK(entries[0].annotations[0].annotator == 1);
  CHECK(entries[0].annotations[1].correction.empty());
}

TEST_CASE("ingestion is idempotent through render_m2", "[m2]") {
  auto first = parse_m2_file(kFixtureDir + "/sample.m2");
  REQUIRE(!first.empty());
  auto second = parse_m2(render_m2(first));
  CHECK(first == second);
  CHECK(render_m2(first) == render_m2(second));
}
