// Copyright 2026 the altreach authors
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

#include "altreach/certificates.hpp"

#include "altreach/reachability.hpp"
#include "doctest.h"
#include "support/corpus.hpp"

using namespace altreach;
using testsupport::mk;

TEST_SUITE_BEGIN("certificates");

namespace {

// s -(R)- v -(R)- t
ColoredMultigraph blocked_path() { return mk(3, {{0, 1, "R"}, {1, 2, "R"}}); }

TutteCertificate assign(std::vector<std::pair<VertexId, Color>> a) {
  TutteCertificate c;
  c.assignment = std::move(a);
  return c;
}

}  // namespace

TEST_CASE("verify_tutte accepts the blocked-path certificate") {
  auto g = blocked_path();
  CHECK(!verify_tutte(g, {0, 2}, assign({{1, "R"}})));
}

TEST_CASE("verify_tutte rejects the wrong color at a terminal component") {
  auto g = blocked_path();
  auto v = verify_tutte(g, {0, 2}, assign({{1, "B"}}));
  REQUIRE(v);
  CHECK(v->clause == Violation::Clause::MismatchedAtTerminalComponent);
}

TEST_CASE("verify_tutte rejects a terminal inside A") {
  auto g = blocked_path();
  auto v = verify_tutte(g, {0, 2}, assign({{0, "R"}}));
  REQUIRE(v);
  CHECK(v->clause == Violation::Clause::TerminalInA);
}

TEST_CASE("verify_tutte catches a component holding two terminals") {
  auto g = mk(4, {{0, 1, "R"}, {1, 2, "R"}, {2, 3, "R"}});
  auto v = verify_tutte(g, {0, 1}, assign({{3, "R"}}));
  REQUIRE(v);
  CHECK(v->clause == Violation::Clause::MultiTerminalComponent);
}

TEST_CASE("verify_tutte catches two mismatched edges at a free component") {
  // A = {0}, colored R; vertices 1,2 form a free component hit by two B edges
  auto g = mk(3, {{0, 1, "B"}, {0, 2, "B"}, {1, 2, "R"}});
  auto v = verify_tutte(g, {}, assign({{0, "R"}}));
  REQUIRE(v);
  CHECK(v->clause == Violation::Clause::TwoMismatchedAtFreeComponent);
}

TEST_CASE("verify_tutte catches a mismatched edge inside A") {
  auto g = mk(2, {{0, 1, "G"}});
  auto v = verify_tutte(g, {}, assign({{0, "R"}, {1, "B"}}));
  REQUIRE(v);
  CHECK(v->clause == Violation::Clause::MismatchedInsideA);
}

TEST_CASE("verify_alt_trail on elementary walks") {
  auto g = mk(3, {{0, 1, "R"}, {1, 2, "B"}});
  SUBCASE("the full path is accepted") {
    CHECK(!verify_alt_trail(g, {0, 2}, Walk{{0, 1, 2}, {0, 1}}));
  }
  SUBCASE("edge reuse is rejected") {
    auto v = verify_alt_trail(g, {0, 2}, Walk{{0, 1, 0, 1, 2}, {0, 0, 0, 1}});
    REQUIRE(v);
    CHECK(v->clause == Violation::Clause::TrailEdgeReuse);
  }
  SUBCASE("closed s-to-s trails are rejected") {
    auto h = mk(2, {{0, 1, "R"}, {0, 1, "B"}});
    auto v = verify_alt_trail(h, {0, 1}, Walk{{0, 1, 0}, {0, 1}});
    REQUIRE(v);
    CHECK(v->clause == Violation::Clause::TrailEndpoints);
  }
  SUBCASE("color clashes are rejected") {
    auto h = mk(3, {{0, 1, "R"}, {1, 2, "R"}});
    auto v = verify_alt_trail(h, {0, 2}, Walk{{0, 1, 2}, {0, 1}});
    REQUIRE(v);
    CHECK(v->clause == Violation::Clause::TrailNotAlternating);
  }
  SUBCASE("walks that do not fit the graph are rejected") {
    auto v = verify_alt_trail(g, {0, 2}, Walk{{0, 2}, {0}});
    REQUIRE(v);
    CHECK(v->clause == Violation::Clause::TrailInconsistent);
  }
}

TEST_CASE("brute_reach on elementary instances") {
  SUBCASE("no edges, two terminals: none") {
    auto g = mk(2, {});
    CHECK(!brute_reach(g, {0, 1}));
  }
  SUBCASE("single edge: the length-1 trail") {
    auto g = mk(2, {{0, 1, "R"}});
    auto w = brute_reach(g, {0, 1});
    REQUIRE(w);
    CHECK(w->length() == 1);
  }
  SUBCASE("blocked path: none") {
    CHECK(!brute_reach(blocked_path(), {0, 2}));
  }
}

TEST_CASE("accepted certificates obstruct, and obstructions certify") {
  // one exhaustive sweep: accepted certificates imply no connecting trail,
  // no trail implies an accepted certificate, and certificate vertices are
  // reachable with exactly their assigned color
  testsupport::enumerate_graphs(3, 6, 3, 2, [&](const ColoredMultigraph& g) {
    for (const auto& terms : testsupport::terminal_subsets(3, 3)) {
      SolveOutcome out = solve(g, terms);
      auto oracle = brute_reach(g, terms);
      if (out.certificate && !verify_tutte(g, terms, *out.certificate)) {
        // an accepted certificate means no connecting trail exists
        CHECK(!oracle);
        auto classes = brute_classify(g, terms);
        for (const auto& [v, c] : out.certificate->assignment) {
          // every certificate vertex is reachable with exactly its color
          CHECK(classes.at(v) == VertexClass{VertexClass::Kind::Inner, c});
        }
      }
      if (!oracle) {
        // no trail: the solver's certificate must be accepted
        REQUIRE(out.certificate);
        CHECK(!verify_tutte(g, terms, *out.certificate));
      }
    }
  });
}

TEST_CASE("brute_classify on elementary instances") {
  SUBCASE("isolated vertex is unreachable") {
    auto g = mk(3, {{0, 1, "R"}});
    auto cls = brute_classify(g, {0});
    CHECK(cls.at(2).kind == VertexClass::Kind::Unreachable);
  }
  SUBCASE("middle of the blocked path lands in I(R)") {
    auto cls = brute_classify(blocked_path(), {0, 2});
    CHECK(cls.at(1) == VertexClass{VertexClass::Kind::Inner, "R"});
    CHECK(cls.at(0).kind == VertexClass::Kind::Terminal);
  }
  SUBCASE("blossom vertices land in T(S)") {
    // s -(B)- u, u -(R)- a, a -(B)- b, b -(R)- u
    auto g = mk(5, {{0, 1, "B"}, {1, 2, "R"}, {2, 3, "B"}, {3, 1, "R"}});
    auto cls = brute_classify(g, {0});
    CHECK(cls.at(1).kind == VertexClass::Kind::TwoColors);
    CHECK(cls.at(2).kind == VertexClass::Kind::TwoColors);
    CHECK(cls.at(3).kind == VertexClass::Kind::TwoColors);
  }
}

TEST_SUITE_END();
