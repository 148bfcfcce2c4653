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

#include "altreach/matching.hpp"

#include <random>
#include <set>

#include "altreach/certificates.hpp"
#include "doctest.h"
#include "support/corpus.hpp"

using namespace altreach;
using testsupport::mk;

TEST_SUITE_BEGIN("matching");

namespace {

// simple random graph (no parallel edges)
ColoredMultigraph random_simple(std::mt19937_64& rng, int max_n, double density) {
  std::uniform_int_distribution<int> nv(1, max_n);
  int n = nv(rng);
  std::bernoulli_distribution take(density);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (take(rng)) es.push_back(Edge{static_cast<EdgeId>(es.size()), u, v, "X"});
  return ColoredMultigraph(n, std::move(es));
}

void check_augmenting_path(const ColoredMultigraph& g, const Matching& m, const Walk& path) {
  WalkClass cls = classify_walk(g, path);
  CHECK(cls.is_path);
  CHECK(path.length() % 2 == 1);
  std::set<EdgeId> in_m(m.edges.begin(), m.edges.end());
  for (int i = 0; i < path.length(); ++i) {
    // alternates unmatched, matched, ..., unmatched
    CHECK(in_m.count(path.edge_ids[i]) == static_cast<size_t>(i % 2));
  }
  std::vector<bool> covered(g.vertex_count(), false);
  for (EdgeId e : m.edges) {
    covered[g.edge(e).u] = true;
    covered[g.edge(e).v] = true;
  }
  CHECK(!covered[path.front()]);
  CHECK(!covered[path.back()]);
}

}  // namespace

TEST_CASE("augmenting_path on elementary instances") {
  SUBCASE("three-edge path with the middle edge matched") {
    auto g = mk(4, {{0, 1, "X"}, {1, 2, "X"}, {2, 3, "X"}});
    Matching m{{1}};
    auto path = augmenting_path(g, m);
    REQUIRE(path);
    CHECK(path->length() == 3);
    check_augmenting_path(g, m, *path);
  }
  SUBCASE("perfect matching on the 4-cycle has no augmenting path") {
    auto g = mk(4, {{0, 1, "X"}, {1, 2, "X"}, {2, 3, "X"}, {3, 0, "X"}});
    CHECK(!augmenting_path(g, Matching{{0, 2}}));
  }
  SUBCASE("five-cycle with two matched edges is maximum") {
    auto g = mk(5, {{0, 1, "X"}, {1, 2, "X"}, {2, 3, "X"}, {3, 4, "X"}, {4, 0, "X"}});
    Matching m{{1, 3}};
    CHECK(!augmenting_path(g, m));
    CHECK(brute_max_matching(g).edges.size() == 2);
  }
  SUBCASE("non-matchings are rejected") {
    auto g = mk(3, {{0, 1, "X"}, {1, 2, "X"}});
    CHECK_THROWS_AS(augmenting_path(g, Matching{{0, 1}}), std::invalid_argument);
  }
}

TEST_CASE("failed augmentation carries a verifiable obstruction") {
  auto g = mk(5, {{0, 1, "X"}, {1, 2, "X"}, {2, 3, "X"}, {3, 4, "X"}, {4, 0, "X"}});
  Matching m{{1, 3}};
  AugmentOutcome out = augmenting_path_full(g, m);
  REQUIRE(!out.path);
  REQUIRE(out.certificate);
  MatchingReduction red = matching_reduction(g, m);
  CHECK(!verify_tutte(red.colored, red.exposed, *out.certificate));
}

TEST_CASE("max_matching on elementary graphs") {
  SUBCASE("triangle") {
    auto g = mk(3, {{0, 1, "X"}, {1, 2, "X"}, {2, 0, "X"}});
    CHECK(max_matching(g).edges.size() == 1);
  }
  SUBCASE("4-cycle") {
    auto g = mk(4, {{0, 1, "X"}, {1, 2, "X"}, {2, 3, "X"}, {3, 0, "X"}});
    CHECK(max_matching(g).edges.size() == 2);
  }
  SUBCASE("Petersen graph has a perfect matching") {
    auto g = testsupport::petersen_graph();
    Matching m = max_matching(g);
    CHECK(m.edges.size() == 5);
    CHECK(is_matching(g, m));
    CHECK(brute_max_matching(g).edges.size() == 5);
  }
  SUBCASE("3x3 grid matches four") {
    std::vector<std::tuple<int, int, const char*>> es;
    auto id = [](int r, int c) { return 3 * r + c; };
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        if (c + 1 < 3) es.emplace_back(id(r, c), id(r, c + 1), "X");
        if (r + 1 < 3) es.emplace_back(id(r, c), id(r + 1, c), "X");
      }
    auto g = mk(9, es);
    CHECK(max_matching(g).edges.size() == 4);
    CHECK(brute_max_matching(g).edges.size() == 4);
  }
  SUBCASE("parallel edges are rejected") {
    auto g = mk(2, {{0, 1, "X"}, {0, 1, "X"}});
    CHECK_THROWS_AS(max_matching(g), std::invalid_argument);
  }
  SUBCASE("star K1,3") {
    auto g = mk(4, {{0, 1, "X"}, {0, 2, "X"}, {0, 3, "X"}});
    CHECK(max_matching(g).edges.size() == 1);
    CHECK(brute_max_matching(g).edges.size() == 1);
  }
}

TEST_CASE("max_matching equals the exhaustive oracle on random simple graphs") {
  std::mt19937_64 rng(61);
  for (int it = 0; it < 300; ++it) {
    auto g = random_simple(rng, 8, 0.4);
    Matching fast = max_matching(g);
    Matching brute = brute_max_matching(g);
    CHECK(is_matching(g, fast));
    CHECK(fast.edges.size() == brute.edges.size());
    // the greedy-start variant reaches the same size
    CHECK(max_matching(g, true).edges.size() == brute.edges.size());
  }
}

TEST_CASE("every augmenting path along the way is a valid one") {
  std::mt19937_64 rng(67);
  for (int it = 0; it < 150; ++it) {
    auto g = random_simple(rng, 7, 0.45);
    Matching m;
    for (;;) {
      AugmentOutcome out = augmenting_path_full(g, m);
      if (!out.path) {
        // the terminal obstruction certifies maximality of the matching
        if (out.certificate) {
          MatchingReduction red = matching_reduction(g, m);
          CHECK(!verify_tutte(red.colored, red.exposed, *out.certificate));
        }
        break;
      }
      check_augmenting_path(g, m, *out.path);
      std::set<EdgeId> cur(m.edges.begin(), m.edges.end());
      for (EdgeId e : out.path->edge_ids) {
        if (cur.count(e))
          cur.erase(e);
        else
          cur.insert(e);
      }
      m.edges.assign(cur.begin(), cur.end());
      CHECK(is_matching(g, m));
    }
  }
}

TEST_SUITE_END();
