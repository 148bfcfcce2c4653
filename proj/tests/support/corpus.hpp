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

#ifndef ALTREACH_TESTS_SUPPORT_CORPUS_HPP
#define ALTREACH_TESTS_SUPPORT_CORPUS_HPP

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "altreach/graph.hpp"
#include "altreach/reachability.hpp"

namespace altreach::testsupport {

/// Shorthand graph builder: edges as (u, v, color), ids in list order.
ColoredMultigraph mk(int n, const std::vector<std::tuple<int, int, const char*>>& edges);

/// Independent re-derivation of walk classification straight from the
/// definitions; deliberately naive, used to cross-check classify_walk.
WalkClass naive_classify_walk(const ColoredMultigraph& g, const Walk& w);

/// Bridge oracle: delete each edge in turn and count components.
std::vector<EdgeId> brute_bridges(const ColoredMultigraph& g);

/// Visits every colored multigraph with exactly n vertices, at most
/// max_edges edges, colors from the first num_colors of {R, B, G}, and at
/// most max_parallel edges per vertex pair. Edge ids follow pair order.
void enumerate_graphs(int n, int max_edges, int num_colors, int max_parallel,
                      const std::function<void(const ColoredMultigraph&)>& visit);

/// Nonempty subsets of {0..n-1} of size <= k, ascending.
std::vector<std::vector<VertexId>> terminal_subsets(int n, int k);

struct RandomGraphParams {
  int min_vertices = 2;
  int max_vertices = 5;
  int max_edges = 7;
  int num_colors = 3;
  int max_parallel = 2;
};
ColoredMultigraph random_graph(std::mt19937_64& rng, const RandomGraphParams& p);
std::vector<VertexId> random_terminals(std::mt19937_64& rng, int n, int max_count);

/// All closed alternating trails of g, one representative per
/// rotation/reversal class (anchored at their minimum edge id).
std::vector<Walk> all_cats(const ColoredMultigraph& g);

/// Random closed alternating walks (edges reusable up to twice); returns
/// their characteristic vectors, possibly with duplicates.
std::vector<EdgeVector> sample_caw_vectors(std::mt19937_64& rng, const ColoredMultigraph& g,
                                           int attempts, int length_cap);

/// Full colored-blossom-forest validity check against the definitions,
/// with brute-force witness-trail searches inside each block. Returns a
/// description of the first violation, or nullopt when valid.
std::optional<std::string> check_forest(const ColoredMultigraph& g,
                                        const std::vector<VertexId>& terminals,
                                        const BlossomForestState& st);

/// Builds a forest state by applying uniformly random applicable operations
/// (grow/shrink/fuse in any order), stopping after `steps` operations or at
/// a breakthrough/maximal state. Every intermediate state is definition-valid.
BlossomForestState random_forest_state(std::mt19937_64& rng, const ColoredMultigraph& g,
                                       const std::vector<VertexId>& terminals, int steps);

ColoredMultigraph petersen_graph();

}  // namespace altreach::testsupport

#endif  // ALTREACH_TESTS_SUPPORT_CORPUS_HPP
