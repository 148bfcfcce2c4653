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

#ifndef ALTREACH_MATCHING_HPP
#define ALTREACH_MATCHING_HPP

#include <optional>
#include <vector>

#include "altreach/graph.hpp"
#include "altreach/reachability.hpp"

namespace altreach {

struct Matching {
  std::vector<EdgeId> edges;  // sorted; no two share a vertex
};

bool is_matching(const ColoredMultigraph& g, const Matching& m);

/// The matching problem as two-color reachability: matched edges one color,
/// the rest the other, terminals = exposed vertices.
struct MatchingReduction {
  ColoredMultigraph colored;        // same ids as g, recolored
  std::vector<VertexId> exposed;    // sorted
};
MatchingReduction matching_reduction(const ColoredMultigraph& g, const Matching& m);

/// An augmenting path for m, or nullopt when none exists (m is maximum).
/// The trail returned by the solver is asserted vertex-simple at runtime.
std::optional<Walk> augmenting_path(const ColoredMultigraph& g, const Matching& m);

/// Augmenting path plus, on failure, the obstruction found by the solver.
struct AugmentOutcome {
  std::optional<Walk> path;
  std::optional<TutteCertificate> certificate;  // set iff no path
};
AugmentOutcome augmenting_path_full(const ColoredMultigraph& g, const Matching& m);

/// Repeated augmentation from the empty matching (or a greedy start).
/// Requires a simple graph (no parallel edges).
Matching max_matching(const ColoredMultigraph& g, bool greedy_init = false);

/// Exhaustive maximum matching over edge subsets; oracle for small graphs.
Matching brute_max_matching(const ColoredMultigraph& g);

}  // namespace altreach

#endif  // ALTREACH_MATCHING_HPP
