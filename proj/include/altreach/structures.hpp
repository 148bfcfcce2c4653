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

#ifndef ALTREACH_STRUCTURES_HPP
#define ALTREACH_STRUCTURES_HPP

#include <optional>
#include <vector>

#include "altreach/graph.hpp"
#include "altreach/reachability.hpp"

namespace altreach {

/// Auxiliary graph of a reduction plus the bookkeeping to map results back.
struct ReductionMap {
  ColoredMultigraph host;                          // the auxiliary graph
  std::vector<std::optional<EdgeId>> back_edges;   // host edge -> original edge (none for added)
  // closed-trail-through-an-edge reduction:
  VertexId s_prime = -1, t_prime = -1;
  EdgeId f_edge = -1, g_edge = -1;
  // subdivision reduction: original E1 edge -> its new middle vertex
  std::vector<std::optional<VertexId>> subdivision_vertex;
};

/// Splits e = {s,t} off: removes e, attaches pendant vertices s', t' via new
/// edges f, g of color C(e); an alternating s'-t' trail in the host closes to
/// a closed alternating trail through e.
ReductionMap cat_reduction(const ColoredMultigraph& g, EdgeId e);

struct CatSearchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A closed alternating trail in g. Requires g bridgeless with edges of at
/// least two colors at every vertex (throws CatSearchError naming the bridge
/// or the offending vertex otherwise). Probes edges in ascending id order.
Walk find_cat(const ColoredMultigraph& g);

/// A closed alternating trail containing e, or nullopt; no bridgeless
/// hypothesis needed. Throws on an unknown edge id.
std::optional<Walk> find_cat_through_edge(const ColoredMultigraph& g, EdgeId e);

/// Everything giles_seymour derives on the way to its cycle; exposed so the
/// auxiliary-graph facts can be checked externally.
struct CycleCoverResult {
  Walk cycle;             // in g: every cycle vertex w has phi[w] on the cycle
  ReductionMap reduction; // the 2-colored subdivision graph
  Walk aux_cat;           // the closed alternating trail found in the host
};

/// Giles-Seymour: given bridgeless g (colors ignored) and phi mapping each
/// vertex to an incident edge, finds a cycle containing phi(w) for every
/// vertex w on it.
CycleCoverResult giles_seymour(const ColoredMultigraph& g, const std::vector<EdgeId>& phi);

}  // namespace altreach

#endif  // ALTREACH_STRUCTURES_HPP
