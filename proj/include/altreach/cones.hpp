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

#ifndef ALTREACH_CONES_HPP
#define ALTREACH_CONES_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "altreach/graph.hpp"

namespace altreach {

/// A cut (all edges between side_x and the rest) together with one crossing
/// edge e; the subject of the cut condition x(e) <= x(D - e).
struct CutPair {
  std::vector<VertexId> side_x;  // sorted, nonempty, proper
  EdgeId e = -1;
  int size_x = 0;
  int size_rest = 0;

  bool operator==(const CutPair& o) const { return side_x == o.side_x && e == o.e; }
};

/// Crossing edges of the cut given by side_x, ascending.
std::vector<EdgeId> cut_edges(const ColoredMultigraph& g, const std::vector<VertexId>& side_x);

struct ConeViolation {
  enum class Kind { Balance, Cut, Negative };
  Kind kind = Kind::Negative;
  // balance: totals per color role at `vertex` (roles ordered lexicographically)
  VertexId vertex = -1;
  Color color_a, color_b;
  Rat total_a, total_b;
  // cut:
  CutPair pair;
  Rat lhs, rhs;
  // negative:
  EdgeId edge = -1;

  std::string describe() const;
};

/// Re-evaluates the named constraint; true iff it still fails for x.
bool violation_reverifies(const ColoredMultigraph& g, const EdgeVector& x,
                          const ConeViolation& v);

/// The (at most) two color tokens used by g, lexicographically ordered, with
/// synthetic placeholders when fewer than two colors occur. Nullopt when more
/// than two distinct colors are present.
std::optional<std::pair<Color, Color>> two_color_roles(const ColoredMultigraph& g);

/// Membership in the alternating cone: all weights >= 0 and at every vertex
/// the totals of the two colors agree. Throws std::invalid_argument when g
/// uses more than two colors.
std::optional<ConeViolation> check_balance(const ColoredMultigraph& g, const EdgeVector& x);

enum class AdmissibilityMethod {
  MinCut,       // per-edge exact max-flow: mincut(u,v) >= 2 x(e)
  Enumeration,  // all cuts, all single-edge conditions
};

/// Membership in the cycle cone via cut conditions: x(e) <= x(D - e) for
/// every cut D and e in D. Both routes are exact; they agree.
std::optional<ConeViolation> check_cut_admissible(
    const ColoredMultigraph& g, const EdgeVector& x,
    AdmissibilityMethod method = AdmissibilityMethod::MinCut);

/// Every (D, e) with x(e) = x(D - e), by exhaustive cut enumeration per
/// connected component, deterministic order. Throws std::invalid_argument
/// when x is not cut-admissible.
std::vector<CutPair> tight_pairs(const ColoredMultigraph& g, const EdgeVector& x);

/// One side of a tight-cut split: a weighted 2-colored graph in which the
/// collapsed side is represented by `attach` (e's endpoint there, receiving
/// the crossing edges colored opposite e) and `attach_prime` (receiving the
/// same-colored crossings), joined by the fresh edge `new_edge` whose weight
/// is the same-colored crossing total.
struct SplitHalf {
  ColoredMultigraph graph;
  EdgeVector weights;
  std::vector<std::optional<EdgeId>> edge_to_parent;     // new edge -> original
  std::vector<std::optional<VertexId>> vertex_to_parent; // new vertex -> original
  EdgeId e_new = -1;
  EdgeId new_edge = -1;
  VertexId attach = -1;
  VertexId attach_prime = -1;
  VertexId e_tail_new = -1;  // e's endpoint playing the non-X role
  VertexId e_head_new = -1;  // e's endpoint playing the X role
};

struct SplitResult {
  CutPair pair;
  std::vector<EdgeId> cut; // D, ascending original ids
  SplitHalf collapse_x;    // X replaced by two vertices, V - X kept
  SplitHalf collapse_rest; // V - X replaced, X kept
};

/// Splits g at a tight pair whose sides both have >= 3 vertices. Requires x
/// integral and positive on every edge.
SplitResult split_at(const ColoredMultigraph& g, const EdgeVector& x, const CutPair& pair);

struct CatTerm {
  Walk cat;
  Rat coeff;  // > 0
};

/// Exact nonnegative combination of closed alternating trails.
struct CatDecomposition {
  std::vector<CatTerm> terms;
};

/// Sum of coeff * chi(cat) over the terms.
EdgeVector decomposition_sum(const ColoredMultigraph& g, const CatDecomposition& dec);

/// Canonical representative of a closed trail: the rotation/direction with
/// the lexicographically smallest edge-id sequence.
Walk canonical_closed(const Walk& w);

/// Recombines decompositions of the two halves of a split into one for g:
/// one-sided trails are kept, crossing trails are cut at e and the shared
/// crossing edge and recombined pairwise in sorted order.
CatDecomposition stitch(const ColoredMultigraph& g, const SplitResult& split,
                        const CatDecomposition& dec_collapse_x,
                        const CatDecomposition& dec_collapse_rest);

/// Constructive membership test for the trail cone: either an exact
/// decomposition of q into closed alternating trails, or the balance / cut
/// violation certifying non-membership.
std::variant<CatDecomposition, ConeViolation> decompose(
    const ColoredMultigraph& g, const EdgeVector& q,
    AdmissibilityMethod gate = AdmissibilityMethod::MinCut);

}  // namespace altreach

#endif  // ALTREACH_CONES_HPP
