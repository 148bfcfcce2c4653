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

#ifndef ALTREACH_CERTIFICATES_HPP
#define ALTREACH_CERTIFICATES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "altreach/graph.hpp"

namespace altreach {

/// Obstruction to alternating trails between distinct terminals: a set A of
/// nonterminals, each assigned a color, such that no component of G - A holds
/// two terminals and the mismatched-edge conditions hold.
struct TutteCertificate {
  /// sorted by vertex; the key set is A
  std::vector<std::pair<VertexId, Color>> assignment;

  struct ComponentEvidence {
    std::vector<VertexId> component;        // sorted
    std::optional<VertexId> terminal;       // at most one under validity
    std::vector<EdgeId> mismatched;         // crossing mismatched edges into this component
  };
  std::vector<ComponentEvidence> evidence;  // per component of G - A

  bool in_a(VertexId v) const;
  std::optional<Color> color_of(VertexId v) const;
};

/// An edge leaving A whose color differs from its A-endpoint's assigned
/// color, or an edge inside A whose color differs from both assigned colors.
bool edge_mismatched(const ColoredMultigraph& g, const TutteCertificate& cert, EdgeId e);

struct Violation {
  enum class Clause {
    TerminalInA,
    MultiTerminalComponent,
    MismatchedAtTerminalComponent,
    TwoMismatchedAtFreeComponent,
    MismatchedInsideA,
    TrailNotAlternating,
    TrailEndpoints,
    TrailEdgeReuse,
    TrailInconsistent,
  };
  Clause clause;
  std::optional<VertexId> vertex;
  std::optional<EdgeId> edge;
  std::optional<EdgeId> edge2;
  std::vector<VertexId> component;
  std::string describe() const;
};

/// ok (nullopt) iff A is contained in V - S, each component of G - A holds at
/// most one terminal, terminal components see no mismatched edge, other
/// components at most one, and no mismatched edge lies inside A.
std::optional<Violation> verify_tutte(const ColoredMultigraph& g,
                                      const std::vector<VertexId>& terminals,
                                      const TutteCertificate& cert);

/// ok iff w is a trail, alternating, with endpoints two distinct terminals.
std::optional<Violation> verify_alt_trail(const ColoredMultigraph& g,
                                          const std::vector<VertexId>& terminals,
                                          const Walk& w);

/// Exhaustive depth-first search over edge-distinct alternating continuations
/// from each terminal; some alternating trail to a different terminal, or
/// none. Exponential, intended for small instances.
std::optional<Walk> brute_reach(const ColoredMultigraph& g,
                                const std::vector<VertexId>& terminals);

struct VertexClass {
  enum class Kind { Terminal, Unreachable /*N(S)*/, Inner /*I(S,c)*/, TwoColors /*T(S)*/ };
  Kind kind = Kind::Unreachable;
  Color color;  // set for Inner

  bool operator==(const VertexClass& o) const = default;
};

/// Exact evaluation of N(S) / I(S,c) / T(S) by enumerating all alternating
/// trails from S. Throws std::logic_error if some vertex fits none of the
/// classes (impossible when no alternating trail connects distinct terminals).
std::map<VertexId, VertexClass> brute_classify(const ColoredMultigraph& g,
                                               const std::vector<VertexId>& terminals);

}  // namespace altreach

#endif  // ALTREACH_CERTIFICATES_HPP
