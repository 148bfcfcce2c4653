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

#ifndef ALTREACH_GRAPH_HPP
#define ALTREACH_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "altreach/rational.hpp"

namespace altreach {

using VertexId = int;
using EdgeId = int;
using Color = std::string;  // opaque token

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;
  Color color;
};

/// Multigraph with colored edges. Parallel edges are allowed and are
/// distinguished solely by edge id; loops are forbidden. Edge ids must be
/// dense 0..m-1. Immutable after construction.
class ColoredMultigraph {
 public:
  ColoredMultigraph() = default;
  ColoredMultigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Edges in the order given at construction (not necessarily by id).
  const std::vector<Edge>& raw_edges() const { return edges_; }

  /// True when all type invariants hold and indexed access is available.
  bool valid() const { return valid_; }

  /// Requires valid(); edges_by_id[id].id == id.
  const Edge& edge(EdgeId id) const;
  /// Requires valid(); incident edge ids of v, ascending.
  const std::vector<EdgeId>& incident(VertexId v) const;
  VertexId other_end(EdgeId id, VertexId from) const;

  const Color& color(EdgeId id) const { return edge(id).color; }

  /// Distinct colors used by edges, sorted.
  std::vector<Color> distinct_colors() const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;        // construction order
  std::vector<int> index_by_id_;   // id -> position in edges_
  std::vector<std::vector<EdgeId>> adjacency_;
  bool valid_ = false;
};

struct GraphViolation {
  enum class Kind { LoopEdge, DuplicateEdgeId, EdgeIdOutOfRange, VertexOutOfRange, NegativeVertexCount };
  Kind kind;
  EdgeId edge = -1;  // offending edge id as written (first offender in input order)
  std::string describe() const;
};

/// Succeeds (nullopt) iff all ColoredMultigraph invariants hold.
std::optional<GraphViolation> validate_graph(const ColoredMultigraph& g);

/// Alternating vertex-edge sequence v0,e1,v1,...,em,vm; meaningful only
/// relative to one host graph.
struct Walk {
  std::vector<VertexId> vertices;  // length m+1 (never empty)
  std::vector<EdgeId> edge_ids;    // length m

  static Walk at(VertexId v) { return Walk{{v}, {}}; }

  int length() const { return static_cast<int>(edge_ids.size()); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }

  Walk reversed() const;

  bool operator==(const Walk& o) const = default;
};

/// u-w walk from a u-v walk followed by a v-w walk. Requires a.back() == b.front().
Walk concat(const Walk& a, const Walk& b);

/// Closed walk rotated to start at position k (0-based). Requires w closed.
Walk rotate_closed(const Walk& w, int k);

/// True when every edge joins the stated consecutive vertices in g.
bool walk_consistent(const ColoredMultigraph& g, const Walk& w);

struct WalkClass {
  bool is_trail = false;
  bool is_closed = false;
  bool is_path = false;
  bool is_cycle = false;
  bool is_internally_alternating = false;
  bool is_alternating = false;
  bool is_cat = false;
};

/// Classifies w per the walk/trail/path/cycle and alternation definitions.
/// The zero-length walk is a closed trail, a path, a cycle and alternating,
/// but never a CAT. Throws std::invalid_argument on an inconsistent walk.
WalkClass classify_walk(const ColoredMultigraph& g, const Walk& w);

/// Nonnegative rational weight per edge id, dense over the host graph's
/// edge set (missing entries mean 0).
struct EdgeVector {
  std::vector<Rat> weights;

  explicit EdgeVector(int edge_count = 0) : weights(edge_count, Rat(0)) {}
  Rat& operator[](EdgeId e) { return weights[e]; }
  const Rat& operator[](EdgeId e) const { return weights[e]; }
  int size() const { return static_cast<int>(weights.size()); }
  bool operator==(const EdgeVector& o) const = default;
};

/// Characteristic vector: weight of each edge = number of occurrences in w.
EdgeVector chi(const ColoredMultigraph& g, const Walk& w);

/// Connected components of the subgraph induced on V - removed.
/// Each component is sorted; components ordered by smallest vertex.
std::vector<std::vector<VertexId>> components(const ColoredMultigraph& g,
                                              const std::vector<VertexId>& removed = {});

/// Per-vertex component index matching components(); removed vertices get -1.
std::vector<int> component_ids(const ColoredMultigraph& g,
                               const std::vector<VertexId>& removed = {});

/// Edge ids whose removal increases the component count, ascending.
/// A parallel pair is never a bridge.
std::vector<EdgeId> bridges(const ColoredMultigraph& g);

/// Subgraph on a vertex subset / edge subset, with renumbered dense ids.
struct Subgraph {
  ColoredMultigraph graph;
  std::vector<VertexId> vertex_to_parent;        // new vertex -> old vertex
  std::vector<int> vertex_from_parent;           // old vertex -> new vertex or -1
  std::vector<EdgeId> edge_to_parent;            // new edge -> old edge
  std::vector<int> edge_from_parent;             // old edge -> new edge or -1
};

/// Induced subgraph on `keep` (all edges with both ends kept).
Subgraph induced_subgraph(const ColoredMultigraph& g, const std::vector<VertexId>& keep);

/// Same vertex set, only the listed edges (renumbered dense).
Subgraph edge_subgraph(const ColoredMultigraph& g, const std::vector<EdgeId>& keep);

/// Walk in a subgraph mapped back to the parent graph's ids.
Walk map_walk_to_parent(const Subgraph& sg, const Walk& w);

}  // namespace altreach

#endif  // ALTREACH_GRAPH_HPP
