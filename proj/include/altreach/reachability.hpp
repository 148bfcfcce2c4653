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

#ifndef ALTREACH_REACHABILITY_HPP
#define ALTREACH_REACHABILITY_HPP

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "altreach/certificates.hpp"
#include "altreach/graph.hpp"

namespace altreach {

/// One block of the forest partition: either a singleton (an inner vertex or
/// a trivial root) or a shrunken blossom. Multi-vertex blocks carry witness
/// trails inside G[members]:
///   - to_base[w], w != base: two alternating w-base trails whose first edges
///     have different colors; for non-root blocks their last edges avoid the
///     predecessor edge's color.
///   - closed_witness (non-root blocks): a positive-length internally
///     alternating base-base trail whose first and last edges avoid the
///     predecessor edge's color.
struct ForestBlock {
  int id = -1;
  std::vector<VertexId> members;  // sorted
  VertexId base = -1;
  std::optional<EdgeId> pred_edge;  // none iff root
  int parent = -1;                  // block id, -1 for roots
  int depth = 0;
  std::map<VertexId, std::pair<Walk, Walk>> to_base;
  std::optional<Walk> closed_witness;

  bool is_root() const { return !pred_edge.has_value(); }
  bool is_singleton() const { return members.size() == 1; }
  /// non-root singletons are inner; everything else is a blossom block
  bool is_inner() const { return is_singleton() && !is_root(); }
};

enum class VertexKind { OutOfForest, Inner, Blossom };

/// Solver state (I, pi, F): the vertex set I currently in the forest, its
/// partition into blocks, and the rooted forest over blocks. Plain value;
/// copyable; safe to share read-only.
class BlossomForestState {
 public:
  BlossomForestState() = default;

  const std::vector<VertexId>& terminals() const { return terminals_; }
  bool in_forest(VertexId v) const { return block_of_[v] >= 0; }
  int block_id_of(VertexId v) const { return block_of_[v]; }
  const ForestBlock& block(int id) const { return blocks_.at(id); }
  const std::map<int, ForestBlock>& blocks() const { return blocks_; }

  VertexKind vertex_kind(VertexId v) const;
  /// color token of an inner vertex's predecessor edge
  const Color& inner_color(const ColoredMultigraph& g, VertexId v) const;
  /// root block id of the component containing block `id`
  int root_of(int id) const;
  /// the terminal at the root of v's component
  VertexId terminal_of(VertexId v) const;

 private:
  friend BlossomForestState init_state(const ColoredMultigraph& g,
                                       const std::vector<VertexId>& terminals);
  friend class ForestOps;

  std::vector<VertexId> terminals_;  // sorted, unique
  std::vector<int> block_of_;        // vertex -> block id, -1 if out of forest
  std::map<int, ForestBlock> blocks_;
  int next_block_id_ = 0;
};

/// Trivial forest: I = S, singleton blocks, no edges.
BlossomForestState init_state(const ColoredMultigraph& g,
                              const std::vector<VertexId>& terminals);

struct Action {
  enum class Kind { Grow, Shrink, Fuse, Breakthrough, Maximal };
  Kind kind = Kind::Maximal;
  EdgeId edge = -1;

  bool operator==(const Action& o) const = default;
};

/// Deterministic action scan: the lowest-id breakthrough edge if any exists,
/// otherwise the lowest-id edge admitting grow, shrink or fuse; Maximal when
/// nothing applies.
Action find_action(const ColoredMultigraph& g, const BlossomForestState& state);

BlossomForestState grow(const ColoredMultigraph& g, const BlossomForestState& state, EdgeId e);
BlossomForestState shrink(const ColoredMultigraph& g, const BlossomForestState& state, EdgeId e);
BlossomForestState fuse(const ColoredMultigraph& g, const BlossomForestState& state, EdgeId e);

/// Two internally alternating u-to-v trails through the forest, built from
/// the stored per-block witnesses: when u sits in a blossom block their
/// first edges have different colors, and their last edges avoid the color
/// of [v]'s predecessor edge. Requires u, v in the forest, [u] a descendant
/// of [v], and v inner or the base of its block.
std::pair<Walk, Walk> extract_trails(const ColoredMultigraph& g,
                                     const BlossomForestState& state,
                                     VertexId u, VertexId v);

struct SolveStats {
  int grows = 0;
  int shrinks = 0;
  int fuses = 0;
  int total() const { return grows + shrinks + fuses; }
};

/// Either an alternating trail connecting two distinct terminals or a Tutte
/// certificate; exactly one present.
struct SolveOutcome {
  std::optional<Walk> trail;
  std::optional<TutteCertificate> certificate;
  SolveStats stats;
};

SolveOutcome solve(const ColoredMultigraph& g, const std::vector<VertexId>& terminals);

/// Like solve, also returning the final state (the trivial state plus the
/// breakthrough edge, or the maximal forest).
struct SolveTrace {
  SolveOutcome outcome;
  BlossomForestState final_state;
};
SolveTrace solve_traced(const ColoredMultigraph& g, const std::vector<VertexId>& terminals);

/// Tutte certificate read off a maximal forest: A = inner vertices, colored
/// by predecessor-edge color, with per-component evidence attached.
TutteCertificate certificate_from_state(const ColoredMultigraph& g,
                                        const BlossomForestState& state);

/// N(S) / I(S,c) / T(S) classification via a maximal forest. Throws
/// std::invalid_argument when distinct terminals are connected.
std::map<VertexId, VertexClass> classify_vertices(const ColoredMultigraph& g,
                                                  const std::vector<VertexId>& terminals);

}  // namespace altreach

#endif  // ALTREACH_REACHABILITY_HPP
