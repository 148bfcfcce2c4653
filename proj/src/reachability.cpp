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

#include "altreach/reachability.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace altreach {

namespace {

/// Concatenation of internally alternating parts; nullopt when a seam between
/// two consecutive edges has equal colors. Zero-length parts are skipped.
std::optional<Walk> alternating_join(const ColoredMultigraph& g,
                                     const std::vector<const Walk*>& parts) {
  const Walk* acc = nullptr;
  Walk out;
  for (const Walk* p : parts) {
    if (acc == nullptr) {
      out = *p;
      acc = &out;
      continue;
    }
    if (out.back() != p->front()) throw std::logic_error("join endpoint mismatch");
    if (out.length() > 0 && p->length() > 0 &&
        g.color(out.edge_ids.back()) == g.color(p->edge_ids.front()))
      return std::nullopt;
    out = concat(out, *p);
  }
  return out;
}

bool first_edge_differs(const ColoredMultigraph& g, const Walk& w, const Color& c) {
  return w.length() == 0 || g.color(w.edge_ids.front()) != c;
}

bool last_edge_differs(const ColoredMultigraph& g, const Walk& w, const Color& c) {
  return w.length() == 0 || g.color(w.edge_ids.back()) != c;
}

}  // namespace

VertexKind BlossomForestState::vertex_kind(VertexId v) const {
  int b = block_of_[v];
  if (b < 0) return VertexKind::OutOfForest;
  const ForestBlock& blk = blocks_.at(b);
  return blk.is_inner() ? VertexKind::Inner : VertexKind::Blossom;
}

const Color& BlossomForestState::inner_color(const ColoredMultigraph& g, VertexId v) const {
  const ForestBlock& blk = blocks_.at(block_of_[v]);
  if (!blk.is_inner()) throw std::invalid_argument("not an inner vertex");
  return g.color(*blk.pred_edge);
}

int BlossomForestState::root_of(int id) const {
  const ForestBlock* b = &blocks_.at(id);
  while (b->parent >= 0) b = &blocks_.at(b->parent);
  return b->id;
}

VertexId BlossomForestState::terminal_of(VertexId v) const {
  int r = root_of(block_of_[v]);
  return blocks_.at(r).base;
}

BlossomForestState init_state(const ColoredMultigraph& g,
                              const std::vector<VertexId>& terminals) {
  if (!g.valid()) throw std::invalid_argument("invalid graph");
  std::set<VertexId> ts(terminals.begin(), terminals.end());
  if (ts.empty()) throw std::invalid_argument("empty terminal set");
  for (VertexId s : ts)
    if (s < 0 || s >= g.vertex_count()) throw std::invalid_argument("terminal out of range");

  BlossomForestState st;
  st.terminals_.assign(ts.begin(), ts.end());
  st.block_of_.assign(g.vertex_count(), -1);
  for (VertexId s : st.terminals_) {
    ForestBlock b;
    b.id = st.next_block_id_++;
    b.members = {s};
    b.base = s;
    st.block_of_[s] = b.id;
    st.blocks_.emplace(b.id, std::move(b));
  }
  return st;
}

// ---------------------------------------------------------------------------
// action predicates

namespace {

bool inner_color_ok(const ColoredMultigraph& g, const BlossomForestState& st,
                    VertexId v, EdgeId e) {
  if (st.vertex_kind(v) != VertexKind::Inner) return true;
  return st.inner_color(g, v) != g.color(e);
}

bool is_forest_edge(const BlossomForestState& st, const ColoredMultigraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  for (VertexId x : {ed.u, ed.v}) {
    if (!st.in_forest(x)) return false;
    const ForestBlock& b = st.block(st.block_id_of(x));
    if (b.pred_edge && *b.pred_edge == e) return true;
  }
  return false;
}

bool breakthrough_applies(const ColoredMultigraph& g, const BlossomForestState& st, EdgeId e) {
  const Edge& ed = g.edge(e);
  if (!st.in_forest(ed.u) || !st.in_forest(ed.v)) return false;
  if (st.root_of(st.block_id_of(ed.u)) == st.root_of(st.block_id_of(ed.v))) return false;
  return inner_color_ok(g, st, ed.u, e) && inner_color_ok(g, st, ed.v, e);
}

bool grow_applies(const ColoredMultigraph& g, const BlossomForestState& st, EdgeId e) {
  const Edge& ed = g.edge(e);
  bool iu = st.in_forest(ed.u), iv = st.in_forest(ed.v);
  if (iu == iv) return false;
  VertexId in = iu ? ed.u : ed.v;
  return inner_color_ok(g, st, in, e);
}

bool shrink_applies(const ColoredMultigraph& g, const BlossomForestState& st, EdgeId e) {
  const Edge& ed = g.edge(e);
  if (!st.in_forest(ed.u) || !st.in_forest(ed.v)) return false;
  int bu = st.block_id_of(ed.u), bv = st.block_id_of(ed.v);
  if (bu == bv) return false;
  if (st.root_of(bu) != st.root_of(bv)) return false;
  if (is_forest_edge(st, g, e)) return false;
  return inner_color_ok(g, st, ed.u, e) && inner_color_ok(g, st, ed.v, e);
}

bool fuse_applies(const ColoredMultigraph& g, const BlossomForestState& st, EdgeId e) {
  const Edge& ed = g.edge(e);
  if (!st.in_forest(ed.u) || !st.in_forest(ed.v)) return false;
  if (!is_forest_edge(st, g, e)) return false;
  return st.vertex_kind(ed.u) == VertexKind::Blossom &&
         st.vertex_kind(ed.v) == VertexKind::Blossom;
}

}  // namespace

Action find_action(const ColoredMultigraph& g, const BlossomForestState& state) {
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (breakthrough_applies(g, state, e)) return {Action::Kind::Breakthrough, e};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (grow_applies(g, state, e)) return {Action::Kind::Grow, e};
    if (shrink_applies(g, state, e)) return {Action::Kind::Shrink, e};
    if (fuse_applies(g, state, e)) return {Action::Kind::Fuse, e};
  }
  return {Action::Kind::Maximal, -1};
}

// ---------------------------------------------------------------------------
// trail extraction (the per-block witness trails stitched up the forest)

namespace {

// The target-relative last-edge constraint: trails to an inner target or a
// non-root blossom base must not end in the color of the target block's
// predecessor edge. The zero-length continuation at the target can violate
// it (the trail then ends with the child edge itself), in which case the
// closed-witness continuation is the valid choice.
std::pair<Walk, Walk> extract_impl(const ColoredMultigraph& g, const BlossomForestState& st,
                                   VertexId u, VertexId target, int target_block,
                                   const std::optional<Color>& forbid_last);

std::pair<Walk, Walk> extract_above(const ColoredMultigraph& g, const BlossomForestState& st,
                                    const ForestBlock& bu, VertexId u, VertexId target,
                                    int target_block, const std::optional<Color>& forbid_last) {
  // climb via the predecessor edge of [u]
  EdgeId e = *bu.pred_edge;
  const Edge& ed = g.edge(e);
  bool u_side_is_u = st.block_id_of(ed.u) == bu.id;
  VertexId x = u_side_is_u ? ed.u : ed.v;
  VertexId y = u_side_is_u ? ed.v : ed.u;
  auto [p1, p2] = extract_impl(g, st, y, target, target_block, forbid_last);
  Walk cross{{x, y}, {e}};

  auto first_join = [&](const std::vector<const Walk*>& prefix) -> Walk {
    for (const Walk* p : {&p1, &p2}) {
      std::vector<const Walk*> parts = prefix;
      parts.push_back(p);
      auto w = alternating_join(g, parts);
      if (!w) continue;
      if (forbid_last && !last_edge_differs(g, *w, *forbid_last)) continue;
      return *w;
    }
    throw std::logic_error("trail extraction: no alternating continuation");
  };

  if (bu.is_inner()) {
    Walk t = first_join({&cross});
    return {t, t};
  }
  if (u != bu.base) {
    const auto& [w1, w2] = bu.to_base.at(u);
    return {first_join({&w1, &cross}), first_join({&w2, &cross})};
  }
  // u is the base of a non-root blossom block
  return {first_join({&cross}), first_join({&*bu.closed_witness, &cross})};
}

std::pair<Walk, Walk> extract_impl(const ColoredMultigraph& g, const BlossomForestState& st,
                                   VertexId u, VertexId target, int target_block,
                                   const std::optional<Color>& forbid_last) {
  const ForestBlock& bu = st.block(st.block_id_of(u));
  if (bu.id != target_block)
    return extract_above(g, st, bu, u, target, target_block, forbid_last);
  if (bu.is_inner()) return {Walk::at(u), Walk::at(u)};  // u == target
  if (u != bu.base) return bu.to_base.at(u);
  if (bu.is_root()) return {Walk::at(u), Walk::at(u)};
  return {Walk::at(u), *bu.closed_witness};
}

std::pair<Walk, Walk> extract_to(const ColoredMultigraph& g, const BlossomForestState& st,
                                 VertexId u, VertexId target, int target_block) {
  const ForestBlock& tb = st.block(target_block);
  std::optional<Color> forbid;
  if (tb.pred_edge) forbid = g.color(*tb.pred_edge);
  return extract_impl(g, st, u, target, target_block, forbid);
}

}  // namespace

std::pair<Walk, Walk> extract_trails(const ColoredMultigraph& g,
                                     const BlossomForestState& state,
                                     VertexId u, VertexId v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("vertex out of range");
  if (!state.in_forest(u) || !state.in_forest(v))
    throw std::invalid_argument("vertex out of forest");
  int tb = state.block_id_of(v);
  const ForestBlock& vb = state.block(tb);
  if (!vb.is_inner() && v != vb.base)
    throw std::invalid_argument("target is neither inner nor the base of its block");
  // [u] must be a descendant of [v]
  int b = state.block_id_of(u);
  while (b != tb && b >= 0) b = state.block(b).parent;
  if (b != tb) throw std::invalid_argument("[u] is not a descendant of [v]");
  return extract_to(g, state, u, v, tb);
}

// ---------------------------------------------------------------------------
// mutations

class ForestOps {
 public:
  static void grow(const ColoredMultigraph& g, BlossomForestState& st, EdgeId e) {
    if (!grow_applies(g, st, e)) throw std::invalid_argument("grow precondition violated");
    const Edge& ed = g.edge(e);
    VertexId in = st.in_forest(ed.u) ? ed.u : ed.v;
    VertexId out = st.in_forest(ed.u) ? ed.v : ed.u;
    ForestBlock b;
    b.id = st.next_block_id_++;
    b.members = {out};
    b.base = out;
    b.pred_edge = e;
    b.parent = st.block_id_of(in);
    b.depth = st.block(b.parent).depth + 1;
    st.block_of_[out] = b.id;
    st.blocks_.emplace(b.id, std::move(b));
  }

  static void shrink(const ColoredMultigraph& g, BlossomForestState& st, EdgeId e) {
    if (!shrink_applies(g, st, e)) throw std::invalid_argument("shrink precondition violated");
    const Edge& ed = g.edge(e);

    // fundamental cycle: blocks from [u] and [v] to the common ancestor
    std::vector<int> path_u{st.block_id_of(ed.u)};
    std::vector<int> path_v{st.block_id_of(ed.v)};
    while (st.block(path_u.back()).depth > st.block(path_v.back()).depth)
      path_u.push_back(st.block(path_u.back()).parent);
    while (st.block(path_v.back()).depth > st.block(path_u.back()).depth)
      path_v.push_back(st.block(path_v.back()).parent);
    while (path_u.back() != path_v.back()) {
      path_u.push_back(st.block(path_u.back()).parent);
      path_v.push_back(st.block(path_v.back()).parent);
    }
    const int ancestor = path_u.back();
    path_v.pop_back();  // keep the ancestor only in path_u

    const ForestBlock& anc = st.block(ancestor);
    const VertexId base_star = anc.base;
    std::optional<Color> c_star;
    if (anc.pred_edge) c_star = g.color(*anc.pred_edge);

    std::set<int> merged(path_u.begin(), path_u.end());
    merged.insert(path_v.begin(), path_v.end());

    // witness trails, computed against the pre-merge forest
    std::map<VertexId, std::pair<Walk, Walk>> to_base;
    std::optional<Walk> closed;
    auto side_anchor = [&](int block_id) -> std::pair<VertexId, VertexId> {
      // (anchor, other): anchor is e's endpoint whose path contains block_id
      for (int b : path_u)
        if (b == block_id) return {ed.u, ed.v};
      return {ed.v, ed.u};
    };

    for (int bid : merged) {
      const ForestBlock& blk = st.block(bid);
      if (bid == ancestor) {
        for (const auto& [w, pair] : blk.to_base) to_base.emplace(w, pair);
        continue;
      }
      for (VertexId w : blk.members) {
        if (blk.is_inner()) {
          Walk t1 = extract_to(g, st, w, base_star, ancestor).first;
          auto [anchor, other] = side_anchor(bid);
          auto [a1, a2] = extract_to(g, st, anchor, w, bid);
          auto [o1, o2] = extract_to(g, st, other, base_star, ancestor);
          Walk cross{{anchor, other}, {e}};
          std::optional<Walk> t2;
          for (const Walk* ap : {&a1, &a2}) {
            Walk rev = ap->reversed();
            for (const Walk* op : {&o1, &o2}) {
              auto cand = alternating_join(g, {&rev, &cross, op});
              if (!cand) continue;
              if (!first_edge_differs(g, *cand, g.color(t1.edge_ids.front()))) continue;
              if (c_star && !last_edge_differs(g, *cand, *c_star)) continue;
              t2 = *cand;
              break;
            }
            if (t2) break;
          }
          if (!t2) throw std::logic_error("shrink: no cross witness trail");
          to_base.emplace(w, std::make_pair(t1, *t2));
        } else {
          auto pair = extract_to(g, st, w, base_star, ancestor);
          to_base.emplace(w, pair);
        }
      }
    }

    if (c_star) {
      if (!anc.is_singleton()) {
        closed = anc.closed_witness;  // still a valid closed witness for the union
      } else {
        auto [u1, u2] = extract_to(g, st, ed.u, base_star, ancestor);
        auto [v1, v2] = extract_to(g, st, ed.v, base_star, ancestor);
        Walk cross{{ed.u, ed.v}, {e}};
        for (const Walk* up : {&u1, &u2}) {
          Walk rev = up->reversed();
          for (const Walk* vp : {&v1, &v2}) {
            auto cand = alternating_join(g, {&rev, &cross, vp});
            if (!cand) continue;
            if (!first_edge_differs(g, *cand, *c_star)) continue;
            if (!last_edge_differs(g, *cand, *c_star)) continue;
            closed = *cand;
            break;
          }
          if (closed) break;
        }
        if (!closed) throw std::logic_error("shrink: no closed witness trail");
      }
    }

    validate_witnesses(g, base_star, c_star, to_base, closed);
    merge_blocks(st, merged, ancestor, base_star, std::move(to_base), std::move(closed));
  }

  static void fuse(const ColoredMultigraph& g, BlossomForestState& st, EdgeId e) {
    if (!fuse_applies(g, st, e)) throw std::invalid_argument("fuse precondition violated");
    const Edge& ed = g.edge(e);
    int bu = st.block_id_of(ed.u), bv = st.block_id_of(ed.v);
    int child = st.block(bu).pred_edge && *st.block(bu).pred_edge == e ? bu : bv;
    int parent = child == bu ? bv : bu;
    const ForestBlock& pb = st.block(parent);
    const VertexId base_star = pb.base;

    std::map<VertexId, std::pair<Walk, Walk>> to_base = pb.to_base;
    std::optional<Walk> closed = pb.is_root() ? std::nullopt : pb.closed_witness;
    for (VertexId w : st.block(child).members) {
      auto pair = extract_to(g, st, w, base_star, parent);
      to_base.emplace(w, pair);
    }
    std::optional<Color> c_star;
    if (pb.pred_edge) c_star = g.color(*pb.pred_edge);
    validate_witnesses(g, base_star, c_star, to_base, closed);
    merge_blocks(st, {child, parent}, parent, base_star, std::move(to_base), std::move(closed));
  }

 private:
  // invariant guard for freshly merged blocks; cheap relative to the merge
  static void validate_witnesses(const ColoredMultigraph& g, VertexId base_star,
                                 const std::optional<Color>& c_star,
                                 const std::map<VertexId, std::pair<Walk, Walk>>& to_base,
                                 const std::optional<Walk>& closed) {
    for (const auto& [w, pair] : to_base) {
      const auto& [t1, t2] = pair;
      if (t1.front() != w || t1.back() != base_star || t2.front() != w || t2.back() != base_star ||
          t1.length() == 0 || t2.length() == 0 ||
          g.color(t1.edge_ids.front()) == g.color(t2.edge_ids.front()))
        throw std::logic_error("merged block: bad to-base witness pair");
      if (c_star && (!last_edge_differs(g, t1, *c_star) || !last_edge_differs(g, t2, *c_star)))
        throw std::logic_error("merged block: witness last-edge color clash");
    }
    if (c_star) {
      if (!closed || closed->length() == 0 || closed->front() != base_star ||
          closed->back() != base_star || !first_edge_differs(g, *closed, *c_star) ||
          !last_edge_differs(g, *closed, *c_star))
        throw std::logic_error("merged block: bad closed witness");
    }
  }

  static void merge_blocks(BlossomForestState& st, const std::set<int>& merged, int ancestor,
                           VertexId base_star, std::map<VertexId, std::pair<Walk, Walk>> to_base,
                           std::optional<Walk> closed) {
    const ForestBlock& anc = st.blocks_.at(ancestor);
    ForestBlock nb;
    nb.id = st.next_block_id_++;
    nb.base = base_star;
    nb.pred_edge = anc.pred_edge;
    nb.parent = anc.parent;
    nb.depth = anc.depth;
    nb.to_base = std::move(to_base);
    nb.closed_witness = std::move(closed);
    for (int bid : merged) {
      const ForestBlock& blk = st.blocks_.at(bid);
      nb.members.insert(nb.members.end(), blk.members.begin(), blk.members.end());
    }
    std::sort(nb.members.begin(), nb.members.end());
    for (VertexId w : nb.members) st.block_of_[w] = nb.id;
    for (int bid : merged) st.blocks_.erase(bid);
    for (auto& [id, blk] : st.blocks_)
      if (merged.count(blk.parent)) blk.parent = nb.id;
    st.blocks_.emplace(nb.id, std::move(nb));
    recompute_depths(st);
  }

  static void recompute_depths(BlossomForestState& st) {
    std::map<int, std::vector<int>> children;
    std::vector<int> roots;
    for (const auto& [id, blk] : st.blocks_) {
      if (blk.parent < 0)
        roots.push_back(id);
      else
        children[blk.parent].push_back(id);
    }
    for (int r : roots) {
      std::vector<int> stack{r};
      st.blocks_.at(r).depth = 0;
      while (!stack.empty()) {
        int b = stack.back();
        stack.pop_back();
        auto it = children.find(b);
        if (it == children.end()) continue;
        for (int c : it->second) {
          st.blocks_.at(c).depth = st.blocks_.at(b).depth + 1;
          stack.push_back(c);
        }
      }
    }
  }
};

BlossomForestState grow(const ColoredMultigraph& g, const BlossomForestState& state, EdgeId e) {
  BlossomForestState out = state;
  ForestOps::grow(g, out, e);
  return out;
}

BlossomForestState shrink(const ColoredMultigraph& g, const BlossomForestState& state, EdgeId e) {
  BlossomForestState out = state;
  ForestOps::shrink(g, out, e);
  return out;
}

BlossomForestState fuse(const ColoredMultigraph& g, const BlossomForestState& state, EdgeId e) {
  BlossomForestState out = state;
  ForestOps::fuse(g, out, e);
  return out;
}

// ---------------------------------------------------------------------------
// solve

TutteCertificate certificate_from_state(const ColoredMultigraph& g,
                                        const BlossomForestState& state) {
  TutteCertificate cert;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (state.vertex_kind(v) == VertexKind::Inner)
      cert.assignment.emplace_back(v, state.inner_color(g, v));

  std::vector<VertexId> a;
  for (const auto& [v, c] : cert.assignment) a.push_back(v);
  std::set<VertexId> terms(state.terminals().begin(), state.terminals().end());
  for (const auto& comp : components(g, a)) {
    TutteCertificate::ComponentEvidence ev;
    ev.component = comp;
    std::set<VertexId> in_comp(comp.begin(), comp.end());
    for (VertexId v : comp)
      if (terms.count(v)) ev.terminal = v;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      bool touches = (in_comp.count(ed.u) && cert.in_a(ed.v)) ||
                     (in_comp.count(ed.v) && cert.in_a(ed.u));
      if (touches && edge_mismatched(g, cert, e)) ev.mismatched.push_back(e);
    }
    cert.evidence.push_back(std::move(ev));
  }
  return cert;
}

SolveTrace solve_traced(const ColoredMultigraph& g, const std::vector<VertexId>& terminals) {
  BlossomForestState st = init_state(g, terminals);
  SolveStats stats;
  for (;;) {
    Action a = find_action(g, st);
    switch (a.kind) {
      case Action::Kind::Grow:
        ForestOps::grow(g, st, a.edge);
        ++stats.grows;
        break;
      case Action::Kind::Shrink:
        ForestOps::shrink(g, st, a.edge);
        ++stats.shrinks;
        break;
      case Action::Kind::Fuse:
        ForestOps::fuse(g, st, a.edge);
        ++stats.fuses;
        break;
      case Action::Kind::Breakthrough: {
        const Edge& ed = g.edge(a.edge);
        VertexId su = st.terminal_of(ed.u);
        VertexId tv = st.terminal_of(ed.v);
        auto [u1, u2] = extract_trails(g, st, ed.u, su);
        auto [v1, v2] = extract_trails(g, st, ed.v, tv);
        const Walk* left = first_edge_differs(g, u1, ed.color) ? &u1 : &u2;
        const Walk* right = first_edge_differs(g, v1, ed.color) ? &v1 : &v2;
        Walk rev = left->reversed();
        Walk cross{{ed.u, ed.v}, {a.edge}};
        auto trail = alternating_join(g, {&rev, &cross, right});
        if (!trail || verify_alt_trail(g, st.terminals(), *trail))
          throw std::logic_error("breakthrough produced an invalid trail");
        return {SolveOutcome{*trail, std::nullopt, stats}, std::move(st)};
      }
      case Action::Kind::Maximal:
        return {SolveOutcome{std::nullopt, certificate_from_state(g, st), stats}, std::move(st)};
    }
  }
}

SolveOutcome solve(const ColoredMultigraph& g, const std::vector<VertexId>& terminals) {
  return solve_traced(g, terminals).outcome;
}

std::map<VertexId, VertexClass> classify_vertices(const ColoredMultigraph& g,
                                                  const std::vector<VertexId>& terminals) {
  SolveTrace tr = solve_traced(g, terminals);
  if (tr.outcome.trail)
    throw std::invalid_argument("distinct terminals are connected by an alternating trail");
  const BlossomForestState& st = tr.final_state;
  std::set<VertexId> terms(st.terminals().begin(), st.terminals().end());
  std::map<VertexId, VertexClass> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (terms.count(v)) {
      out[v] = {VertexClass::Kind::Terminal, {}};
      continue;
    }
    switch (st.vertex_kind(v)) {
      case VertexKind::OutOfForest:
        out[v] = {VertexClass::Kind::Unreachable, {}};
        break;
      case VertexKind::Inner:
        out[v] = {VertexClass::Kind::Inner, st.inner_color(g, v)};
        break;
      case VertexKind::Blossom:
        out[v] = {VertexClass::Kind::TwoColors, {}};
        break;
    }
  }
  return out;
}

}  // namespace altreach
