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

#include "support/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace altreach::testsupport {

ColoredMultigraph mk(int n, const std::vector<std::tuple<int, int, const char*>>& edges) {
  std::vector<Edge> es;
  for (const auto& [u, v, c] : edges)
    es.push_back(Edge{static_cast<EdgeId>(es.size()), u, v, c});
  return ColoredMultigraph(n, std::move(es));
}

WalkClass naive_classify_walk(const ColoredMultigraph& g, const Walk& w) {
  const int m = w.length();
  WalkClass c;
  c.is_closed = w.vertices.front() == w.vertices.back();
  c.is_trail = true;
  for (int i = 0; i < m && c.is_trail; ++i)
    for (int j = i + 1; j < m; ++j)
      if (w.edge_ids[i] == w.edge_ids[j]) {
        c.is_trail = false;
        break;
      }
  bool vertices_distinct = true;
  for (size_t i = 0; i < w.vertices.size() && vertices_distinct; ++i)
    for (size_t j = i + 1; j < w.vertices.size(); ++j)
      if (w.vertices[i] == w.vertices[j]) {
        vertices_distinct = false;
        break;
      }
  c.is_path = c.is_trail && vertices_distinct;
  bool head_distinct = true;
  for (int i = 0; i + 1 < static_cast<int>(w.vertices.size()) && head_distinct; ++i)
    for (int j = i + 1; j + 1 < static_cast<int>(w.vertices.size()); ++j)
      if (w.vertices[i] == w.vertices[j]) {
        head_distinct = false;
        break;
      }
  c.is_cycle = c.is_closed && c.is_trail && head_distinct;
  c.is_internally_alternating = true;
  for (int i = 0; i + 1 < m; ++i)
    if (g.color(w.edge_ids[i]) == g.color(w.edge_ids[i + 1]))
      c.is_internally_alternating = false;
  c.is_alternating =
      c.is_internally_alternating &&
      (!c.is_closed || m == 0 || g.color(w.edge_ids[m - 1]) != g.color(w.edge_ids[0]));
  c.is_cat = c.is_closed && c.is_trail && c.is_alternating && m >= 2;
  return c;
}

std::vector<EdgeId> brute_bridges(const ColoredMultigraph& g) {
  auto count_components = [](const ColoredMultigraph& h) {
    return static_cast<int>(components(h).size());
  };
  int base = count_components(g);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::vector<EdgeId> keep;
    for (EdgeId h = 0; h < g.edge_count(); ++h)
      if (h != e) keep.push_back(h);
    if (count_components(edge_subgraph(g, keep).graph) > base) out.push_back(e);
  }
  return out;
}

namespace {

const char* kColorNames[3] = {"R", "B", "G"};

struct PairState {
  std::vector<int> colors;  // color indices of the parallel edges, ascending
};

// all color multisets of size 0..max_parallel over num_colors colors
std::vector<PairState> pair_states(int num_colors, int max_parallel) {
  std::vector<PairState> out{{{}}};
  std::vector<PairState> frontier{{{}}};
  for (int round = 0; round < max_parallel; ++round) {
    std::vector<PairState> next;
    for (const PairState& s : frontier) {
      int lo = s.colors.empty() ? 0 : s.colors.back();
      for (int c = lo; c < num_colors; ++c) {
        PairState t = s;
        t.colors.push_back(c);
        next.push_back(t);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

void enumerate_graphs(int n, int max_edges, int num_colors, int max_parallel,
                      const std::function<void(const ColoredMultigraph&)>& visit) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<PairState> states = pair_states(num_colors, max_parallel);

  std::vector<int> choice(pairs.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t idx, int used) {
    if (idx == pairs.size()) {
      std::vector<Edge> es;
      for (size_t i = 0; i < pairs.size(); ++i)
        for (int c : states[choice[i]].colors)
          es.push_back(Edge{static_cast<EdgeId>(es.size()), pairs[i].first, pairs[i].second,
                            kColorNames[c]});
      visit(ColoredMultigraph(n, std::move(es)));
      return;
    }
    for (size_t s = 0; s < states.size(); ++s) {
      int sz = static_cast<int>(states[s].colors.size());
      if (used + sz > max_edges) continue;
      choice[idx] = static_cast<int>(s);
      rec(idx + 1, used + sz);
    }
  };
  rec(0, 0);
}

std::vector<std::vector<VertexId>> terminal_subsets(int n, int k) {
  std::vector<std::vector<VertexId>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) > k) continue;
    std::vector<VertexId> s;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(v);
    out.push_back(std::move(s));
  }
  return out;
}

ColoredMultigraph random_graph(std::mt19937_64& rng, const RandomGraphParams& p) {
  std::uniform_int_distribution<int> nv(p.min_vertices, p.max_vertices);
  int n = nv(rng);
  std::uniform_int_distribution<int> ne(0, p.max_edges);
  int m = n >= 2 ? ne(rng) : 0;
  std::map<std::pair<int, int>, int> parallel;
  std::vector<Edge> es;
  std::uniform_int_distribution<int> pv(0, n - 1);
  std::uniform_int_distribution<int> pc(0, p.num_colors - 1);
  int guard = 20 * m + 20;
  while (static_cast<int>(es.size()) < m && guard-- > 0) {
    int u = pv(rng), v = pv(rng);
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (parallel[{key.first, key.second}] >= p.max_parallel) continue;
    ++parallel[{key.first, key.second}];
    es.push_back(Edge{static_cast<EdgeId>(es.size()), u, v, kColorNames[pc(rng)]});
  }
  return ColoredMultigraph(n, std::move(es));
}

std::vector<VertexId> random_terminals(std::mt19937_64& rng, int n, int max_count) {
  std::uniform_int_distribution<int> nc(1, std::max(1, std::min(n, max_count)));
  int k = nc(rng);
  std::set<VertexId> s;
  std::uniform_int_distribution<int> pv(0, n - 1);
  while (static_cast<int>(s.size()) < k) s.insert(pv(rng));
  return {s.begin(), s.end()};
}

namespace {

void cat_dfs(const ColoredMultigraph& g, EdgeId anchor, Walk& walk, std::vector<bool>& used,
             std::vector<Walk>& out) {
  VertexId here = walk.back();
  if (here == walk.front() && walk.length() >= 2 &&
      g.color(walk.edge_ids.back()) != g.color(walk.edge_ids.front()))
    out.push_back(walk);
  for (EdgeId e : g.incident(here)) {
    if (e <= anchor || used[e]) continue;
    if (g.color(e) == g.color(walk.edge_ids.back())) continue;
    used[e] = true;
    walk.edge_ids.push_back(e);
    walk.vertices.push_back(g.other_end(e, here));
    cat_dfs(g, anchor, walk, used, out);
    walk.edge_ids.pop_back();
    walk.vertices.pop_back();
    used[e] = false;
  }
}

}  // namespace

std::vector<Walk> all_cats(const ColoredMultigraph& g) {
  std::vector<Walk> out;
  std::vector<bool> used(g.edge_count(), false);
  for (EdgeId anchor = 0; anchor < g.edge_count(); ++anchor) {
    const Edge& ed = g.edge(anchor);
    Walk walk{{ed.u, ed.v}, {anchor}};
    used[anchor] = true;
    cat_dfs(g, anchor, walk, used, out);
    used[anchor] = false;
  }
  return out;
}

std::vector<EdgeVector> sample_caw_vectors(std::mt19937_64& rng, const ColoredMultigraph& g,
                                           int attempts, int length_cap) {
  std::vector<EdgeVector> out;
  if (g.vertex_count() == 0 || g.edge_count() == 0) return out;
  std::uniform_int_distribution<int> pv(0, g.vertex_count() - 1);
  for (int a = 0; a < attempts; ++a) {
    VertexId start = pv(rng);
    Walk walk = Walk::at(start);
    std::vector<int> mult(g.edge_count(), 0);
    for (int step = 0; step < length_cap; ++step) {
      VertexId here = walk.back();
      std::vector<EdgeId> options;
      for (EdgeId e : g.incident(here)) {
        if (mult[e] >= 2) continue;
        if (walk.length() > 0 && g.color(e) == g.color(walk.edge_ids.back())) continue;
        options.push_back(e);
      }
      if (options.empty()) break;
      std::uniform_int_distribution<size_t> pick(0, options.size() - 1);
      EdgeId e = options[pick(rng)];
      ++mult[e];
      walk.edge_ids.push_back(e);
      walk.vertices.push_back(g.other_end(e, here));
      if (walk.back() == start && walk.length() >= 2 &&
          g.color(walk.edge_ids.back()) != g.color(walk.edge_ids.front())) {
        out.push_back(chi(g, walk));
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// forest validity

namespace {

// all alternating trails from `from` inside the induced block subgraph;
// reports the set of (first, last) edge-color pairs of trails ending at `to`
void block_trail_dfs(const ColoredMultigraph& g, const std::set<VertexId>& block,
                     VertexId to, Walk& walk, std::vector<bool>& used,
                     std::set<std::pair<Color, Color>>& endings) {
  VertexId here = walk.back();
  if (here == to && walk.length() >= 1)
    endings.insert({g.color(walk.edge_ids.front()), g.color(walk.edge_ids.back())});
  for (EdgeId e : g.incident(here)) {
    if (used[e]) continue;
    VertexId nxt = g.other_end(e, here);
    if (!block.count(nxt)) continue;
    if (walk.length() > 0 && g.color(e) == g.color(walk.edge_ids.back())) continue;
    used[e] = true;
    walk.edge_ids.push_back(e);
    walk.vertices.push_back(nxt);
    block_trail_dfs(g, block, to, walk, used, endings);
    walk.edge_ids.pop_back();
    walk.vertices.pop_back();
    used[e] = false;
  }
}

std::set<std::pair<Color, Color>> block_trail_endings(const ColoredMultigraph& g,
                                                      const std::vector<VertexId>& members,
                                                      VertexId from, VertexId to) {
  std::set<VertexId> block(members.begin(), members.end());
  std::vector<bool> used(g.edge_count(), false);
  Walk walk = Walk::at(from);
  std::set<std::pair<Color, Color>> endings;
  block_trail_dfs(g, block, to, walk, used, endings);
  return endings;
}

bool is_blossom_by_definition(const ColoredMultigraph& g, const std::vector<VertexId>& members,
                              VertexId base, const std::optional<Color>& avoid_last) {
  for (VertexId w : members) {
    if (w == base) continue;
    auto endings = block_trail_endings(g, members, w, base);
    std::set<Color> firsts;
    for (const auto& [f, l] : endings)
      if (!avoid_last || l != *avoid_last) firsts.insert(f);
    if (firsts.size() < 2) return false;
  }
  return true;
}

bool has_closed_witness_by_definition(const ColoredMultigraph& g,
                                      const std::vector<VertexId>& members, VertexId base,
                                      const Color& avoid) {
  auto endings = block_trail_endings(g, members, base, base);
  for (const auto& [f, l] : endings)
    if (f != avoid && l != avoid) return true;
  return false;
}

bool walk_inside(const ColoredMultigraph& g, const Walk& w,
                 const std::vector<VertexId>& members) {
  std::set<VertexId> block(members.begin(), members.end());
  for (VertexId v : w.vertices)
    if (!block.count(v)) return false;
  return walk_consistent(g, w);
}

}  // namespace

std::optional<std::string> check_forest(const ColoredMultigraph& g,
                                        const std::vector<VertexId>& terminals,
                                        const BlossomForestState& st) {
  auto fail = [](const std::string& s) { return std::optional<std::string>(s); };
  std::set<VertexId> terms(terminals.begin(), terminals.end());

  // partition consistency
  std::set<VertexId> covered;
  for (const auto& [id, blk] : st.blocks()) {
    if (blk.members.empty()) return fail("empty block");
    for (VertexId v : blk.members) {
      if (!covered.insert(v).second) return fail("vertex in two blocks");
      if (st.block_id_of(v) != id) return fail("block_of inconsistent");
    }
  }
  for (VertexId s : terms)
    if (!covered.count(s)) return fail("terminal out of forest");

  // roots <-> terminals
  std::set<int> root_ids;
  for (const auto& [id, blk] : st.blocks())
    if (blk.is_root()) root_ids.insert(id);
  if (root_ids.size() != terms.size()) return fail("#roots != #terminals");
  for (VertexId s : terms) {
    const ForestBlock& blk = st.block(st.block_id_of(s));
    if (!blk.is_root()) return fail("terminal block is not a root");
    if (blk.base != s) return fail("root base is not its terminal");
  }

  for (const auto& [id, blk] : st.blocks()) {
    // structural: predecessor edge endpoints and depth
    if (!blk.is_root()) {
      if (st.blocks().find(blk.parent) == st.blocks().end()) return fail("dangling parent");
      const ForestBlock& par = st.block(blk.parent);
      if (blk.depth != par.depth + 1) return fail("depth mismatch");
      const Edge& pe = g.edge(*blk.pred_edge);
      bool in_self_u = st.block_id_of(pe.u) == id;
      bool in_self_v = st.block_id_of(pe.v) == id;
      VertexId inside = in_self_u ? pe.u : pe.v;
      VertexId outside = in_self_u ? pe.v : pe.u;
      if (in_self_u == in_self_v) return fail("pred edge does not leave the block");
      if (st.block_id_of(outside) != blk.parent) return fail("pred edge misses the parent");
      if (!blk.is_singleton() && blk.base != inside)
        return fail("base is not the pred-edge endpoint");
    } else if (blk.depth != 0) {
      return fail("root with nonzero depth");
    }

    // condition (iii): children of an inner block avoid its pred color
    if (blk.is_inner()) {
      for (const auto& [cid, child] : st.blocks()) {
        if (child.parent != id) continue;
        if (g.color(*child.pred_edge) == g.color(*blk.pred_edge))
          return fail("child edge matches inner pred color");
      }
    }

    // conditions (ii)/(iv): blossom structure, by brute-force definition
    if (!blk.is_singleton()) {
      std::optional<Color> avoid;
      if (!blk.is_root()) avoid = g.color(*blk.pred_edge);
      if (!is_blossom_by_definition(g, blk.members, blk.base, avoid))
        return fail("block is not a blossom per the definition");
      if (avoid && !has_closed_witness_by_definition(g, blk.members, blk.base, *avoid))
        return fail("block lacks a closed witness per the definition");
    }

    // stored witness sanity
    if (blk.is_singleton()) {
      if (!blk.to_base.empty() || blk.closed_witness) return fail("singleton carries witnesses");
    } else {
      for (VertexId w : blk.members) {
        if (w == blk.base) continue;
        auto it = blk.to_base.find(w);
        if (it == blk.to_base.end()) return fail("missing witness pair");
        const auto& [t1, t2] = it->second;
        for (const Walk* t : {&t1, &t2}) {
          if (!walk_inside(g, *t, blk.members)) return fail("witness leaves the block");
          WalkClass cls = classify_walk(g, *t);
          if (!cls.is_trail || !cls.is_internally_alternating) return fail("witness not a trail");
          if (t->front() != w || t->back() != blk.base) return fail("witness endpoints");
          if (t->length() == 0) return fail("zero-length witness");
        }
        if (g.color(t1.edge_ids.front()) == g.color(t2.edge_ids.front()))
          return fail("witness first colors equal");
        if (!blk.is_root()) {
          const Color& avoid = g.color(*blk.pred_edge);
          if (g.color(t1.edge_ids.back()) == avoid || g.color(t2.edge_ids.back()) == avoid)
            return fail("witness last color equals pred color");
        }
      }
      if (blk.is_root()) {
        if (blk.closed_witness) return fail("root block carries a closed witness");
      } else {
        if (!blk.closed_witness) return fail("missing closed witness");
        const Walk& cw = *blk.closed_witness;
        if (!walk_inside(g, cw, blk.members)) return fail("closed witness leaves the block");
        WalkClass cls = classify_walk(g, cw);
        if (!cls.is_trail || !cls.is_internally_alternating || cw.length() == 0)
          return fail("closed witness not a positive trail");
        if (cw.front() != blk.base || cw.back() != blk.base)
          return fail("closed witness endpoints");
        const Color& avoid = g.color(*blk.pred_edge);
        if (g.color(cw.edge_ids.front()) == avoid || g.color(cw.edge_ids.back()) == avoid)
          return fail("closed witness touches pred color");
      }
    }
  }
  return std::nullopt;
}

BlossomForestState random_forest_state(std::mt19937_64& rng, const ColoredMultigraph& g,
                                       const std::vector<VertexId>& terminals, int steps) {
  BlossomForestState st = init_state(g, terminals);
  for (int step = 0; step < steps; ++step) {
    // all applicable (action, edge) pairs, skipping breakthroughs
    std::vector<Action> options;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      for (auto kind : {Action::Kind::Grow, Action::Kind::Shrink, Action::Kind::Fuse}) {
        try {
          switch (kind) {
            case Action::Kind::Grow: grow(g, st, e); break;
            case Action::Kind::Shrink: shrink(g, st, e); break;
            case Action::Kind::Fuse: fuse(g, st, e); break;
            default: break;
          }
          options.push_back({kind, e});
        } catch (const std::invalid_argument&) {
        }
      }
    }
    if (options.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, options.size() - 1);
    Action a = options[pick(rng)];
    switch (a.kind) {
      case Action::Kind::Grow: st = grow(g, st, a.edge); break;
      case Action::Kind::Shrink: st = shrink(g, st, a.edge); break;
      case Action::Kind::Fuse: st = fuse(g, st, a.edge); break;
      default: break;
    }
  }
  return st;
}

ColoredMultigraph petersen_graph() {
  std::vector<std::tuple<int, int, const char*>> edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5, "B");         // outer cycle
  for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5, "B"); // inner star
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, 5 + i, "B");               // spokes
  return mk(10, edges);
}

}  // namespace altreach::testsupport
