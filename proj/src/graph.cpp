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

#include "altreach/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace altreach {

ColoredMultigraph::ColoredMultigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) return;
  const int m = static_cast<int>(edges_.size());
  index_by_id_.assign(m, -1);
  for (int pos = 0; pos < m; ++pos) {
    const Edge& e = edges_[pos];
    if (e.id < 0 || e.id >= m || index_by_id_[e.id] != -1) return;
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_) return;
    if (e.u == e.v) return;
    index_by_id_[e.id] = pos;
  }
  adjacency_.assign(vertex_count_, {});
  for (EdgeId id = 0; id < m; ++id) {
    const Edge& e = edges_[index_by_id_[id]];
    adjacency_[e.u].push_back(id);
    adjacency_[e.v].push_back(id);
  }
  valid_ = true;
}

const Edge& ColoredMultigraph::edge(EdgeId id) const {
  if (!valid_ || id < 0 || id >= edge_count()) throw std::invalid_argument("unknown edge id");
  return edges_[index_by_id_[id]];
}

const std::vector<EdgeId>& ColoredMultigraph::incident(VertexId v) const {
  if (!valid_ || v < 0 || v >= vertex_count_) throw std::invalid_argument("vertex out of range");
  return adjacency_[v];
}

VertexId ColoredMultigraph::other_end(EdgeId id, VertexId from) const {
  const Edge& e = edge(id);
  if (e.u == from) return e.v;
  if (e.v == from) return e.u;
  throw std::invalid_argument("vertex not an endpoint of edge");
}

std::vector<Color> ColoredMultigraph::distinct_colors() const {
  std::set<Color> cs;
  for (const Edge& e : edges_) cs.insert(e.color);
  return {cs.begin(), cs.end()};
}

std::string GraphViolation::describe() const {
  switch (kind) {
    case Kind::LoopEdge: return "edge " + std::to_string(edge) + " is a loop";
    case Kind::DuplicateEdgeId: return "duplicate edge id " + std::to_string(edge);
    case Kind::EdgeIdOutOfRange: return "edge id " + std::to_string(edge) + " not in 0..m-1";
    case Kind::VertexOutOfRange: return "edge " + std::to_string(edge) + " has an endpoint out of range";
    case Kind::NegativeVertexCount: return "negative vertex count";
  }
  return "unknown violation";
}

std::optional<GraphViolation> validate_graph(const ColoredMultigraph& g) {
  using K = GraphViolation::Kind;
  if (g.vertex_count() < 0) return GraphViolation{K::NegativeVertexCount, -1};
  const int m = static_cast<int>(g.raw_edges().size());
  std::vector<bool> seen(m, false);
  for (const Edge& e : g.raw_edges()) {
    if (e.id < 0 || e.id >= m) return GraphViolation{K::EdgeIdOutOfRange, e.id};
    if (seen[e.id]) return GraphViolation{K::DuplicateEdgeId, e.id};
    seen[e.id] = true;
    if (e.u < 0 || e.u >= g.vertex_count() || e.v < 0 || e.v >= g.vertex_count())
      return GraphViolation{K::VertexOutOfRange, e.id};
    if (e.u == e.v) return GraphViolation{K::LoopEdge, e.id};
  }
  return std::nullopt;
}

Walk Walk::reversed() const {
  Walk r;
  r.vertices.assign(vertices.rbegin(), vertices.rend());
  r.edge_ids.assign(edge_ids.rbegin(), edge_ids.rend());
  return r;
}

Walk concat(const Walk& a, const Walk& b) {
  if (a.back() != b.front()) throw std::invalid_argument("concat endpoint mismatch");
  Walk r = a;
  r.vertices.insert(r.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  r.edge_ids.insert(r.edge_ids.end(), b.edge_ids.begin(), b.edge_ids.end());
  return r;
}

Walk rotate_closed(const Walk& w, int k) {
  if (w.front() != w.back()) throw std::invalid_argument("rotate_closed needs a closed walk");
  const int m = w.length();
  if (m == 0) return w;
  k = ((k % m) + m) % m;
  Walk r;
  r.vertices.reserve(m + 1);
  r.edge_ids.reserve(m);
  for (int i = 0; i < m; ++i) {
    r.vertices.push_back(w.vertices[(k + i) % m]);
    r.edge_ids.push_back(w.edge_ids[(k + i) % m]);
  }
  r.vertices.push_back(r.vertices.front());
  return r;
}

bool walk_consistent(const ColoredMultigraph& g, const Walk& w) {
  if (!g.valid()) return false;
  if (w.vertices.empty() || w.vertices.size() != w.edge_ids.size() + 1) return false;
  for (VertexId v : w.vertices)
    if (v < 0 || v >= g.vertex_count()) return false;
  for (int j = 0; j < w.length(); ++j) {
    EdgeId id = w.edge_ids[j];
    if (id < 0 || id >= g.edge_count()) return false;
    const Edge& e = g.edge(id);
    VertexId a = w.vertices[j], b = w.vertices[j + 1];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
  }
  return true;
}

WalkClass classify_walk(const ColoredMultigraph& g, const Walk& w) {
  if (!walk_consistent(g, w)) throw std::invalid_argument("walk inconsistent with graph");
  WalkClass c;
  const int m = w.length();
  c.is_closed = w.front() == w.back();

  std::set<EdgeId> es(w.edge_ids.begin(), w.edge_ids.end());
  c.is_trail = static_cast<int>(es.size()) == m;

  std::set<VertexId> vs(w.vertices.begin(), w.vertices.end());
  c.is_path = c.is_trail && static_cast<int>(vs.size()) == m + 1;
  if (c.is_closed && c.is_trail) {
    // cycle: v0..v_{m-1} distinct (vacuous at length 0)
    std::set<VertexId> head(w.vertices.begin(), w.vertices.end() - 1);
    c.is_cycle = static_cast<int>(head.size()) == m;
  }

  c.is_internally_alternating = true;
  for (int j = 0; j + 1 < m; ++j) {
    if (g.color(w.edge_ids[j]) == g.color(w.edge_ids[j + 1])) {
      c.is_internally_alternating = false;
      break;
    }
  }
  c.is_alternating = c.is_internally_alternating;
  if (c.is_closed && m >= 1 && g.color(w.edge_ids[m - 1]) == g.color(w.edge_ids[0]))
    c.is_alternating = false;

  c.is_cat = c.is_trail && c.is_closed && c.is_alternating && m >= 2;
  return c;
}

EdgeVector chi(const ColoredMultigraph& g, const Walk& w) {
  if (!walk_consistent(g, w)) throw std::invalid_argument("walk inconsistent with graph");
  EdgeVector x(g.edge_count());
  for (EdgeId e : w.edge_ids) x[e] += 1;
  return x;
}

std::vector<int> component_ids(const ColoredMultigraph& g, const std::vector<VertexId>& removed) {
  std::vector<bool> gone(g.vertex_count(), false);
  for (VertexId v : removed) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("removed vertex out of range");
    gone[v] = true;
  }
  std::vector<int> comp(g.vertex_count(), -1);
  int next = 0;
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (gone[start] || comp[start] != -1) continue;
    comp[start] = next;
    std::vector<VertexId> stack{start};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.other_end(e, v);
        if (gone[w] || comp[w] != -1) continue;
        comp[w] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  return comp;
}

std::vector<std::vector<VertexId>> components(const ColoredMultigraph& g,
                                              const std::vector<VertexId>& removed) {
  std::vector<int> comp = component_ids(g, removed);
  int n = 0;
  for (int c : comp) n = std::max(n, c + 1);
  std::vector<std::vector<VertexId>> out(n);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (comp[v] != -1) out[comp[v]].push_back(v);
  return out;
}

namespace {

// Lowlink bridge search; the tree edge is skipped by edge id, so a parallel
// companion still provides a back edge and parallel pairs are never bridges.
struct BridgeSearch {
  const ColoredMultigraph& g;
  std::vector<int> disc, low;
  std::vector<EdgeId> out;
  int timer = 0;

  explicit BridgeSearch(const ColoredMultigraph& gg)
      : g(gg), disc(gg.vertex_count(), -1), low(gg.vertex_count(), 0) {}

  void run(VertexId root) {
    // iterative DFS to avoid deep recursion on long paths
    struct Frame { VertexId v; EdgeId via; std::size_t next; };
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        VertexId w = g.other_end(e, f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) out.push_back(done.via);
        }
      }
    }
  }
};

}  // namespace

std::vector<EdgeId> bridges(const ColoredMultigraph& g) {
  if (!g.valid()) throw std::invalid_argument("invalid graph");
  BridgeSearch bs(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (bs.disc[v] == -1) bs.run(v);
  std::sort(bs.out.begin(), bs.out.end());
  return bs.out;
}

Subgraph induced_subgraph(const ColoredMultigraph& g, const std::vector<VertexId>& keep) {
  Subgraph sg;
  sg.vertex_from_parent.assign(g.vertex_count(), -1);
  for (VertexId v : keep) {
    if (v < 0 || v >= g.vertex_count() || sg.vertex_from_parent[v] != -1)
      throw std::invalid_argument("bad vertex subset");
    sg.vertex_from_parent[v] = static_cast<int>(sg.vertex_to_parent.size());
    sg.vertex_to_parent.push_back(v);
  }
  sg.edge_from_parent.assign(g.edge_count(), -1);
  std::vector<Edge> edges;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    int nu = sg.vertex_from_parent[e.u], nv = sg.vertex_from_parent[e.v];
    if (nu == -1 || nv == -1) continue;
    EdgeId nid = static_cast<EdgeId>(edges.size());
    sg.edge_from_parent[id] = nid;
    sg.edge_to_parent.push_back(id);
    edges.push_back(Edge{nid, nu, nv, e.color});
  }
  sg.graph = ColoredMultigraph(static_cast<int>(sg.vertex_to_parent.size()), std::move(edges));
  return sg;
}

Subgraph edge_subgraph(const ColoredMultigraph& g, const std::vector<EdgeId>& keep) {
  Subgraph sg;
  sg.vertex_from_parent.resize(g.vertex_count());
  sg.vertex_to_parent.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    sg.vertex_from_parent[v] = v;
    sg.vertex_to_parent[v] = v;
  }
  sg.edge_from_parent.assign(g.edge_count(), -1);
  std::vector<Edge> edges;
  for (EdgeId id : keep) {
    const Edge& e = g.edge(id);
    if (sg.edge_from_parent[id] != -1) throw std::invalid_argument("duplicate edge in subset");
    EdgeId nid = static_cast<EdgeId>(edges.size());
    sg.edge_from_parent[id] = nid;
    sg.edge_to_parent.push_back(id);
    edges.push_back(Edge{nid, e.u, e.v, e.color});
  }
  sg.graph = ColoredMultigraph(g.vertex_count(), std::move(edges));
  return sg;
}

Walk map_walk_to_parent(const Subgraph& sg, const Walk& w) {
  Walk out;
  out.vertices.reserve(w.vertices.size());
  out.edge_ids.reserve(w.edge_ids.size());
  for (VertexId v : w.vertices) out.vertices.push_back(sg.vertex_to_parent[v]);
  for (EdgeId e : w.edge_ids) out.edge_ids.push_back(sg.edge_to_parent[e]);
  return out;
}

}  // namespace altreach
