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

#include "altreach/structures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace altreach {

ReductionMap cat_reduction(const ColoredMultigraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  ReductionMap rm;
  rm.s_prime = g.vertex_count();
  rm.t_prime = g.vertex_count() + 1;

  std::vector<Edge> edges;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (id == e) continue;
    const Edge& o = g.edge(id);
    EdgeId nid = static_cast<EdgeId>(edges.size());
    edges.push_back(Edge{nid, o.u, o.v, o.color});
    rm.back_edges.push_back(id);
  }
  rm.f_edge = static_cast<EdgeId>(edges.size());
  edges.push_back(Edge{rm.f_edge, rm.s_prime, ed.u, ed.color});
  rm.back_edges.push_back(std::nullopt);
  rm.g_edge = static_cast<EdgeId>(edges.size());
  edges.push_back(Edge{rm.g_edge, rm.t_prime, ed.v, ed.color});
  rm.back_edges.push_back(std::nullopt);

  rm.host = ColoredMultigraph(g.vertex_count() + 2, std::move(edges));
  return rm;
}

namespace {

// an s'-t' alternating trail in the host, stripped of f and g and closed
// with e, is a closed alternating trail through e
Walk close_through_edge(const ColoredMultigraph& g, EdgeId e, const ReductionMap& rm,
                        Walk trail) {
  if (trail.front() == rm.t_prime) trail = trail.reversed();
  if (trail.front() != rm.s_prime || trail.back() != rm.t_prime || trail.length() < 2 ||
      trail.edge_ids.front() != rm.f_edge || trail.edge_ids.back() != rm.g_edge)
    throw std::logic_error("unexpected trail shape from reduction");
  Walk inner;
  inner.vertices.assign(trail.vertices.begin() + 1, trail.vertices.end() - 1);
  inner.edge_ids.clear();
  for (size_t i = 1; i + 1 < trail.edge_ids.size(); ++i)
    inner.edge_ids.push_back(*rm.back_edges[trail.edge_ids[i]]);
  // inner runs from ed.u to ed.v; close with e back to ed.u
  Walk closing{{inner.back(), inner.front()}, {e}};
  Walk cat = concat(inner, closing);
  if (!classify_walk(g, cat).is_cat) throw std::logic_error("reduction produced a non-CAT");
  return cat;
}

}  // namespace

std::optional<Walk> find_cat_through_edge(const ColoredMultigraph& g, EdgeId e) {
  if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("unknown edge id");
  ReductionMap rm = cat_reduction(g, e);
  SolveOutcome out = solve(rm.host, {rm.s_prime, rm.t_prime});
  if (!out.trail) return std::nullopt;
  return close_through_edge(g, e, rm, *out.trail);
}

Walk find_cat(const ColoredMultigraph& g) {
  auto br = bridges(g);
  if (!br.empty())
    throw CatSearchError("graph has a bridge: edge " + std::to_string(br.front()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::set<Color> cs;
    for (EdgeId e : g.incident(v)) cs.insert(g.color(e));
    if (cs.size() < 2)
      throw CatSearchError("vertex " + std::to_string(v) +
                           " lacks incident edges of two different colors");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (auto cat = find_cat_through_edge(g, e)) return *cat;
  }
  // unreachable under the hypotheses
  throw std::logic_error("no closed alternating trail found despite hypotheses");
}

CycleCoverResult giles_seymour(const ColoredMultigraph& g, const std::vector<EdgeId>& phi) {
  if (static_cast<int>(phi.size()) != g.vertex_count())
    throw std::invalid_argument("phi must assign an edge to every vertex");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (phi[v] < 0 || phi[v] >= g.edge_count())
      throw std::invalid_argument("phi(" + std::to_string(v) + ") is not an edge");
    const Edge& e = g.edge(phi[v]);
    if (e.u != v && e.v != v)
      throw std::invalid_argument("phi(" + std::to_string(v) + ") is not incident");
  }
  auto br = bridges(g);
  if (!br.empty())
    throw std::invalid_argument("graph has a bridge: edge " + std::to_string(br.front()));

  // chosen-count partition: E_i = edges picked by exactly i of their endpoints
  std::vector<int> chosen(g.edge_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) ++chosen[phi[v]];

  ReductionMap rm;
  rm.subdivision_vertex.assign(g.edge_count(), std::nullopt);
  std::vector<Edge> edges;
  int next_vertex = g.vertex_count();
  auto push = [&](VertexId u, VertexId v, const Color& c, std::optional<EdgeId> back) {
    edges.push_back(Edge{static_cast<EdgeId>(edges.size()), u, v, c});
    rm.back_edges.push_back(back);
  };
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (chosen[id] == 0) {
      push(e.u, e.v, "B", id);
    } else if (chosen[id] == 2) {
      push(e.u, e.v, "R", id);
    } else {
      VertexId mid = next_vertex++;
      rm.subdivision_vertex[id] = mid;
      VertexId chooser = phi[e.u] == id ? e.u : e.v;
      VertexId other = chooser == e.u ? e.v : e.u;
      push(chooser, mid, "R", id);
      push(other, mid, "B", id);
    }
  }
  rm.host = ColoredMultigraph(next_vertex, std::move(edges));

  CycleCoverResult res;
  res.aux_cat = find_cat(rm.host);
  WalkClass cls = classify_walk(rm.host, res.aux_cat);
  if (!cls.is_cycle)   // red edges form a matching, so the CAT is a cycle
    throw std::logic_error("auxiliary trail is not a cycle");

  // map back through the subdivision: rotate onto an original vertex, drop
  // the new vertices, merge the halves of each subdivided edge
  Walk t = res.aux_cat;
  for (int k = 0; k < t.length(); ++k) {
    if (t.vertices[k] < g.vertex_count()) {
      t = rotate_closed(t, k);
      break;
    }
  }
  Walk cyc;
  cyc.vertices = {t.vertices.front()};
  for (int i = 0; i < t.length(); ++i) {
    VertexId to = t.vertices[i + 1];
    if (to >= g.vertex_count()) continue;  // middle of a subdivided edge
    cyc.edge_ids.push_back(*rm.back_edges[t.edge_ids[i]]);
    cyc.vertices.push_back(to);
  }
  if (!classify_walk(g, cyc).is_cycle) throw std::logic_error("mapped walk is not a cycle");
  for (size_t i = 0; i + 1 < cyc.vertices.size(); ++i) {
    VertexId w = cyc.vertices[i];
    if (std::find(cyc.edge_ids.begin(), cyc.edge_ids.end(), phi[w]) == cyc.edge_ids.end())
      throw std::logic_error("cycle misses a phi edge");
  }
  res.cycle = std::move(cyc);
  res.reduction = std::move(rm);
  return res;
}

}  // namespace altreach
