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

#include "altreach/matching.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace altreach {

bool is_matching(const ColoredMultigraph& g, const Matching& m) {
  std::vector<bool> used(g.vertex_count(), false);
  for (EdgeId e : m.edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (used[ed.u] || used[ed.v]) return false;
    used[ed.u] = used[ed.v] = true;
  }
  return true;
}

namespace {

bool has_parallel_edges(const ColoredMultigraph& g) {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    auto key = std::minmax(ed.u, ed.v);
    if (!seen.insert({key.first, key.second}).second) return true;
  }
  return false;
}

}  // namespace

MatchingReduction matching_reduction(const ColoredMultigraph& g, const Matching& m) {
  if (!is_matching(g, m)) throw std::invalid_argument("not a matching");
  std::set<EdgeId> in_m(m.edges.begin(), m.edges.end());
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Edge ed = g.edge(e);
    ed.color = in_m.count(e) ? "R" : "B";
    edges.push_back(std::move(ed));
  }
  MatchingReduction red;
  red.colored = ColoredMultigraph(g.vertex_count(), std::move(edges));
  std::vector<bool> covered(g.vertex_count(), false);
  for (EdgeId e : m.edges) {
    covered[red.colored.edge(e).u] = true;
    covered[red.colored.edge(e).v] = true;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!covered[v]) red.exposed.push_back(v);
  return red;
}

AugmentOutcome augmenting_path_full(const ColoredMultigraph& g, const Matching& m) {
  MatchingReduction red = matching_reduction(g, m);
  if (red.exposed.empty()) return {std::nullopt, std::nullopt};
  SolveOutcome out = solve(red.colored, red.exposed);
  if (!out.trail) return {std::nullopt, std::move(out.certificate)};

  // red degrees are at most one, so the trail cannot revisit a vertex
  const Walk& w = *out.trail;
  std::set<VertexId> seen(w.vertices.begin(), w.vertices.end());
  if (seen.size() != w.vertices.size())
    throw std::logic_error("augmenting trail revisits a vertex");
  return {w, std::nullopt};
}

std::optional<Walk> augmenting_path(const ColoredMultigraph& g, const Matching& m) {
  return augmenting_path_full(g, m).path;
}

Matching max_matching(const ColoredMultigraph& g, bool greedy_init) {
  if (has_parallel_edges(g)) throw std::invalid_argument("graph has parallel edges");
  Matching m;
  if (greedy_init) {
    std::vector<bool> used(g.vertex_count(), false);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      if (used[ed.u] || used[ed.v]) continue;
      used[ed.u] = used[ed.v] = true;
      m.edges.push_back(e);
    }
  }
  for (;;) {
    auto path = augmenting_path(g, m);
    if (!path) break;
    std::set<EdgeId> cur(m.edges.begin(), m.edges.end());
    for (EdgeId e : path->edge_ids) {
      if (cur.count(e))
        cur.erase(e);
      else
        cur.insert(e);
    }
    m.edges.assign(cur.begin(), cur.end());
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

namespace {

void brute_search(const ColoredMultigraph& g, EdgeId next, std::vector<bool>& used,
                  std::vector<EdgeId>& current, std::vector<EdgeId>& best) {
  if (current.size() > best.size()) best = current;
  // bound: even taking every remaining edge cannot beat best
  if (current.size() + (g.edge_count() - next) <= best.size()) return;
  for (EdgeId e = next; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (used[ed.u] || used[ed.v]) continue;
    used[ed.u] = used[ed.v] = true;
    current.push_back(e);
    brute_search(g, e + 1, used, current, best);
    current.pop_back();
    used[ed.u] = used[ed.v] = false;
  }
}

}  // namespace

Matching brute_max_matching(const ColoredMultigraph& g) {
  std::vector<bool> used(g.vertex_count(), false);
  std::vector<EdgeId> current, best;
  brute_search(g, 0, used, current, best);
  Matching m;
  m.edges = std::move(best);
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

}  // namespace altreach
