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

#include "altreach/certificates.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace altreach {

bool TutteCertificate::in_a(VertexId v) const { return color_of(v).has_value(); }

std::optional<Color> TutteCertificate::color_of(VertexId v) const {
  auto it = std::lower_bound(assignment.begin(), assignment.end(), v,
                             [](const auto& p, VertexId x) { return p.first < x; });
  if (it == assignment.end() || it->first != v) return std::nullopt;
  return it->second;
}

bool edge_mismatched(const ColoredMultigraph& g, const TutteCertificate& cert, EdgeId e) {
  const Edge& ed = g.edge(e);
  auto cu = cert.color_of(ed.u);
  auto cv = cert.color_of(ed.v);
  if (cu && cv) return ed.color != *cu && ed.color != *cv;
  if (cu) return ed.color != *cu;
  if (cv) return ed.color != *cv;
  return false;
}

std::string Violation::describe() const {
  std::ostringstream os;
  switch (clause) {
    case Clause::TerminalInA: os << "terminal-in-A"; break;
    case Clause::MultiTerminalComponent: os << "multi-terminal-component"; break;
    case Clause::MismatchedAtTerminalComponent: os << "mismatched-at-terminal-component"; break;
    case Clause::TwoMismatchedAtFreeComponent: os << "two-mismatched-at-free-component"; break;
    case Clause::MismatchedInsideA: os << "mismatched-inside-A"; break;
    case Clause::TrailNotAlternating: os << "trail-not-alternating"; break;
    case Clause::TrailEndpoints: os << "trail-endpoints"; break;
    case Clause::TrailEdgeReuse: os << "trail-edge-reuse"; break;
    case Clause::TrailInconsistent: os << "trail-inconsistent"; break;
  }
  if (vertex) os << " vertex " << *vertex;
  if (edge) os << " edge " << *edge;
  if (edge2) os << " edge " << *edge2;
  if (!component.empty()) {
    os << " component";
    for (VertexId v : component) os << ' ' << v;
  }
  return os.str();
}

std::optional<Violation> verify_tutte(const ColoredMultigraph& g,
                                      const std::vector<VertexId>& terminals,
                                      const TutteCertificate& cert) {
  std::vector<bool> is_terminal(g.vertex_count(), false);
  for (VertexId s : terminals) {
    if (s < 0 || s >= g.vertex_count()) throw std::invalid_argument("terminal out of range");
    is_terminal[s] = true;
  }
  std::vector<VertexId> a_vertices;
  for (const auto& [v, c] : cert.assignment) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("certificate vertex out of range");
    if (is_terminal[v])
      return Violation{Violation::Clause::TerminalInA, v, {}, {}, {}};
    a_vertices.push_back(v);
  }

  // (ii)(c): no mismatched edge inside A
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (cert.in_a(ed.u) && cert.in_a(ed.v) && edge_mismatched(g, cert, e))
      return Violation{Violation::Clause::MismatchedInsideA, {}, e, {}, {}};
  }

  std::vector<int> comp = component_ids(g, a_vertices);
  int ncomp = 0;
  for (int c : comp) ncomp = std::max(ncomp, c + 1);

  std::vector<std::optional<VertexId>> comp_terminal(ncomp);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (comp[v] == -1 || !is_terminal[v]) continue;
    if (comp_terminal[comp[v]]) {
      std::vector<VertexId> members;
      for (VertexId w = 0; w < g.vertex_count(); ++w)
        if (comp[w] == comp[v]) members.push_back(w);
      return Violation{Violation::Clause::MultiTerminalComponent, v, {}, {}, members};
    }
    comp_terminal[comp[v]] = v;
  }

  // mismatched edges with an endpoint in each component
  std::vector<std::vector<EdgeId>> comp_mismatched(ncomp);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!edge_mismatched(g, cert, e)) continue;
    bool au = cert.in_a(ed.u), av = cert.in_a(ed.v);
    if (au && av) continue;  // handled above
    VertexId outside = au ? ed.v : ed.u;
    comp_mismatched[comp[outside]].push_back(e);
  }
  for (int c = 0; c < ncomp; ++c) {
    if (comp_terminal[c] && !comp_mismatched[c].empty()) {
      std::vector<VertexId> members;
      for (VertexId w = 0; w < g.vertex_count(); ++w)
        if (comp[w] == c) members.push_back(w);
      return Violation{Violation::Clause::MismatchedAtTerminalComponent,
                       comp_terminal[c], comp_mismatched[c][0], {}, members};
    }
    if (!comp_terminal[c] && comp_mismatched[c].size() >= 2) {
      std::vector<VertexId> members;
      for (VertexId w = 0; w < g.vertex_count(); ++w)
        if (comp[w] == c) members.push_back(w);
      return Violation{Violation::Clause::TwoMismatchedAtFreeComponent,
                       {}, comp_mismatched[c][0], comp_mismatched[c][1], members};
    }
  }
  return std::nullopt;
}

std::optional<Violation> verify_alt_trail(const ColoredMultigraph& g,
                                          const std::vector<VertexId>& terminals,
                                          const Walk& w) {
  if (!walk_consistent(g, w))
    return Violation{Violation::Clause::TrailInconsistent, {}, {}, {}, {}};
  std::set<EdgeId> seen;
  for (EdgeId e : w.edge_ids) {
    if (!seen.insert(e).second)
      return Violation{Violation::Clause::TrailEdgeReuse, {}, e, {}, {}};
  }
  WalkClass cls = classify_walk(g, w);
  if (!cls.is_alternating) {
    // name the first clashing pair
    for (int j = 0; j + 1 < w.length(); ++j)
      if (g.color(w.edge_ids[j]) == g.color(w.edge_ids[j + 1]))
        return Violation{Violation::Clause::TrailNotAlternating, {}, w.edge_ids[j],
                         w.edge_ids[j + 1], {}};
    return Violation{Violation::Clause::TrailNotAlternating, {}, {}, {}, {}};
  }
  std::set<VertexId> term(terminals.begin(), terminals.end());
  if (w.front() == w.back() || !term.count(w.front()) || !term.count(w.back()))
    return Violation{Violation::Clause::TrailEndpoints, w.front(), {}, {}, {}};
  return std::nullopt;
}

namespace {

struct ReachSearch {
  const ColoredMultigraph& g;
  const std::set<VertexId>& terminals;
  std::vector<bool> used;
  Walk walk;
  std::optional<Walk> found;

  ReachSearch(const ColoredMultigraph& gg, const std::set<VertexId>& ts)
      : g(gg), terminals(ts), used(gg.edge_count(), false) {}

  // extends the alternating trail from `v`; last = color of the walk's last
  // edge, empty at the very start
  void dfs(VertexId v, const Color* last) {
    if (found) return;
    if (walk.length() >= 1 && terminals.count(v) && v != walk.front()) {
      found = walk;
      return;
    }
    for (EdgeId e : g.incident(v)) {
      if (used[e]) continue;
      if (last && g.color(e) == *last) continue;
      VertexId w = g.other_end(e, v);
      used[e] = true;
      walk.edge_ids.push_back(e);
      walk.vertices.push_back(w);
      dfs(w, &g.color(e));
      if (found) return;
      walk.edge_ids.pop_back();
      walk.vertices.pop_back();
      used[e] = false;
    }
  }
};

}  // namespace

std::optional<Walk> brute_reach(const ColoredMultigraph& g,
                                const std::vector<VertexId>& terminals) {
  std::set<VertexId> term(terminals.begin(), terminals.end());
  for (VertexId s : term)
    if (s < 0 || s >= g.vertex_count()) throw std::invalid_argument("terminal out of range");
  for (VertexId s : term) {
    ReachSearch rs(g, term);
    rs.walk = Walk::at(s);
    rs.dfs(s, nullptr);
    if (rs.found) return rs.found;
  }
  return std::nullopt;
}

namespace {

struct ClassifySearch {
  const ColoredMultigraph& g;
  std::vector<bool> used;
  // per vertex: set of last-edge colors of alternating trails from the
  // current start terminal
  std::vector<std::set<Color>>& reached;

  ClassifySearch(const ColoredMultigraph& gg, std::vector<std::set<Color>>& r)
      : g(gg), used(gg.edge_count(), false), reached(r) {}

  void dfs(VertexId v, const Color* last) {
    for (EdgeId e : g.incident(v)) {
      if (used[e]) continue;
      if (last && g.color(e) == *last) continue;
      VertexId w = g.other_end(e, v);
      used[e] = true;
      reached[w].insert(g.color(e));
      dfs(w, &g.color(e));
      used[e] = false;
    }
  }
};

}  // namespace

std::map<VertexId, VertexClass> brute_classify(const ColoredMultigraph& g,
                                               const std::vector<VertexId>& terminals) {
  std::set<VertexId> term(terminals.begin(), terminals.end());
  for (VertexId s : term)
    if (s < 0 || s >= g.vertex_count()) throw std::invalid_argument("terminal out of range");
  if (term.empty()) throw std::invalid_argument("empty terminal set");

  // last-edge colors per (terminal, vertex)
  std::vector<std::vector<std::set<Color>>> by_terminal;
  for (VertexId s : term) {
    std::vector<std::set<Color>> reached(g.vertex_count());
    ClassifySearch cs(g, reached);
    cs.dfs(s, nullptr);
    by_terminal.push_back(std::move(reached));
  }

  std::map<VertexId, VertexClass> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (term.count(v)) {
      out[v] = VertexClass{VertexClass::Kind::Terminal, {}};
      continue;
    }
    std::set<Color> all;
    bool two_from_one = false;
    for (const auto& reached : by_terminal) {
      all.insert(reached[v].begin(), reached[v].end());
      if (reached[v].size() >= 2) two_from_one = true;
    }
    if (all.empty()) {
      out[v] = VertexClass{VertexClass::Kind::Unreachable, {}};
    } else if (two_from_one) {
      out[v] = VertexClass{VertexClass::Kind::TwoColors, {}};
    } else if (all.size() == 1) {
      out[v] = VertexClass{VertexClass::Kind::Inner, *all.begin()};
    } else {
      // reachable from two terminals with different single colors and from no
      // terminal with two; cannot happen without a connecting trail
      throw std::logic_error("brute_classify: classification not total");
    }
  }
  return out;
}

}  // namespace altreach
