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

#include "altreach/cones.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "altreach/structures.hpp"

namespace altreach {

namespace {

// practical bound for exhaustive cut enumeration, per connected component
constexpr int kMaxEnumerationComponent = 20;

}  // namespace

std::vector<EdgeId> cut_edges(const ColoredMultigraph& g, const std::vector<VertexId>& side_x) {
  std::vector<bool> in_x(g.vertex_count(), false);
  for (VertexId v : side_x) in_x[v] = true;
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (in_x[ed.u] != in_x[ed.v]) out.push_back(e);
  }
  return out;
}

std::string ConeViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Balance:
      os << "balance " << vertex << ' ' << color_a << ' ' << to_string(total_a) << ' '
         << color_b << ' ' << to_string(total_b);
      break;
    case Kind::Cut: {
      os << "cut " << pair.e << ' ' << to_string(lhs) << ' ' << to_string(rhs) << " X";
      for (VertexId v : pair.side_x) os << ' ' << v;
      break;
    }
    case Kind::Negative:
      os << "negative " << edge;
      break;
  }
  return os.str();
}

bool violation_reverifies(const ColoredMultigraph& g, const EdgeVector& x,
                          const ConeViolation& v) {
  switch (v.kind) {
    case ConeViolation::Kind::Balance: {
      Rat ta = 0, tb = 0;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.u != v.vertex && ed.v != v.vertex) continue;
        if (ed.color == v.color_a) ta += x[e];
        if (ed.color == v.color_b) tb += x[e];
      }
      return ta == v.total_a && tb == v.total_b && ta != tb;
    }
    case ConeViolation::Kind::Cut: {
      std::vector<EdgeId> d = cut_edges(g, v.pair.side_x);
      if (std::find(d.begin(), d.end(), v.pair.e) == d.end()) return false;
      Rat rest = 0;
      for (EdgeId h : d)
        if (h != v.pair.e) rest += x[h];
      return x[v.pair.e] == v.lhs && rest == v.rhs && v.lhs > v.rhs;
    }
    case ConeViolation::Kind::Negative:
      return x[v.edge] < 0;
  }
  return false;
}

std::optional<std::pair<Color, Color>> two_color_roles(const ColoredMultigraph& g) {
  std::vector<Color> cs = g.distinct_colors();
  if (cs.size() > 2) return std::nullopt;
  if (cs.size() == 2) return std::make_pair(cs[0], cs[1]);
  if (cs.size() == 1) return std::make_pair(cs[0], cs[0] + "_");
  return std::make_pair(Color("A"), Color("B"));
}

std::optional<ConeViolation> check_balance(const ColoredMultigraph& g, const EdgeVector& x) {
  auto roles = two_color_roles(g);
  if (!roles) throw std::invalid_argument("graph uses more than two colors");
  if (x.size() != g.edge_count()) throw std::invalid_argument("weight vector size mismatch");

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (x[e] < 0) {
      ConeViolation v;
      v.kind = ConeViolation::Kind::Negative;
      v.edge = e;
      return v;
    }
  }
  std::vector<Rat> ta(g.vertex_count(), Rat(0)), tb(g.vertex_count(), Rat(0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    auto& bucket = ed.color == roles->first ? ta : tb;
    bucket[ed.u] += x[e];
    bucket[ed.v] += x[e];
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (ta[v] != tb[v]) {
      ConeViolation viol;
      viol.kind = ConeViolation::Kind::Balance;
      viol.vertex = v;
      viol.color_a = roles->first;
      viol.color_b = roles->second;
      viol.total_a = ta[v];
      viol.total_b = tb[v];
      return viol;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// cut enumeration and exact max-flow

namespace {

/// Visits every cut whose side X lies inside one connected component (X is
/// the side avoiding the component's smallest vertex). The callback returns
/// false to stop the enumeration.
void for_each_cut(const ColoredMultigraph& g,
                  const std::function<bool(const std::vector<VertexId>&,
                                           const std::vector<EdgeId>&)>& visit) {
  for (const auto& comp : components(g)) {
    const int k = static_cast<int>(comp.size());
    if (k < 2) continue;
    if (k > kMaxEnumerationComponent)
      throw std::invalid_argument("component too large for exhaustive cut enumeration");
    std::vector<bool> in_x(g.vertex_count(), false);
    for (unsigned mask = 1; mask < (1u << (k - 1)); ++mask) {
      std::vector<VertexId> side;
      for (int i = 0; i + 1 < k; ++i)
        if (mask & (1u << i)) side.push_back(comp[i + 1]);
      for (VertexId v : side) in_x[v] = true;
      std::vector<EdgeId> crossing;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (in_x[ed.u] != in_x[ed.v]) crossing.push_back(e);
      }
      for (VertexId v : side) in_x[v] = false;
      if (!visit(side, crossing)) return;
    }
  }
}

struct ExactMaxFlow {
  struct Arc {
    int to;
    Rat residual;
  };
  std::vector<Arc> arcs;  // paired: i ^ 1 is the reverse arc
  std::vector<std::vector<int>> adj;

  explicit ExactMaxFlow(int n) : adj(n) {}

  void add_undirected(int u, int v, const Rat& cap) {
    adj[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap});
    adj[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, cap});
  }

  Rat run(int s, int t) {
    Rat flow = 0;
    for (;;) {
      std::vector<int> via(adj.size(), -1);  // arc used to reach vertex
      std::vector<bool> seen(adj.size(), false);
      std::queue<int> q;
      q.push(s);
      seen[s] = true;
      while (!q.empty() && !seen[t]) {
        int v = q.front();
        q.pop();
        for (int a : adj[v]) {
          if (arcs[a].residual == 0 || seen[arcs[a].to]) continue;
          seen[arcs[a].to] = true;
          via[arcs[a].to] = a;
          q.push(arcs[a].to);
        }
      }
      if (!seen[t]) return flow;
      Rat push = arcs[via[t]].residual;
      for (int v = t; v != s; v = arcs[via[v] ^ 1].to)
        push = std::min(push, arcs[via[v]].residual);
      for (int v = t; v != s; v = arcs[via[v] ^ 1].to) {
        arcs[via[v]].residual -= push;
        arcs[via[v] ^ 1].residual += push;
      }
      flow += push;
    }
  }

  /// After run(): the source side of a minimum cut.
  std::vector<VertexId> source_side(int s) const {
    std::vector<bool> seen(adj.size(), false);
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a : adj[v]) {
        if (arcs[a].residual == 0 || seen[arcs[a].to]) continue;
        seen[arcs[a].to] = true;
        q.push(arcs[a].to);
      }
    }
    std::vector<VertexId> side;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
      if (seen[v]) side.push_back(v);
    return side;
  }
};

ConeViolation make_cut_violation(const ColoredMultigraph& g, const EdgeVector& x,
                                 std::vector<VertexId> side, EdgeId e) {
  ConeViolation v;
  v.kind = ConeViolation::Kind::Cut;
  v.pair.side_x = std::move(side);
  v.pair.e = e;
  v.pair.size_x = static_cast<int>(v.pair.side_x.size());
  v.pair.size_rest = g.vertex_count() - v.pair.size_x;
  v.lhs = x[e];
  v.rhs = 0;
  for (EdgeId h : cut_edges(g, v.pair.side_x))
    if (h != e) v.rhs += x[h];
  return v;
}

}  // namespace

std::optional<ConeViolation> check_cut_admissible(const ColoredMultigraph& g,
                                                  const EdgeVector& x,
                                                  AdmissibilityMethod method) {
  if (x.size() != g.edge_count()) throw std::invalid_argument("weight vector size mismatch");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (x[e] < 0) {
      ConeViolation v;
      v.kind = ConeViolation::Kind::Negative;
      v.edge = e;
      return v;
    }
  }

  if (method == AdmissibilityMethod::Enumeration) {
    std::optional<ConeViolation> out;
    for_each_cut(g, [&](const std::vector<VertexId>& side, const std::vector<EdgeId>& crossing) {
      Rat total = 0;
      for (EdgeId h : crossing) total += x[h];
      for (EdgeId e : crossing) {
        if (x[e] > total - x[e]) {
          out = make_cut_violation(g, x, side, e);
          return false;
        }
      }
      return true;
    });
    return out;
  }

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (x[e] == 0) continue;
    const Edge& ed = g.edge(e);
    ExactMaxFlow mf(g.vertex_count());
    for (EdgeId h = 0; h < g.edge_count(); ++h) {
      const Edge& hd = g.edge(h);
      mf.add_undirected(hd.u, hd.v, x[h]);
    }
    Rat flow = mf.run(ed.u, ed.v);
    if (flow < 2 * x[e])
      return make_cut_violation(g, x, mf.source_side(ed.u), e);
  }
  return std::nullopt;
}

std::vector<CutPair> tight_pairs(const ColoredMultigraph& g, const EdgeVector& x) {
  if (check_cut_admissible(g, x, AdmissibilityMethod::Enumeration))
    throw std::invalid_argument("weights are not cut-admissible");
  std::vector<CutPair> out;
  for_each_cut(g, [&](const std::vector<VertexId>& side, const std::vector<EdgeId>& crossing) {
    Rat total = 0;
    for (EdgeId h : crossing) total += x[h];
    for (EdgeId e : crossing) {
      if (x[e] == total - x[e]) {
        CutPair p;
        p.side_x = side;
        p.e = e;
        p.size_x = static_cast<int>(side.size());
        p.size_rest = g.vertex_count() - p.size_x;
        out.push_back(std::move(p));
      }
    }
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// split / stitch

namespace {

SplitHalf build_half(const ColoredMultigraph& g, const EdgeVector& x,
                     const std::vector<bool>& collapse, const std::set<EdgeId>& cut_set,
                     EdgeId e, const std::pair<Color, Color>& roles) {
  const Edge& ed = g.edge(e);
  const Color& ce = ed.color;
  const Color& opposite = ce == roles.first ? roles.second : roles.first;

  SplitHalf half;
  std::vector<int> vmap(g.vertex_count(), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (collapse[v]) continue;
    vmap[v] = static_cast<int>(half.vertex_to_parent.size());
    half.vertex_to_parent.push_back(v);
  }
  half.attach = static_cast<VertexId>(half.vertex_to_parent.size());
  half.attach_prime = half.attach + 1;
  half.vertex_to_parent.push_back(collapse[ed.u] ? ed.u : ed.v);  // attach stands for u1/u2
  half.vertex_to_parent.push_back(std::nullopt);

  std::vector<Edge> edges;
  std::vector<Rat> weights;
  Rat same_color_total = 0;
  auto push = [&](VertexId u, VertexId v, const Color& c, const Rat& w,
                  std::optional<EdgeId> parent) {
    edges.push_back(Edge{static_cast<EdgeId>(edges.size()), u, v, c});
    weights.push_back(w);
    half.edge_to_parent.push_back(parent);
  };
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& h = g.edge(id);
    bool cu = collapse[h.u], cv = collapse[h.v];
    if (cu && cv) continue;
    if (!cu && !cv) {
      push(vmap[h.u], vmap[h.v], h.color, x[id], id);
      continue;
    }
    // crossing edge
    if (id == e) {
      push(cu ? half.attach : vmap[h.u], cv ? half.attach : vmap[h.v], h.color, x[id], id);
      half.e_new = edges.back().id;
      continue;
    }
    if (!cut_set.count(id)) throw std::logic_error("crossing edge outside the cut");
    VertexId target = h.color == ce ? half.attach_prime : half.attach;
    if (h.color == ce) same_color_total += x[id];
    push(cu ? target : vmap[h.u], cv ? target : vmap[h.v], h.color, x[id], id);
  }
  half.new_edge = static_cast<EdgeId>(edges.size());
  push(half.attach, half.attach_prime, opposite, same_color_total, std::nullopt);

  half.graph = ColoredMultigraph(static_cast<int>(half.vertex_to_parent.size()),
                                 std::move(edges));
  half.weights = EdgeVector(half.graph.edge_count());
  for (EdgeId id = 0; id < half.graph.edge_count(); ++id) half.weights[id] = weights[id];
  // e_tail_new / e_head_new are filled by the caller, which knows the X side
  return half;
}

}  // namespace

SplitResult split_at(const ColoredMultigraph& g, const EdgeVector& x, const CutPair& pair) {
  auto roles = two_color_roles(g);
  if (!roles || g.distinct_colors().size() != 2)
    throw std::invalid_argument("split requires a 2-colored graph");
  if (x.size() != g.edge_count()) throw std::invalid_argument("weight vector size mismatch");
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (x[e] <= 0 || denominator(x[e]) != 1)
      throw std::invalid_argument("weights must be positive integers");

  const int n = g.vertex_count();
  const int sx = static_cast<int>(pair.side_x.size());
  if (sx < 3 || n - sx < 3) throw std::invalid_argument("both cut sides must have >= 3 vertices");

  std::vector<EdgeId> d = cut_edges(g, pair.side_x);
  std::set<EdgeId> cut_set(d.begin(), d.end());
  if (!cut_set.count(pair.e)) throw std::invalid_argument("edge does not cross the cut");
  Rat rest = 0;
  for (EdgeId h : d)
    if (h != pair.e) rest += x[h];
  if (x[pair.e] != rest) throw std::invalid_argument("pair is not tight");

  std::vector<bool> in_x(n, false);
  for (VertexId v : pair.side_x) in_x[v] = true;

  SplitResult res;
  res.pair = pair;
  res.pair.size_x = sx;
  res.pair.size_rest = n - sx;
  res.cut = d;

  res.collapse_x = build_half(g, x, in_x, cut_set, pair.e, *roles);
  std::vector<bool> in_rest(n);
  for (VertexId v = 0; v < n; ++v) in_rest[v] = !in_x[v];
  res.collapse_rest = build_half(g, x, in_rest, cut_set, pair.e, *roles);

  // role endpoints of e: head plays the X-side endpoint, tail the other
  {
    const Edge& en = res.collapse_x.graph.edge(res.collapse_x.e_new);
    res.collapse_x.e_head_new = res.collapse_x.attach;
    res.collapse_x.e_tail_new = en.u == res.collapse_x.attach ? en.v : en.u;
  }
  {
    SplitHalf& h = res.collapse_rest;
    const Edge& en = h.graph.edge(h.e_new);
    h.e_tail_new = h.attach;
    h.e_head_new = en.u == h.attach ? en.v : en.u;
  }
  return res;
}

EdgeVector decomposition_sum(const ColoredMultigraph& g, const CatDecomposition& dec) {
  EdgeVector total(g.edge_count());
  for (const CatTerm& t : dec.terms) {
    EdgeVector x = chi(g, t.cat);
    for (EdgeId e = 0; e < g.edge_count(); ++e) total[e] += t.coeff * x[e];
  }
  return total;
}

Walk canonical_closed(const Walk& w) {
  if (w.front() != w.back()) throw std::invalid_argument("not a closed walk");
  const int m = w.length();
  if (m == 0) return w;
  Walk best = w;
  const Walk rev = w.reversed();
  for (int k = 0; k < m; ++k) {
    for (const Walk* base : {&w, &rev}) {
      Walk cand = rotate_closed(*base, k);
      if (cand.edge_ids < best.edge_ids ||
          (cand.edge_ids == best.edge_ids && cand.vertices < best.vertices))
        best = std::move(cand);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// stitch

namespace {

struct CrossingEntry {
  EdgeId h = -1;                  // original crossing edge
  Walk kept;                      // kept-side segment, original coordinates
  std::vector<EdgeId> sort_key;   // rotated full edge sequence, half-local ids
  Rat coeff;
};

Walk map_kept_segment(const SplitHalf& half, const Walk& seg) {
  Walk out;
  for (VertexId v : seg.vertices) {
    if (v >= static_cast<int>(half.vertex_to_parent.size()) || !half.vertex_to_parent[v] ||
        v == half.attach || v == half.attach_prime)
      throw std::logic_error("kept segment touches a stand-in vertex");
    out.vertices.push_back(*half.vertex_to_parent[v]);
  }
  for (EdgeId e : seg.edge_ids) {
    if (!half.edge_to_parent[e]) throw std::logic_error("kept segment uses the joiner edge");
    out.edge_ids.push_back(*half.edge_to_parent[e]);
  }
  return out;
}

// decomposes one half's terms into one-sided CATs (mapped to g) and crossing
// entries grouped by the original crossing edge
void classify_half_terms(const ColoredMultigraph& g, const SplitHalf& half, bool half_keeps_x,
                         const std::set<EdgeId>& cut_set, const CatDecomposition& dec,
                         CatDecomposition& out,
                         std::map<EdgeId, std::vector<CrossingEntry>>& crossing) {
  for (const CatTerm& term : dec.terms) {
    const Walk& cat = term.cat;
    int epos = -1;
    for (int i = 0; i < cat.length(); ++i)
      if (cat.edge_ids[i] == half.e_new) epos = i;
    if (epos == -1) {
      // one-sided: entirely within the kept side
      Walk mapped = map_kept_segment(half, cat);
      if (!classify_walk(g, mapped).is_cat) throw std::logic_error("one-sided term not a CAT");
      out.terms.push_back({std::move(mapped), term.coeff});
      continue;
    }
    Walk t = cat;
    if (t.vertices[epos] != half.e_tail_new) {
      t = t.reversed();
      epos = t.length() - 1 - epos;
    }
    t = rotate_closed(t, epos);
    if (t.edge_ids[0] != half.e_new || t.vertices[0] != half.e_tail_new)
      throw std::logic_error("rotation failed");
    int hpos = -1;
    for (int i = 1; i < t.length(); ++i) {
      auto parent = half.edge_to_parent[t.edge_ids[i]];
      if (parent && cut_set.count(*parent)) {
        hpos = i;
        break;
      }
    }
    if (hpos == -1) throw std::logic_error("crossing term misses the cut");

    // the X-side segment sits between e and h, the other side after h
    Walk x_part, rest_part;
    x_part.vertices.assign(t.vertices.begin() + 1, t.vertices.begin() + hpos + 1);
    x_part.edge_ids.assign(t.edge_ids.begin() + 1, t.edge_ids.begin() + hpos);
    rest_part.vertices.assign(t.vertices.begin() + hpos + 1, t.vertices.end());
    rest_part.edge_ids.assign(t.edge_ids.begin() + hpos + 1, t.edge_ids.end());

    const Walk& kept_local = half_keeps_x ? x_part : rest_part;
    const Walk& standin = half_keeps_x ? rest_part : x_part;
    for (EdgeId e : standin.edge_ids)
      if (e != half.new_edge)
        throw std::logic_error("stand-in segment uses a non-joiner edge");

    CrossingEntry entry;
    entry.h = *half.edge_to_parent[t.edge_ids[hpos]];
    entry.kept = map_kept_segment(half, kept_local);
    entry.sort_key = t.edge_ids;
    entry.coeff = term.coeff;
    crossing[entry.h].push_back(std::move(entry));
  }
}

}  // namespace

CatDecomposition stitch(const ColoredMultigraph& g, const SplitResult& split,
                        const CatDecomposition& dec_collapse_x,
                        const CatDecomposition& dec_collapse_rest) {
  std::set<EdgeId> cut_set(split.cut.begin(), split.cut.end());
  const Edge& ed = g.edge(split.pair.e);
  std::vector<bool> in_x(g.vertex_count(), false);
  for (VertexId v : split.pair.side_x) in_x[v] = true;
  VertexId u1 = in_x[ed.u] ? ed.u : ed.v;
  VertexId u2 = in_x[ed.u] ? ed.v : ed.u;

  CatDecomposition out;
  std::map<EdgeId, std::vector<CrossingEntry>> from_x_half;     // kept V-X segments
  std::map<EdgeId, std::vector<CrossingEntry>> from_rest_half;  // kept X segments
  classify_half_terms(g, split.collapse_x, /*half_keeps_x=*/false, cut_set, dec_collapse_x,
                      out, from_x_half);
  classify_half_terms(g, split.collapse_rest, /*half_keeps_x=*/true, cut_set, dec_collapse_rest,
                      out, from_rest_half);

  for (EdgeId h : split.cut) {
    if (h == split.pair.e) continue;
    auto l1 = from_x_half.find(h) == from_x_half.end() ? std::vector<CrossingEntry>{}
                                                       : from_x_half.at(h);
    auto l2 = from_rest_half.find(h) == from_rest_half.end() ? std::vector<CrossingEntry>{}
                                                             : from_rest_half.at(h);
    auto by_key = [](const CrossingEntry& a, const CrossingEntry& b) {
      return a.sort_key < b.sort_key;
    };
    std::sort(l1.begin(), l1.end(), by_key);
    std::sort(l2.begin(), l2.end(), by_key);
    Rat s1 = 0, s2 = 0;
    for (const auto& e1 : l1) s1 += e1.coeff;
    for (const auto& e2 : l2) s2 += e2.coeff;
    if (s1 != s2) throw std::logic_error("crossing multiplicity mismatch");

    const Edge& hd = g.edge(h);
    VertexId h_x = in_x[hd.u] ? hd.u : hd.v;
    VertexId h_rest = in_x[hd.u] ? hd.v : hd.u;

    std::size_t i = 0, j = 0;
    Rat r1 = l1.empty() ? Rat(0) : l1[0].coeff;
    Rat r2 = l2.empty() ? Rat(0) : l2[0].coeff;
    while (i < l1.size() && j < l2.size()) {
      Rat take = std::min(r1, r2);
      // (u2, e, u1) * X-part * (h_x, h, h_rest) * rest-part
      Walk w{{u2, u1}, {split.pair.e}};
      if (l2[j].kept.front() != u1 || l2[j].kept.back() != h_x ||
          l1[i].kept.front() != h_rest || l1[i].kept.back() != u2)
        throw std::logic_error("kept segment endpoints off");
      w = concat(w, l2[j].kept);
      w = concat(w, Walk{{h_x, h_rest}, {h}});
      w = concat(w, l1[i].kept);
      if (!classify_walk(g, w).is_cat) throw std::logic_error("stitched walk not a CAT");
      out.terms.push_back({std::move(w), take});
      r1 -= take;
      r2 -= take;
      if (r1 == 0 && ++i < l1.size()) r1 = l1[i].coeff;
      if (r2 == 0 && ++j < l2.size()) r2 = l2[j].coeff;
    }
    if ((i < l1.size() && r1 != 0) || (j < l2.size() && r2 != 0))
      throw std::logic_error("greedy pairing left a remainder");
  }
  return out;
}

// ---------------------------------------------------------------------------
// decompose

namespace {

CatDecomposition decompose_member(const ColoredMultigraph& g, const EdgeVector& q);

long count_tight_pairs(const ColoredMultigraph& g, const EdgeVector& q) {
  long n = 0;
  for_each_cut(g, [&](const std::vector<VertexId>&, const std::vector<EdgeId>& crossing) {
    Rat total = 0;
    for (EdgeId h : crossing) total += q[h];
    for (EdgeId e : crossing)
      if (2 * q[e] == total) ++n;
    return true;
  });
  return n;
}

// connected graph, all weights positive, balanced, cut-admissible
CatDecomposition decompose_connected(const ColoredMultigraph& g, EdgeVector q) {
  CatDecomposition terms;
  const int n = g.vertex_count();
  long iter_guard = (1L << std::min(n, 24)) * std::max(1, g.edge_count()) + 16;

  for (;;) {
    if (--iter_guard < 0) throw std::logic_error("decompose failed to make progress");

    // a tight pair with both sides >= 3 splits the instance
    std::optional<CutPair> big;
    for_each_cut(g, [&](const std::vector<VertexId>& side, const std::vector<EdgeId>& crossing) {
      const int sx = static_cast<int>(side.size());
      if (sx < 3 || n - sx < 3) return true;
      Rat total = 0;
      for (EdgeId h : crossing) total += q[h];
      for (EdgeId e : crossing) {
        if (2 * q[e] == total) {
          CutPair p;
          p.side_x = side;
          p.e = e;
          p.size_x = sx;
          p.size_rest = n - sx;
          big = std::move(p);
          return false;
        }
      }
      return true;
    });

    if (big) {
      Int n_scale = denominator_lcm(q.weights);
      EdgeVector p(g.edge_count());
      for (EdgeId e = 0; e < g.edge_count(); ++e) p[e] = q[e] * Rat(n_scale);
      SplitResult split = split_at(g, p, *big);
      CatDecomposition d1 = decompose_member(split.collapse_x.graph, split.collapse_x.weights);
      CatDecomposition d2 =
          decompose_member(split.collapse_rest.graph, split.collapse_rest.weights);
      CatDecomposition stitched = stitch(g, split, d1, d2);
      for (CatTerm& t : stitched.terms)
        terms.terms.push_back({std::move(t.cat), t.coeff / Rat(n_scale)});
      return terms;
    }

    // otherwise pull out a closed alternating trail at the largest feasible rate
    Walk cat = find_cat(g);
    EdgeVector xc = chi(g, cat);
    Rat t0;
    bool have = false;
    for (EdgeId e : cat.edge_ids) {
      if (!have || q[e] < t0) t0 = q[e];
      have = true;
    }
    for_each_cut(g, [&](const std::vector<VertexId>&, const std::vector<EdgeId>& crossing) {
      Rat totalq = 0, totalc = 0;
      for (EdgeId h : crossing) {
        totalq += q[h];
        totalc += xc[h];
      }
      for (EdgeId e : crossing) {
        Rat slope = totalc - 2 * xc[e];
        if (slope > 0) {
          Rat cap = (totalq - 2 * q[e]) / slope;
          if (cap < t0) t0 = cap;
        }
      }
      return true;
    });
    if (!(t0 > 0)) throw std::logic_error("vanishing extraction rate");

    terms.terms.push_back({cat, t0});
    long tight_before = count_tight_pairs(g, q);
    bool hit_zero = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      q[e] -= t0 * xc[e];
      if (q[e] == 0) hit_zero = true;
    }
    // the residue stays in both cones, and the extraction made progress:
    // either an edge vanished or the tight set grew strictly
    if (check_balance(g, q) || check_cut_admissible(g, q, AdmissibilityMethod::Enumeration))
      throw std::logic_error("extraction left the cone");
    if (!hit_zero && count_tight_pairs(g, q) <= tight_before)
      throw std::logic_error("extraction made no progress");
    if (hit_zero) {
      CatDecomposition tail = decompose_member(g, q);
      for (CatTerm& t : tail.terms) terms.terms.push_back(std::move(t));
      return terms;
    }
  }
}

CatDecomposition decompose_member(const ColoredMultigraph& g, const EdgeVector& q) {
  if (check_balance(g, q) || check_cut_admissible(g, q, AdmissibilityMethod::Enumeration))
    throw std::logic_error("decompose recursion left the cone");

  std::vector<EdgeId> keep;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (q[e] != 0) keep.push_back(e);
  CatDecomposition out;
  if (keep.empty()) return out;

  Subgraph positive = edge_subgraph(g, keep);
  for (const auto& comp : components(positive.graph)) {
    if (comp.size() < 2) continue;
    Subgraph piece = induced_subgraph(positive.graph, comp);
    EdgeVector qc(piece.graph.edge_count());
    for (EdgeId e = 0; e < piece.graph.edge_count(); ++e)
      qc[e] = q[positive.edge_to_parent[piece.edge_to_parent[e]]];
    CatDecomposition dec = decompose_connected(piece.graph, std::move(qc));
    for (CatTerm& t : dec.terms)
      out.terms.push_back(
          {map_walk_to_parent(positive, map_walk_to_parent(piece, t.cat)), std::move(t.coeff)});
  }
  return out;
}

}  // namespace

std::variant<CatDecomposition, ConeViolation> decompose(const ColoredMultigraph& g,
                                                        const EdgeVector& q,
                                                        AdmissibilityMethod gate) {
  if (!two_color_roles(g)) throw std::invalid_argument("graph uses more than two colors");
  if (auto v = check_balance(g, q)) return *v;
  if (auto v = check_cut_admissible(g, q, gate)) return *v;

  CatDecomposition dec = decompose_member(g, q);

  // canonical output: one term per distinct trail, sorted
  std::map<std::pair<std::vector<EdgeId>, std::vector<VertexId>>, CatTerm> merged;
  for (CatTerm& t : dec.terms) {
    if (t.coeff == 0) continue;
    Walk c = canonical_closed(t.cat);
    auto key = std::make_pair(c.edge_ids, c.vertices);
    auto it = merged.find(key);
    if (it == merged.end())
      merged.emplace(std::move(key), CatTerm{std::move(c), std::move(t.coeff)});
    else
      it->second.coeff += t.coeff;
  }
  CatDecomposition out;
  for (auto& [key, term] : merged) out.terms.push_back(std::move(term));

  EdgeVector total = decomposition_sum(g, out);
  if (!(total == q)) throw std::logic_error("decomposition does not sum to the input");
  return out;
}

}  // namespace altreach
