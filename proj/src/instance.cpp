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

#include "altreach/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace altreach {

bool InstanceFile::operator==(const InstanceFile& o) const {
  auto key = [](const ColoredMultigraph& g) {
    std::vector<std::tuple<EdgeId, VertexId, VertexId, Color>> es;
    for (const Edge& e : g.raw_edges()) es.emplace_back(e.id, e.u, e.v, e.color);
    std::sort(es.begin(), es.end());
    return es;
  };
  return graph.vertex_count() == o.graph.vertex_count() && key(graph) == key(o.graph) &&
         terminals == o.terminals && weights == o.weights && phi == o.phi;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("expected integer for ") + what + ", got '" + tok + "'");
  }
}

// shared line loop; dispatch returns false for directives it does not know
template <typename Dispatch>
void for_each_directive(std::string_view text, Dispatch&& dispatch) {
  std::istringstream is{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;
    if (!dispatch(line_no, toks))
      throw ParseError(line_no, "unknown directive '" + toks[0] + "'");
  }
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::set<VertexId> terminals;
  std::vector<std::pair<EdgeId, Rat>> weight_lines;
  std::vector<std::pair<VertexId, EdgeId>> phi_lines;

  for_each_directive(text, [&](int line_no, const std::vector<std::string>& toks) {
    const std::string& kw = toks[0];
    if (kw == "graph") {
      if (toks.size() != 2) throw ParseError(line_no, "usage: graph <n>");
      if (n) throw ParseError(line_no, "duplicate graph directive");
      n = parse_int(toks[1], line_no, "vertex count");
      if (*n < 0) throw ParseError(line_no, "negative vertex count");
      return true;
    }
    if (kw == "edge") {
      if (toks.size() != 5) throw ParseError(line_no, "usage: edge <id> <u> <v> <color>");
      Edge e;
      e.id = parse_int(toks[1], line_no, "edge id");
      e.u = parse_int(toks[2], line_no, "endpoint");
      e.v = parse_int(toks[3], line_no, "endpoint");
      e.color = toks[4];
      edges.push_back(std::move(e));
      return true;
    }
    if (kw == "terminal") {
      if (toks.size() != 2) throw ParseError(line_no, "usage: terminal <v>");
      terminals.insert(parse_int(toks[1], line_no, "terminal"));
      return true;
    }
    if (kw == "weight") {
      if (toks.size() != 3) throw ParseError(line_no, "usage: weight <edge-id> <p>/<q>");
      EdgeId id = parse_int(toks[1], line_no, "edge id");
      auto r = parse_rational(toks[2]);
      if (!r) throw ParseError(line_no, "malformed rational '" + toks[2] + "'");
      if (*r < 0) throw ParseError(line_no, "negative weight");
      weight_lines.emplace_back(id, *r);
      return true;
    }
    if (kw == "phi") {
      if (toks.size() != 3) throw ParseError(line_no, "usage: phi <v> <edge-id>");
      VertexId v = parse_int(toks[1], line_no, "vertex");
      EdgeId e = parse_int(toks[2], line_no, "edge id");
      phi_lines.emplace_back(v, e);
      return true;
    }
    return false;
  });

  if (!n) throw ParseError(0, "missing graph directive");

  InstanceFile inst;
  inst.graph = ColoredMultigraph(*n, std::move(edges));
  for (VertexId s : terminals) {
    if (s < 0 || s >= *n) throw ParseError(0, "terminal " + std::to_string(s) + " out of range");
    inst.terminals.push_back(s);
  }
  if (!weight_lines.empty()) {
    EdgeVector w(inst.graph.edge_count());
    for (const auto& [id, r] : weight_lines) {
      if (id < 0 || id >= inst.graph.edge_count())
        throw ParseError(0, "weight for unknown edge " + std::to_string(id));
      w[id] = r;
    }
    inst.weights = std::move(w);
  }
  if (!phi_lines.empty()) {
    inst.phi.assign(*n, std::nullopt);
    for (const auto& [v, e] : phi_lines) {
      if (v < 0 || v >= *n) throw ParseError(0, "phi vertex " + std::to_string(v) + " out of range");
      if (e < 0 || e >= inst.graph.edge_count())
        throw ParseError(0, "phi edge " + std::to_string(e) + " out of range");
      inst.phi[v] = e;
    }
  }
  return inst;
}

std::string serialize_instance(const InstanceFile& inst) {
  std::ostringstream os;
  os << "graph " << inst.graph.vertex_count() << "\n";
  std::vector<Edge> es = inst.graph.raw_edges();
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (const Edge& e : es)
    os << "edge " << e.id << ' ' << e.u << ' ' << e.v << ' ' << e.color << "\n";
  for (VertexId s : inst.terminals) os << "terminal " << s << "\n";
  if (inst.weights) {
    for (EdgeId id = 0; id < inst.weights->size(); ++id)
      os << "weight " << id << ' ' << to_string((*inst.weights)[id]) << "\n";
  }
  for (VertexId v = 0; v < static_cast<int>(inst.phi.size()); ++v)
    if (inst.phi[v]) os << "phi " << v << ' ' << *inst.phi[v] << "\n";
  return os.str();
}

Walk parse_trail_file(std::string_view text) {
  std::optional<Walk> walk;
  for_each_directive(text, [&](int line_no, const std::vector<std::string>& toks) {
    if (toks[0] != "trail") return false;
    if (walk) throw ParseError(line_no, "duplicate trail line");
    if (toks.size() % 2 != 0)
      throw ParseError(line_no, "trail needs alternating vertex/edge ids");
    Walk w;
    for (size_t i = 1; i < toks.size(); ++i) {
      int x = parse_int(toks[i], line_no, "trail entry");
      if (i % 2 == 1)
        w.vertices.push_back(x);
      else
        w.edge_ids.push_back(x);
    }
    walk = std::move(w);
    return true;
  });
  if (!walk) throw ParseError(0, "missing trail line");
  return *walk;
}

TutteCertificate parse_tutte_file(std::string_view text) {
  std::optional<TutteCertificate> cert;
  for_each_directive(text, [&](int line_no, const std::vector<std::string>& toks) {
    if (toks[0] != "tutte") return false;
    if (cert) throw ParseError(line_no, "duplicate tutte line");
    TutteCertificate c;
    for (size_t i = 1; i < toks.size(); ++i) {
      auto colon = toks[i].find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == toks[i].size())
        throw ParseError(line_no, "expected <v>:<color>, got '" + toks[i] + "'");
      VertexId v = parse_int(toks[i].substr(0, colon), line_no, "tutte vertex");
      c.assignment.emplace_back(v, toks[i].substr(colon + 1));
    }
    std::sort(c.assignment.begin(), c.assignment.end());
    for (size_t i = 1; i < c.assignment.size(); ++i)
      if (c.assignment[i].first == c.assignment[i - 1].first)
        throw ParseError(line_no, "vertex assigned twice");
    cert = std::move(c);
    return true;
  });
  if (!cert) throw ParseError(0, "missing tutte line");
  return *cert;
}

std::string format_trail_line(const Walk& w) {
  std::ostringstream os;
  os << "trail";
  for (int i = 0; i < static_cast<int>(w.vertices.size()); ++i) {
    os << ' ' << w.vertices[i];
    if (i < w.length()) os << ' ' << w.edge_ids[i];
  }
  return os.str();
}

std::string format_tutte_line(const TutteCertificate& cert) {
  std::ostringstream os;
  os << "tutte";
  for (const auto& [v, c] : cert.assignment) os << ' ' << v << ':' << c;
  return os.str();
}

}  // namespace altreach
