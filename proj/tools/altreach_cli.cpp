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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "altreach/cones.hpp"
#include "altreach/instance.hpp"
#include "altreach/matching.hpp"
#include "altreach/reachability.hpp"
#include "altreach/structures.hpp"

namespace {

using namespace altreach;

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitError = 2;

const char* kUsage =
    "usage: altreach <command> [args] <instance-file>\n"
    "  commands: reach | classify | cat | cat-edge <id> | cycle-cover |\n"
    "            decompose | match | verify-tutte <cert-file> | verify-trail <trail-file>\n"
    "  the instance file may be '-' for stdin\n"
    "  flags: --oracle   use exhaustive cut enumeration for cut-admissibility\n";

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

InstanceFile load_instance(const std::string& path) {
  InstanceFile inst = parse_instance(read_input(path));
  if (auto bad = validate_graph(inst.graph)) throw std::runtime_error(bad->describe());
  return inst;
}

int cmd_reach(const InstanceFile& inst) {
  if (inst.terminals.empty()) throw std::runtime_error("instance has no terminals");
  SolveOutcome out = solve(inst.graph, inst.terminals);
  if (out.trail) {
    std::cout << format_trail_line(*out.trail) << "\n";
    return kExitFeasible;
  }
  std::cout << format_tutte_line(*out.certificate) << "\n";
  return kExitInfeasible;
}

int cmd_classify(const InstanceFile& inst) {
  if (inst.terminals.empty()) throw std::runtime_error("instance has no terminals");
  auto classes = classify_vertices(inst.graph, inst.terminals);
  for (const auto& [v, cls] : classes) {
    std::cout << "class " << v << ' ';
    switch (cls.kind) {
      case VertexClass::Kind::Terminal: std::cout << "S"; break;
      case VertexClass::Kind::Unreachable: std::cout << "N"; break;
      case VertexClass::Kind::TwoColors: std::cout << "T"; break;
      case VertexClass::Kind::Inner: std::cout << "I:" << cls.color; break;
    }
    std::cout << "\n";
  }
  return kExitFeasible;
}

int cmd_cat(const InstanceFile& inst) {
  Walk cat = find_cat(inst.graph);
  std::cout << format_trail_line(cat) << "\n";
  return kExitFeasible;
}

int cmd_cat_edge(const InstanceFile& inst, EdgeId e) {
  auto cat = find_cat_through_edge(inst.graph, e);
  if (!cat) {
    std::cout << "none\n";
    return kExitInfeasible;
  }
  std::cout << format_trail_line(*cat) << "\n";
  return kExitFeasible;
}

int cmd_cycle_cover(const InstanceFile& inst) {
  if (inst.phi.empty()) throw std::runtime_error("instance has no phi map");
  std::vector<EdgeId> phi(inst.graph.vertex_count());
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v) {
    if (!inst.phi[v]) throw std::runtime_error("phi missing for vertex " + std::to_string(v));
    phi[v] = *inst.phi[v];
  }
  CycleCoverResult res = giles_seymour(inst.graph, phi);
  std::cout << format_trail_line(res.cycle) << "\n";
  return kExitFeasible;
}

int cmd_decompose(const InstanceFile& inst, AdmissibilityMethod gate) {
  EdgeVector q = inst.weights ? *inst.weights : EdgeVector(inst.graph.edge_count());
  auto res = decompose(inst.graph, q, gate);
  if (auto* viol = std::get_if<ConeViolation>(&res)) {
    std::cout << "violation " << viol->describe() << "\n";
    return kExitInfeasible;
  }
  const auto& dec = std::get<CatDecomposition>(res);
  for (const CatTerm& t : dec.terms) {
    std::cout << to_string(t.coeff) << " :";
    for (EdgeId e : t.cat.edge_ids) std::cout << ' ' << e;
    std::cout << "\n";
  }
  return kExitFeasible;
}

int cmd_match(const InstanceFile& inst) {
  Matching m = max_matching(inst.graph);
  std::cout << "matching " << m.edges.size();
  for (EdgeId e : m.edges) std::cout << ' ' << e;
  std::cout << "\n";
  return kExitFeasible;
}

int cmd_verify_tutte(const InstanceFile& inst, const std::string& cert_path) {
  TutteCertificate cert = parse_tutte_file(read_input(cert_path));
  for (const auto& [v, c] : cert.assignment)
    if (v < 0 || v >= inst.graph.vertex_count())
      throw std::runtime_error("certificate vertex out of range");
  auto viol = verify_tutte(inst.graph, inst.terminals, cert);
  if (!viol) {
    std::cout << "ok\n";
    return kExitFeasible;
  }
  std::cout << "violation " << viol->describe() << "\n";
  return kExitInfeasible;
}

int cmd_verify_trail(const InstanceFile& inst, const std::string& trail_path) {
  Walk w = parse_trail_file(read_input(trail_path));
  auto viol = verify_alt_trail(inst.graph, inst.terminals, w);
  if (!viol) {
    std::cout << "ok\n";
    return kExitFeasible;
  }
  std::cout << "violation " << viol->describe() << "\n";
  return kExitInfeasible;
}

int run(std::vector<std::string> args) {
  AdmissibilityMethod gate = AdmissibilityMethod::MinCut;
  for (auto it = args.begin(); it != args.end();) {
    if (*it == "--oracle") {
      gate = AdmissibilityMethod::Enumeration;
      it = args.erase(it);
    } else {
      ++it;
    }
  }
  if (args.empty()) {
    std::cerr << kUsage;
    return kExitError;
  }
  const std::string cmd = args[0];
  auto expect_args = [&](size_t n) {
    if (args.size() != n) throw std::runtime_error(std::string("bad arguments for ") + cmd);
  };

  if (cmd == "reach") { expect_args(2); return cmd_reach(load_instance(args[1])); }
  if (cmd == "classify") { expect_args(2); return cmd_classify(load_instance(args[1])); }
  if (cmd == "cat") { expect_args(2); return cmd_cat(load_instance(args[1])); }
  if (cmd == "cat-edge") {
    expect_args(3);
    return cmd_cat_edge(load_instance(args[2]), std::stoi(args[1]));
  }
  if (cmd == "cycle-cover") { expect_args(2); return cmd_cycle_cover(load_instance(args[1])); }
  if (cmd == "decompose") { expect_args(2); return cmd_decompose(load_instance(args[1]), gate); }
  if (cmd == "match") { expect_args(2); return cmd_match(load_instance(args[1])); }
  if (cmd == "verify-tutte") {
    expect_args(3);
    return cmd_verify_tutte(load_instance(args[2]), args[1]);
  }
  if (cmd == "verify-trail") {
    expect_args(3);
    return cmd_verify_trail(load_instance(args[2]), args[1]);
  }
  std::cerr << "unknown command '" << cmd << "'\n" << kUsage;
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(std::move(args));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
