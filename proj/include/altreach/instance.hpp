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

#ifndef ALTREACH_INSTANCE_HPP
#define ALTREACH_INSTANCE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "altreach/certificates.hpp"
#include "altreach/graph.hpp"

namespace altreach {

/// Line-oriented instance format, '#' starts a comment:
///   graph <n>
///   edge <id> <u> <v> <color>
///   terminal <v>
///   weight <edge-id> <p>/<q>      (or an integer)
///   phi <v> <edge-id>
/// Unknown directives are rejected. Semantic errors (loops, duplicate ids)
/// are deferred to validate_graph.
struct InstanceFile {
  ColoredMultigraph graph;
  std::vector<VertexId> terminals;                 // sorted, unique
  std::optional<EdgeVector> weights;               // present iff any weight line
  std::vector<std::optional<EdgeId>> phi;          // per vertex; non-empty iff any phi line

  bool operator==(const InstanceFile& o) const;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& inst);

/// Certificate / trail files reuse the same line grammar:
///   trail v0 e1 v1 e2 v2 ...
///   tutte <v>:<color> <v>:<color> ...
Walk parse_trail_file(std::string_view text);
TutteCertificate parse_tutte_file(std::string_view text);

std::string format_trail_line(const Walk& w);
/// "tutte" plus the assignment only; evidence is recomputed by verifiers.
std::string format_tutte_line(const TutteCertificate& cert);

}  // namespace altreach

#endif  // ALTREACH_INSTANCE_HPP
