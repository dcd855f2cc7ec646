// Copyright 2026 The Triad Authors
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

#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "triad/embedding.hpp"
#include "triad/hardware.hpp"
#include "triad/ising.hpp"
#include "triad/reduction.hpp"

namespace triad::io {

using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

/// Malformed or inconsistent input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ArtifactKind {
  graph,
  hardware,
  embedding,
  ising,
  embedded_ising,
  report
};

std::string to_string(ArtifactKind kind);
ArtifactKind artifact_kind_from_string(const std::string& name);

/// {"artifact_kind", "format_version", "payload"}. Keys are emitted sorted
/// and doubles in shortest round-trip form, so parse -> dump is the
/// identity on anything this module wrote.
struct Manifest {
  ArtifactKind kind = ArtifactKind::report;
  Json payload;

  Json to_json() const;
  std::string dump() const;
  static Manifest from_json(const Json& j);
  static Manifest parse(const std::string& text);
};

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json hardware_to_json(const HardwareGraph& hw);
HardwareGraph hardware_from_json(const Json& j);

Json embedding_to_json(const MinorEmbedding& emb);
MinorEmbedding embedding_from_json(const Json& j);

Json spins_to_json(const SpinAssignment& s);
SpinAssignment spins_from_json(const Json& j);

Json ising_to_json(const IsingInstance& inst);
IsingInstance ising_from_json(const Json& j);

Json embedded_ising_to_json(const EmbeddedIsing& e);
EmbeddedIsing embedded_ising_from_json(const Json& j);

Json ground_state_to_json(const GroundStateResult& r);
Json reduction_report_to_json(const ReductionReport& r);

Manifest wrap(const Graph& g);
Manifest wrap(const HardwareGraph& hw);
Manifest wrap(const MinorEmbedding& emb);
Manifest wrap(const IsingInstance& inst);
Manifest wrap(const EmbeddedIsing& e);

/// Reads a file, or stdin when path is "-".
std::string read_text(const std::string& path);
/// Writes a file, or stdout when path is "-".
void write_text(const std::string& path, const std::string& text);

/// Graphviz rendering. Qubits are coloured by chain and placed at their
/// layout coordinates; tau couplers are bold when an embedding is given.
std::string to_dot(const Graph& g);
std::string to_dot(const HardwareGraph& hw, const MinorEmbedding* emb = nullptr);

/// SVG 1.1 drawing at layout coordinates (40 px per grid unit).
std::string to_svg(const Graph& g);
std::string to_svg(const HardwareGraph& hw, const MinorEmbedding* emb = nullptr);

}  // namespace triad::io
