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

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "triad/graph.hpp"

namespace triad {

class HardwareGraph;
struct ChopSpec;

/// Minor-embedding of a logical graph G into a hardware graph U.
///
/// models()[i] is the vertex model of logical vertex i: the hardware qubits
/// that together act as vertex i. tau(k) is the hardware coupler realizing
/// logical edge k (indexed like logical_graph().edges()), or nullopt when
/// unassigned. Nothing is validated on construction; see verify_embedding.
class MinorEmbedding {
 public:
  MinorEmbedding() = default;
  MinorEmbedding(Graph logical, std::shared_ptr<const HardwareGraph> hardware,
                 std::vector<std::vector<Vertex>> models,
                 std::vector<std::optional<Edge>> tau);

  const Graph& logical_graph() const { return logical_; }
  const HardwareGraph& hardware() const { return *hardware_; }
  const std::shared_ptr<const HardwareGraph>& hardware_ptr() const {
    return hardware_;
  }
  const std::vector<std::vector<Vertex>>& models() const { return models_; }
  const std::vector<Vertex>& model(Vertex v) const {
    return models_[static_cast<std::size_t>(v)];
  }
  const std::vector<std::optional<Edge>>& tau() const { return tau_; }
  const std::optional<Edge>& tau(std::size_t logical_edge) const {
    return tau_[logical_edge];
  }

  /// Total number of qubits over all models.
  std::size_t qubits_used() const;

  // Mutable access for building fixtures and mutation tests.
  std::vector<std::vector<Vertex>>& mutable_models() { return models_; }
  std::vector<std::optional<Edge>>& mutable_tau() { return tau_; }

 private:
  Graph logical_;
  std::shared_ptr<const HardwareGraph> hardware_;
  std::vector<std::vector<Vertex>> models_;
  std::vector<std::optional<Edge>> tau_;
};

enum class ViolationKind {
  dangling_qubit,     // model names a qubit outside the hardware
  empty_model,        // model has no qubits
  overlap,            // qubit appears in more than one model
  disconnected,       // model does not induce a connected subgraph
  missing_tau,        // logical edge has no coupler
  tau_not_coupler,    // tau pair is not a hardware coupler
  tau_not_bridging,   // tau coupler does not join the two models
};

/// The definitional condition a violation breaks.
enum class Condition { disjoint, connected, edge_map };

Condition condition_of(ViolationKind kind);
std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::optional<Vertex> vertex;  // offending logical vertex
  std::optional<Edge> edge;      // offending logical edge
  std::optional<Vertex> qubit;   // offending hardware qubit
  std::string message;
};

/// Every definitional failure of `emb`; empty means the embedding is valid.
std::vector<Violation> verify_embedding(const MinorEmbedding& emb);

enum class EmbeddingClass { subgraph, topological_minor, general_minor };
std::string to_string(EmbeddingClass c);

/// Throws std::invalid_argument when emb does not verify.
EmbeddingClass classify_embedding(const MinorEmbedding& emb);

/// Embeds `g` through the TRIAD route: builds triad_chopped(|V(g)|, deg,
/// chop), maps logical vertex i to chain i and keeps tau only on E(g).
/// Graphs with fewer than two vertices get one isolated qubit per vertex.
MinorEmbedding embed_via_complete(const Graph& g, int deg,
                                  const ChopSpec& chop);

/// Contracts each class of `partition` (qubit -> logical label, -1 to drop
/// the qubit) to one vertex. Labels must be dense 0..k-1. Throws
/// GraphError if a class is not connected in `hw`.
Graph contract(const Graph& hw, std::span<const int> partition);

/// The subgraph of the hardware the embedding actually uses: model qubits,
/// couplers inside each model, and tau couplers. Returned with the model
/// partition in the same qubit numbering as the hardware.
struct EmbeddedSubgraph {
  Graph graph;
  std::vector<int> partition;
};
EmbeddedSubgraph embedded_subgraph(const MinorEmbedding& emb);

}  // namespace triad
