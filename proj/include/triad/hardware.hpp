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
#include <string>
#include <vector>

#include "triad/embedding.hpp"
#include "triad/graph.hpp"

namespace triad {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

double distance(const Point& a, const Point& b);

enum class CouplerKind { intra_chain, inter_chain };

/// Which chain a qubit belongs to and which virtual positions (1-based,
/// inclusive) were merged into it.
struct QubitMeta {
  Vertex chain = -1;
  int first_position = 0;
  int last_position = 0;
  friend bool operator==(const QubitMeta&, const QubitMeta&) = default;
};

/// Hardware graph U: qubits are vertices, couplers are edges, plus an
/// optional planar layout and TRIAD provenance.
///
/// `coords` and `meta` are either empty or have one entry per qubit;
/// `kinds` is empty or has one entry per coupler.
class HardwareGraph {
 public:
  HardwareGraph() = default;
  HardwareGraph(std::string name, Graph graph, std::vector<Point> coords,
                std::optional<int> degree_bound, std::vector<QubitMeta> meta,
                std::vector<CouplerKind> kinds);

  const std::string& name() const { return name_; }
  const Graph& graph() const { return graph_; }
  int qubit_count() const { return graph_.vertex_count(); }
  std::size_t coupler_count() const { return graph_.edge_count(); }
  bool has_coords() const { return !coords_.empty(); }
  const std::vector<Point>& coords() const { return coords_; }
  std::optional<int> degree_bound() const { return degree_bound_; }
  bool has_meta() const { return !meta_.empty(); }
  const std::vector<QubitMeta>& meta() const { return meta_; }
  bool has_kinds() const { return !kinds_.empty(); }
  const std::vector<CouplerKind>& kinds() const { return kinds_; }
  std::size_t count_kind(CouplerKind kind) const;

 private:
  std::string name_;
  Graph graph_;
  std::vector<Point> coords_;
  std::optional<int> degree_bound_;
  std::vector<QubitMeta> meta_;
  std::vector<CouplerKind> kinds_;
};

/// TRIAD generator output: the hardware and the canonical embedding of K_n
/// (chain i is the model of logical vertex i).
struct TriadResult {
  std::shared_ptr<const HardwareGraph> hardware;
  MinorEmbedding embedding;
};

/// Virtual TRIAD: n chains of n-1 virtual qubits, max degree 3.
///
/// Chain i uses positions 1..i for its smaller partners and i+1..n-1 for
/// its larger ones, so logical edge {i, j} (i < j) is the coupler between
/// position j of chain i and position i+1 of chain j. Qubit (i, k) has id
/// i*(n-1) + k-1.
///
/// Layout: pair (i, j) owns grid cell (row i, col j) holding chain i's
/// qubit at (j, i+0.25) and chain j's at (j+0.25, i). Every coupler is at
/// most sqrt(2.125) < 1.5 grid units long for every n.
TriadResult triad_virtual(int n);

/// Coupler length bound the virtual layout meets for every n.
inline constexpr double kVirtualLengthBound = 1.5;

enum class ChopMode { optimal, uniform };

struct ChopSpec {
  ChopMode mode = ChopMode::optimal;
  int segment = 0;  // positions per segment in uniform mode

  static ChopSpec optimal() { return {}; }
  static ChopSpec uniform(int c) { return {ChopMode::uniform, c}; }
};

/// max(1, ceil((n-3)/(deg-2))): physical qubits per chain in optimal mode.
int chopped_segments_per_chain(int n, int deg);

/// Sizes of the contiguous segments one chain of n-1 virtual positions is
/// cut into. Throws std::invalid_argument on infeasible arguments.
std::vector<int> chop_sizes(int n, int deg, const ChopSpec& chop);

/// TRIAD with each chain's virtual qubits merged into contiguous segments,
/// one physical qubit per segment, so no qubit exceeds `deg` couplers.
/// Physical qubits sit at the centroid of their merged virtual slots.
TriadResult triad_chopped(int n, int deg, const ChopSpec& chop = {});

/// Coupler length bound the chopped layout meets: 1.5 * (deg - 1).
inline double chopped_length_bound(int deg) { return 1.5 * (deg - 1); }

struct ConstraintViolation {
  std::optional<Vertex> qubit;
  std::optional<Edge> coupler;
  std::string reason;
};

struct ConstraintReport {
  int max_degree = 0;
  bool degree_ok = true;
  double max_edge_length = 0.0;
  bool length_ok = true;
  std::vector<ConstraintViolation> violations;

  bool ok() const { return degree_ok && length_ok; }
};

/// Degree and Euclidean coupler-length check of a layout. Crossings are
/// allowed. Throws std::invalid_argument if the hardware has no coords.
ConstraintReport check_physical(const HardwareGraph& hw, int deg_max,
                                double len_max);

enum class BlockKind { clique, biclique };

struct Block {
  BlockKind kind = BlockKind::clique;
  std::vector<Vertex> left;
  std::vector<Vertex> right;  // empty for cliques

  std::size_t edge_count() const;
  std::vector<Edge> edges() const;
};

struct CompleteDecomposition {
  std::vector<Block> blocks;
};

/// Partition of E(K_n), n = c * 2^k, into cliques K_c and bicliques
/// K_{c,c} by recursive halving. Throws std::invalid_argument otherwise.
CompleteDecomposition decompose_complete(int n, int c);

}  // namespace triad
