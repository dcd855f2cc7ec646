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

#include <optional>
#include <stdexcept>
#include <vector>

#include "triad/embedding.hpp"
#include "triad/ising.hpp"
#include "triad/rational.hpp"

namespace triad {

/// Ferromagnetic strength placed on the couplers inside each vertex model.
struct ChainStrengthPolicy {
  enum class Kind { auto_sufficient, explicit_value };
  Kind kind = Kind::auto_sufficient;
  double value = 0.0;  // explicit strength, must be < 0

  static ChainStrengthPolicy automatic() { return {}; }
  static ChainStrengthPolicy fixed(double value);
};

/// Ising instance on the hardware qubits obtained by pushing an instance on
/// G through a minor-embedding.
struct EmbeddedIsing {
  IsingInstance instance;               // vertices = all hardware qubits
  std::vector<Edge> chain_couplers;     // sorted
  std::vector<double> chain_strength;   // F_i per logical vertex
  double aligned_offset = 0.0;          // sum_i F_i * |chain couplers of i|
  std::optional<Rational> exact_offset; // set when instance.is_exact()
  MinorEmbedding embedding;
};

/// Builds the embedded instance:
///  - each qubit of model(i) gets bias h_i / |model(i)|,
///  - tau({i,j}) gets J_ij,
///  - every coupler inside model(i) gets F_i,
///  - all other couplers are left out of the instance graph.
/// auto_sufficient uses F_i = -(1 + |h_i| + sum_j |J_ij|), which makes
/// cutting chain i cost more than anything the cut could gain.
///
/// Throws std::invalid_argument if emb does not verify or its logical graph
/// differs from inst's.
EmbeddedIsing embed_ising(const IsingInstance& inst, const MinorEmbedding& emb,
                          const ChainStrengthPolicy& policy = {});

/// Logical vertices whose model is not uniform under s_hw.
std::vector<Vertex> broken_chains(const SpinAssignment& s_hw,
                                  const MinorEmbedding& emb);

enum class UnembedMode { strict, majority };

class ChainBreakError : public std::runtime_error {
 public:
  ChainBreakError(Vertex vertex, const std::string& what)
      : std::runtime_error(what), vertex_(vertex) {}
  Vertex vertex() const { return vertex_; }

 private:
  Vertex vertex_;
};

/// Maps a hardware assignment back to G. Strict mode throws ChainBreakError
/// on the first non-uniform model; majority mode breaks ties to -1.
SpinAssignment unembed(const SpinAssignment& s_hw, const MinorEmbedding& emb,
                       UnembedMode mode = UnembedMode::strict);

struct ReductionReport {
  GroundStateResult original;
  GroundStateResult embedded;
  double aligned_offset = 0.0;
  bool exact = false;               // comparisons done in exact arithmetic
  bool energy_matches = false;      // min(embedded) == min(original) + offset
  std::vector<Vertex> broken;       // chains broken in embedded argmin
  bool unembed_attains = false;     // strict unembed reaches min(original)
  std::optional<double> unembedded_energy;

  bool ok() const { return energy_matches && broken.empty() && unembed_attains; }
};

/// Solves both instances exhaustively and checks the reduction.
ReductionReport reduction_check(const IsingInstance& inst,
                                const MinorEmbedding& emb,
                                const ChainStrengthPolicy& policy = {},
                                const SolverOptions& options = {});

}  // namespace triad
