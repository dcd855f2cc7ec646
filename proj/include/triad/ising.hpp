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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "triad/graph.hpp"
#include "triad/rational.hpp"

namespace triad {

using Spin = std::int8_t;

/// One spin in {-1, +1} per vertex.
class SpinAssignment {
 public:
  SpinAssignment() = default;
  explicit SpinAssignment(std::vector<Spin> spins);

  /// All spins -1 except where bit (n-1-v) of `index` is set. This is the
  /// lexicographic numbering (-1 < +1, vertex 0 most significant).
  static SpinAssignment from_index(int n, std::uint64_t index);
  std::uint64_t index() const;

  int size() const { return static_cast<int>(spins_.size()); }
  Spin operator[](Vertex v) const { return spins_[static_cast<std::size_t>(v)]; }
  std::span<const Spin> spins() const { return spins_; }
  SpinAssignment flipped() const;

  /// "-1,+1,..." form used by reports.
  std::string str() const;

  friend bool operator==(const SpinAssignment&,
                         const SpinAssignment&) = default;

 private:
  std::vector<Spin> spins_;
};

/// Biases h (per vertex) and couplings J (per edge, indexed like
/// graph().edges()) of a classical Ising energy
///
///   E(s) = sum_i h_i s_i + sum_{ij} J_ij s_i s_j.
///
/// When every weight is a multiple of 1/denominator for a known integer
/// denominator the instance also carries the scaled integer numerators and
/// all energy comparisons are exact.
class IsingInstance {
 public:
  IsingInstance() = default;

  /// Exact form is detected when every weight is an integer.
  IsingInstance(Graph graph, std::vector<double> h, std::vector<double> J);

  /// Exact instance with weights numerator/denominator.
  static IsingInstance scaled(Graph graph, std::int64_t denominator,
                              std::vector<std::int64_t> h_num,
                              std::vector<std::int64_t> J_num);
  static IsingInstance exact(Graph graph, const std::vector<Rational>& h,
                             const std::vector<Rational>& J);

  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  std::span<const double> h() const { return h_; }
  std::span<const double> J() const { return J_; }
  double h(Vertex v) const { return h_[static_cast<std::size_t>(v)]; }
  double J(std::size_t edge) const { return J_[edge]; }

  bool is_exact() const { return denominator_ > 0; }
  /// 0 when the instance is not exact.
  std::int64_t denominator() const { return denominator_; }
  std::span<const std::int64_t> h_scaled() const { return h_num_; }
  std::span<const std::int64_t> J_scaled() const { return J_num_; }
  Rational h_exact(Vertex v) const;
  Rational J_exact(std::size_t edge) const;

 private:
  void validate() const;

  Graph graph_;
  std::vector<double> h_;
  std::vector<double> J_;
  std::int64_t denominator_ = 0;
  std::vector<std::int64_t> h_num_;
  std::vector<std::int64_t> J_num_;
};

/// Energy of `s`. Throws std::invalid_argument if s does not cover exactly
/// the vertices of inst.
double energy(const IsingInstance& inst, const SpinAssignment& s);

/// Energy in exact arithmetic; requires inst.is_exact().
Rational energy_exact(const IsingInstance& inst, const SpinAssignment& s);

/// Disjoint union: vertices of b are shifted by a.vertex_count().
IsingInstance disjoint_union(const IsingInstance& a, const IsingInstance& b);

struct GroundStateResult {
  double min_energy = 0.0;
  std::optional<Rational> exact_min;  // set for exact instances
  SpinAssignment canonical_argmin;    // lexicographically smallest minimizer
  std::uint64_t degeneracy = 0;
};

struct SolverOptions {
  int max_spins = 26;
  int workers = 0;  // 0: hardware concurrency
  double tolerance = 1e-9;  // ties for inexact instances
};

class SolverCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumerates all 2^n assignments. Output is bitwise identical for any
/// worker count.
GroundStateResult solve_exhaustive(const IsingInstance& inst,
                                   const SolverOptions& options = {});

}  // namespace triad
