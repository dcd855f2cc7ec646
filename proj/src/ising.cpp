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

#include "triad/ising.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace triad {

namespace {

constexpr double kMaxExactInteger = 9007199254740992.0;  // 2^53

bool all_integral(std::span<const double> values) {
  for (double x : values) {
    if (!std::isfinite(x) || x != std::trunc(x) ||
        std::fabs(x) > kMaxExactInteger) {
      return false;
    }
  }
  return true;
}

std::vector<std::int64_t> to_int(std::span<const double> values) {
  std::vector<std::int64_t> out;
  out.reserve(values.size());
  for (double x : values) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

std::vector<double> to_real(std::span<const std::int64_t> nums,
                            std::int64_t den) {
  std::vector<double> out;
  out.reserve(nums.size());
  for (std::int64_t x : nums) out.push_back(Rational(x, den).to_double());
  return out;
}

}  // namespace

SpinAssignment::SpinAssignment(std::vector<Spin> spins)
    : spins_(std::move(spins)) {
  for (Spin s : spins_) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("spin values must be -1 or +1");
    }
  }
}

SpinAssignment SpinAssignment::from_index(int n, std::uint64_t index) {
  std::vector<Spin> spins(static_cast<std::size_t>(n), Spin{-1});
  for (int v = 0; v < n; ++v) {
    if ((index >> (n - 1 - v)) & 1u) spins[static_cast<std::size_t>(v)] = 1;
  }
  return SpinAssignment(std::move(spins));
}

std::uint64_t SpinAssignment::index() const {
  std::uint64_t index = 0;
  for (Spin s : spins_) index = (index << 1) | (s > 0 ? 1u : 0u);
  return index;
}

SpinAssignment SpinAssignment::flipped() const {
  std::vector<Spin> out(spins_);
  for (Spin& s : out) s = static_cast<Spin>(-s);
  return SpinAssignment(std::move(out));
}

std::string SpinAssignment::str() const {
  std::string out;
  for (std::size_t i = 0; i < spins_.size(); ++i) {
    if (i) out += ',';
    out += spins_[i] > 0 ? "+1" : "-1";
  }
  return out;
}

IsingInstance::IsingInstance(Graph graph, std::vector<double> h,
                             std::vector<double> J)
    : graph_(std::move(graph)), h_(std::move(h)), J_(std::move(J)) {
  validate();
  if (all_integral(h_) && all_integral(J_)) {
    denominator_ = 1;
    h_num_ = to_int(h_);
    J_num_ = to_int(J_);
  }
}

IsingInstance IsingInstance::scaled(Graph graph, std::int64_t denominator,
                                    std::vector<std::int64_t> h_num,
                                    std::vector<std::int64_t> J_num) {
  if (denominator <= 0) {
    throw std::invalid_argument("denominator must be positive");
  }
  IsingInstance inst;
  inst.graph_ = std::move(graph);
  inst.h_ = to_real(h_num, denominator);
  inst.J_ = to_real(J_num, denominator);
  inst.validate();
  // Keep |E| * denominator representable in the solver's int64 sums.
  __int128 total = 0;
  for (std::int64_t x : h_num) total += x < 0 ? -static_cast<__int128>(x) : x;
  for (std::int64_t x : J_num) total += x < 0 ? -static_cast<__int128>(x) : x;
  if (total > std::numeric_limits<std::int64_t>::max() / 4) {
    throw std::overflow_error("Ising weights too large for exact arithmetic");
  }
  inst.denominator_ = denominator;
  inst.h_num_ = std::move(h_num);
  inst.J_num_ = std::move(J_num);
  return inst;
}

IsingInstance IsingInstance::exact(Graph graph, const std::vector<Rational>& h,
                                   const std::vector<Rational>& J) {
  std::int64_t den = 1;
  auto absorb = [&den](const Rational& r) {
    const std::int64_t g = std::gcd(den, r.den());
    den = (Rational(den / g) * Rational(r.den())).num();
  };
  for (const Rational& r : h) absorb(r);
  for (const Rational& r : J) absorb(r);
  auto scale = [den](const std::vector<Rational>& values) {
    std::vector<std::int64_t> out;
    out.reserve(values.size());
    for (const Rational& r : values) out.push_back((r * Rational(den)).num());
    return out;
  };
  return scaled(std::move(graph), den, scale(h), scale(J));
}

void IsingInstance::validate() const {
  if (h_.size() != static_cast<std::size_t>(graph_.vertex_count())) {
    throw std::invalid_argument("h must have one entry per vertex");
  }
  if (J_.size() != graph_.edge_count()) {
    throw std::invalid_argument("J must have one entry per edge");
  }
  for (double x : h_) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite bias");
  }
  for (double x : J_) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite coupling");
  }
}

Rational IsingInstance::h_exact(Vertex v) const {
  if (!is_exact()) throw std::logic_error("instance is not exact");
  return Rational(h_num_[static_cast<std::size_t>(v)], denominator_);
}

Rational IsingInstance::J_exact(std::size_t edge) const {
  if (!is_exact()) throw std::logic_error("instance is not exact");
  return Rational(J_num_[edge], denominator_);
}

namespace {

void check_domain(const IsingInstance& inst, const SpinAssignment& s) {
  if (s.size() != inst.vertex_count()) {
    throw std::invalid_argument(
        "spin assignment covers " + std::to_string(s.size()) +
        " vertices, instance has " + std::to_string(inst.vertex_count()));
  }
}

}  // namespace

double energy(const IsingInstance& inst, const SpinAssignment& s) {
  check_domain(inst, s);
  if (inst.is_exact()) return energy_exact(inst, s).to_double();
  double e = 0.0;
  for (Vertex v = 0; v < inst.vertex_count(); ++v) e += inst.h(v) * s[v];
  const auto edges = inst.graph().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    e += inst.J(k) * s[edges[k].u] * s[edges[k].v];
  }
  return e;
}

Rational energy_exact(const IsingInstance& inst, const SpinAssignment& s) {
  check_domain(inst, s);
  if (!inst.is_exact()) throw std::logic_error("instance is not exact");
  std::int64_t e = 0;
  const auto h = inst.h_scaled();
  for (Vertex v = 0; v < inst.vertex_count(); ++v) {
    e += h[static_cast<std::size_t>(v)] * s[v];
  }
  const auto J = inst.J_scaled();
  const auto edges = inst.graph().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    e += J[k] * s[edges[k].u] * s[edges[k].v];
  }
  return Rational(e, inst.denominator());
}

IsingInstance disjoint_union(const IsingInstance& a, const IsingInstance& b) {
  const int shift = a.vertex_count();
  std::vector<Edge> edges(a.graph().edges().begin(), a.graph().edges().end());
  for (const Edge& e : b.graph().edges()) {
    edges.emplace_back(e.u + shift, e.v + shift);
  }
  Graph g(shift + b.vertex_count(), std::move(edges));
  // Edges of b sort after those of a because all endpoints are shifted.
  if (a.is_exact() && b.is_exact()) {
    std::vector<Rational> h, J;
    for (Vertex v = 0; v < a.vertex_count(); ++v) h.push_back(a.h_exact(v));
    for (Vertex v = 0; v < b.vertex_count(); ++v) h.push_back(b.h_exact(v));
    for (std::size_t k = 0; k < a.graph().edge_count(); ++k) {
      J.push_back(a.J_exact(k));
    }
    for (std::size_t k = 0; k < b.graph().edge_count(); ++k) {
      J.push_back(b.J_exact(k));
    }
    return IsingInstance::exact(std::move(g), h, J);
  }
  std::vector<double> h(a.h().begin(), a.h().end());
  h.insert(h.end(), b.h().begin(), b.h().end());
  std::vector<double> J(a.J().begin(), a.J().end());
  J.insert(J.end(), b.J().begin(), b.J().end());
  return IsingInstance(std::move(g), std::move(h), std::move(J));
}

}  // namespace triad
