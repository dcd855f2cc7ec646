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

#include "triad/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "triad/hardware.hpp"

namespace triad {

ChainStrengthPolicy ChainStrengthPolicy::fixed(double value) {
  if (!(value < 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument("chain strength must be negative");
  }
  return {Kind::explicit_value, value};
}

namespace {

struct Layout {
  std::vector<int> owner;                       // qubit -> logical vertex
  std::map<Edge, Vertex> chain_edges;           // coupler -> vertex
  std::map<Edge, std::size_t> tau_edges;        // coupler -> logical edge
  std::vector<std::size_t> chain_count;         // per logical vertex
};

Layout lay_out(const MinorEmbedding& emb) {
  const Graph& hw = emb.hardware().graph();
  Layout L;
  L.owner.assign(static_cast<std::size_t>(hw.vertex_count()), -1);
  L.chain_count.assign(emb.models().size(), 0);
  for (Vertex i = 0; i < emb.logical_graph().vertex_count(); ++i) {
    for (Vertex q : emb.model(i)) L.owner[static_cast<std::size_t>(q)] = i;
  }
  for (const Edge& e : hw.edges()) {
    const int a = L.owner[static_cast<std::size_t>(e.u)];
    if (a >= 0 && a == L.owner[static_cast<std::size_t>(e.v)]) {
      L.chain_edges[e] = a;
      ++L.chain_count[static_cast<std::size_t>(a)];
    }
  }
  for (std::size_t k = 0; k < emb.tau().size(); ++k) {
    L.tau_edges[*emb.tau(k)] = k;
  }
  return L;
}

Graph instance_graph(const MinorEmbedding& emb, const Layout& L) {
  std::vector<Edge> edges;
  for (const auto& [e, _] : L.chain_edges) edges.push_back(e);
  for (const auto& [e, _] : L.tau_edges) edges.push_back(e);
  return Graph(emb.hardware().qubit_count(), std::move(edges));
}

bool is_integral(double x) { return std::isfinite(x) && x == std::trunc(x); }

}  // namespace

EmbeddedIsing embed_ising(const IsingInstance& inst, const MinorEmbedding& emb,
                          const ChainStrengthPolicy& policy) {
  if (!(emb.logical_graph() == inst.graph())) {
    throw std::invalid_argument(
        "embed_ising: embedding is for a different logical graph");
  }
  if (!verify_embedding(emb).empty()) {
    throw std::invalid_argument("embed_ising: embedding does not verify");
  }
  if (policy.kind == ChainStrengthPolicy::Kind::explicit_value &&
      !(policy.value < 0.0)) {
    throw std::invalid_argument("embed_ising: chain strength must be negative");
  }
  const Graph& g = inst.graph();
  const Layout L = lay_out(emb);
  Graph hw_graph = instance_graph(emb, L);
  const auto qubits = static_cast<std::size_t>(hw_graph.vertex_count());

  EmbeddedIsing out;
  out.embedding = emb;
  for (const auto& [e, _] : L.chain_edges) out.chain_couplers.push_back(e);

  const bool exact =
      inst.is_exact() &&
      (policy.kind == ChainStrengthPolicy::Kind::auto_sufficient ||
       is_integral(policy.value));

  if (exact) {
    std::vector<Rational> F(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex i = 0; i < g.vertex_count(); ++i) {
      if (policy.kind == ChainStrengthPolicy::Kind::explicit_value) {
        F[static_cast<std::size_t>(i)] =
            Rational(static_cast<std::int64_t>(policy.value));
        continue;
      }
      Rational margin = Rational(1) + inst.h_exact(i).abs();
      for (Vertex j : g.neighbors(i)) {
        margin = margin + inst.J_exact(*g.edge_index(i, j)).abs();
      }
      F[static_cast<std::size_t>(i)] = -margin;
    }
    std::vector<Rational> h(qubits, Rational(0));
    for (Vertex i = 0; i < g.vertex_count(); ++i) {
      const auto& model = emb.model(i);
      const Rational share =
          inst.h_exact(i) *
          Rational(1, static_cast<std::int64_t>(model.size()));
      for (Vertex q : model) h[static_cast<std::size_t>(q)] = share;
    }
    std::vector<Rational> J;
    J.reserve(hw_graph.edge_count());
    for (const Edge& e : hw_graph.edges()) {
      auto chain = L.chain_edges.find(e);
      J.push_back(chain != L.chain_edges.end()
                      ? F[static_cast<std::size_t>(chain->second)]
                      : inst.J_exact(L.tau_edges.at(e)));
    }
    Rational offset(0);
    for (Vertex i = 0; i < g.vertex_count(); ++i) {
      offset = offset +
               F[static_cast<std::size_t>(i)] *
                   Rational(static_cast<std::int64_t>(
                       L.chain_count[static_cast<std::size_t>(i)]));
      out.chain_strength.push_back(F[static_cast<std::size_t>(i)].to_double());
    }
    out.instance = IsingInstance::exact(std::move(hw_graph), h, J);
    out.exact_offset = offset;
    out.aligned_offset = offset.to_double();
    return out;
  }

  std::vector<double> F(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    if (policy.kind == ChainStrengthPolicy::Kind::explicit_value) {
      F[static_cast<std::size_t>(i)] = policy.value;
      continue;
    }
    double margin = 1.0 + std::fabs(inst.h(i));
    for (Vertex j : g.neighbors(i)) {
      margin += std::fabs(inst.J(*g.edge_index(i, j)));
    }
    F[static_cast<std::size_t>(i)] = -margin;
  }
  std::vector<double> h(qubits, 0.0);
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    const auto& model = emb.model(i);
    for (Vertex q : model) {
      h[static_cast<std::size_t>(q)] =
          inst.h(i) / static_cast<double>(model.size());
    }
  }
  std::vector<double> J;
  for (const Edge& e : hw_graph.edges()) {
    auto chain = L.chain_edges.find(e);
    J.push_back(chain != L.chain_edges.end()
                    ? F[static_cast<std::size_t>(chain->second)]
                    : inst.J(L.tau_edges.at(e)));
  }
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    out.aligned_offset += F[static_cast<std::size_t>(i)] *
                          static_cast<double>(
                              L.chain_count[static_cast<std::size_t>(i)]);
  }
  out.chain_strength = std::move(F);
  out.instance = IsingInstance(std::move(hw_graph), std::move(h), std::move(J));
  return out;
}

std::vector<Vertex> broken_chains(const SpinAssignment& s_hw,
                                  const MinorEmbedding& emb) {
  if (s_hw.size() != emb.hardware().qubit_count()) {
    throw std::invalid_argument("hardware assignment does not cover the hardware");
  }
  std::vector<Vertex> out;
  for (Vertex i = 0; i < emb.logical_graph().vertex_count(); ++i) {
    const auto& model = emb.model(i);
    const bool uniform = std::all_of(model.begin(), model.end(), [&](Vertex q) {
      return s_hw[q] == s_hw[model.front()];
    });
    if (!uniform) out.push_back(i);
  }
  return out;
}

SpinAssignment unembed(const SpinAssignment& s_hw, const MinorEmbedding& emb,
                       UnembedMode mode) {
  if (s_hw.size() != emb.hardware().qubit_count()) {
    throw std::invalid_argument("hardware assignment does not cover the hardware");
  }
  std::vector<Spin> out;
  for (Vertex i = 0; i < emb.logical_graph().vertex_count(); ++i) {
    int sum = 0;
    for (Vertex q : emb.model(i)) sum += s_hw[q];
    const auto size = static_cast<int>(emb.model(i).size());
    if (mode == UnembedMode::strict && std::abs(sum) != size) {
      throw ChainBreakError(i, "chain of logical vertex " + std::to_string(i) +
                                   " is broken");
    }
    out.push_back(sum > 0 ? Spin{1} : Spin{-1});
  }
  return SpinAssignment(std::move(out));
}

ReductionReport reduction_check(const IsingInstance& inst,
                                const MinorEmbedding& emb,
                                const ChainStrengthPolicy& policy,
                                const SolverOptions& options) {
  const EmbeddedIsing embedded = embed_ising(inst, emb, policy);
  ReductionReport r;
  r.original = solve_exhaustive(inst, options);
  r.embedded = solve_exhaustive(embedded.instance, options);
  r.aligned_offset = embedded.aligned_offset;
  r.exact = r.original.exact_min && r.embedded.exact_min &&
            embedded.exact_offset;
  auto close = [&](double a, double b) {
    return std::fabs(a - b) <=
           options.tolerance * std::max({1.0, std::fabs(a), std::fabs(b)});
  };
  if (r.exact) {
    r.energy_matches =
        *r.embedded.exact_min == *r.original.exact_min + *embedded.exact_offset;
  } else {
    r.energy_matches = close(r.embedded.min_energy,
                             r.original.min_energy + r.aligned_offset);
  }
  r.broken = broken_chains(r.embedded.canonical_argmin, emb);
  if (r.broken.empty()) {
    const SpinAssignment logical = unembed(r.embedded.canonical_argmin, emb);
    r.unembedded_energy = energy(inst, logical);
    r.unembed_attains =
        r.exact ? energy_exact(inst, logical) == *r.original.exact_min
                : close(*r.unembedded_energy, r.original.min_energy);
  }
  return r;
}

}  // namespace triad
