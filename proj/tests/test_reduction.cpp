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

#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "triad/hardware.hpp"
#include "triad/reduction.hpp"

namespace triad {
namespace {

using testing::random_instance;

// K2 on a 4-qubit path: models {0,1} and {2,3}, tau = (1,2).
MinorEmbedding k2_on_path() {
  auto hw = std::make_shared<const HardwareGraph>(
      "path4", testing::path_graph(4), std::vector<Point>{}, std::nullopt,
      std::vector<QubitMeta>{}, std::vector<CouplerKind>{});
  return MinorEmbedding(complete_graph(2), hw, {{0, 1}, {2, 3}}, {Edge(1, 2)});
}

SpinAssignment lift(const SpinAssignment& logical, const MinorEmbedding& emb) {
  std::vector<Spin> hw(static_cast<std::size_t>(emb.hardware().qubit_count()), Spin{-1});
  for (Vertex i = 0; i < logical.size(); ++i) {
    for (Vertex q : emb.model(i)) hw[static_cast<std::size_t>(q)] = logical[i];
  }
  return SpinAssignment(std::move(hw));
}

TEST_CASE("subgraph embeddings reproduce the instance") {
  std::mt19937_64 rng(1);
  const IsingInstance inst = random_instance(complete_graph(4), rng, -2, 2);
  const auto r = triad_chopped(4, 3);
  const EmbeddedIsing e = embed_ising(inst, r.embedding);
  CHECK(e.chain_couplers.empty());
  CHECK(*e.exact_offset == Rational(0));
  CHECK(e.instance.graph() == inst.graph());
  for (Vertex v = 0; v < 4; ++v) CHECK(e.instance.h(v) == inst.h(v));
  for (std::size_t k = 0; k < 6; ++k) CHECK(e.instance.J(k) == inst.J(k));
  CHECK(reduction_check(inst, r.embedding).ok());
}

TEST_CASE("K2 on two 2-qubit chains with F = -3") {
  const IsingInstance inst(complete_graph(2), {0.0, 0.0}, {1.0});
  const MinorEmbedding emb = k2_on_path();
  const EmbeddedIsing e = embed_ising(inst, emb, ChainStrengthPolicy::fixed(-3.0));
  CHECK(e.instance.vertex_count() == 4);
  CHECK(*e.exact_offset == Rational(-6));
  const auto oracle = testing::brute_force(testing::to_dense_scaled(e.instance).dense);
  CHECK(oracle.min == -7);
  CHECK(*solve_exhaustive(e.instance).exact_min == Rational(-7));
}

TEST_CASE("auto chain strength keeps K5 chains aligned in triad_chopped(5, 3)") {
  std::mt19937_64 rng(55);
  const auto r = triad_chopped(5, 3);
  REQUIRE(r.hardware->qubit_count() == 10);
  for (int trial = 0; trial < 20; ++trial) {
    const IsingInstance inst = random_instance(complete_graph(5), rng, -1, 1);
    const EmbeddedIsing e = embed_ising(inst, r.embedding);
    const auto oracle = testing::brute_force(testing::to_dense_scaled(e.instance).dense);
    const auto ground = SpinAssignment(std::vector<Spin>(oracle.first.begin(), oracle.first.end()));
    CHECK(broken_chains(ground, r.embedding).empty());
  }
}

TEST_CASE("auto chain strength value") {
  const IsingInstance inst(testing::path_graph(3), {2.0, -1.0, 0.0}, {-2.0, 1.0});
  const EmbeddedIsing e =
      embed_ising(inst, embed_via_complete(inst.graph(), 3, ChopSpec::uniform(1)));
  REQUIRE(e.chain_strength.size() == 3);
  CHECK(e.chain_strength[0] == -5.0);  // 1 + |2| + |-2|
  CHECK(e.chain_strength[1] == -5.0);  // 1 + |-1| + |-2| + |1|
  CHECK(e.chain_strength[2] == -2.0);  // 1 + |0| + |1|
}

TEST_CASE("embedded instance structure") {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 6; ++n) {
    const Graph g = testing::random_graph(n, 0.6, rng);
    const IsingInstance inst = random_instance(g, rng, -2, 2);
    for (const MinorEmbedding& emb :
         {embed_via_complete(g, 3, ChopSpec::optimal()), embed_via_complete(g, 6, ChopSpec::optimal())}) {
      const EmbeddedIsing e = embed_ising(inst, emb);
      // bias conservation
      for (Vertex i = 0; i < n; ++i) {
        Rational sum(0);
        for (Vertex q : emb.model(i)) sum = sum + e.instance.h_exact(q);
        CHECK(sum == inst.h_exact(i));
      }
      // tau couplers carry J, chain couplers carry F
      for (std::size_t k = 0; k < g.edge_count(); ++k) {
        const auto idx = e.instance.graph().edge_index(emb.tau(k)->u, emb.tau(k)->v);
        REQUIRE(idx);
        CHECK(e.instance.J_exact(*idx) == inst.J_exact(k));
      }
      for (const Edge& c : e.chain_couplers) {
        const auto idx = e.instance.graph().edge_index(c.u, c.v);
        REQUIRE(idx);
        CHECK(e.instance.J(*idx) < 0.0);
      }
      CHECK(e.instance.graph().edge_count() == e.chain_couplers.size() + g.edge_count());
    }
  }
}

TEST_CASE("aligned assignments differ from the original by the offset") {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const Graph g = testing::random_graph(n, 0.7, rng);
      const IsingInstance inst = random_instance(g, rng, -2, 2);
      for (const MinorEmbedding& emb :
           {embed_via_complete(g, 3, ChopSpec::optimal()),
            embed_via_complete(g, 3, ChopSpec::uniform(1))}) {
        const EmbeddedIsing e = embed_ising(inst, emb);
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
          const auto s = SpinAssignment::from_index(n, idx);
          const auto hw = lift(s, emb);
          CHECK(energy_exact(e.instance, hw) == energy_exact(inst, s) + *e.exact_offset);
          CHECK(unembed(hw, emb) == s);
        }
      }
    }
  }
}

TEST_CASE("reduction holds for random instances on small graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    const Graph g = testing::random_graph(n, 0.8, rng);
    const IsingInstance inst = random_instance(g, rng, -2, 2);
    const int deg = trial % 2 ? 3 : 6;
    const auto report = reduction_check(inst, embed_via_complete(g, deg, ChopSpec::optimal()));
    INFO("trial " << trial);
    CHECK(report.exact);
    CHECK(report.energy_matches);
    CHECK(report.broken.empty());
    CHECK(report.unembed_attains);
  }
}

TEST_CASE("reduction through the lattice fixture") {
  std::mt19937_64 rng(77);
  const MinorEmbedding emb = testing::lattice_fixture();
  for (int trial = 0; trial < 3; ++trial) {
    const IsingInstance inst = random_instance(emb.logical_graph(), rng, -2, 2);
    CHECK(reduction_check(inst, emb).ok());
  }
}

TEST_CASE("weak explicit chain strength breaks chains") {
  // frustrated triangle with heavy antiferromagnetic couplings
  const IsingInstance inst(complete_graph(3), {0.0, 0.0, 0.0}, {2.0, 2.0, 2.0});
  const auto report =
      reduction_check(inst, triad_virtual(3).embedding, ChainStrengthPolicy::fixed(-0.01));
  CHECK_FALSE(report.exact);
  CHECK_FALSE(report.energy_matches);
  CHECK_FALSE(report.broken.empty());
  CHECK_FALSE(report.ok());
  // the same instance is fine with the automatic margin
  CHECK(reduction_check(inst, triad_virtual(3).embedding).ok());
}

TEST_CASE("unembed modes") {
  const MinorEmbedding emb = triad_virtual(4).embedding;  // chains of 3
  std::vector<Spin> all_down(12, Spin{-1});
  CHECK(unembed(SpinAssignment(all_down), emb) == SpinAssignment({-1, -1, -1, -1}));

  std::vector<Spin> split = all_down;
  split[static_cast<std::size_t>(emb.model(1)[0])] = 1;
  split[static_cast<std::size_t>(emb.model(1)[1])] = 1;
  const SpinAssignment s(split);
  CHECK(unembed(s, emb, UnembedMode::majority) == SpinAssignment({-1, 1, -1, -1}));
  CHECK(broken_chains(s, emb) == std::vector<Vertex>{1});
  try {
    unembed(s, emb, UnembedMode::strict);
    FAIL("strict unembed accepted a broken chain");
  } catch (const ChainBreakError& e) {
    CHECK(e.vertex() == 1);
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }

  // 2-qubit chain split 1/1 breaks toward -1
  const MinorEmbedding pair = k2_on_path();
  CHECK(unembed(SpinAssignment({1, -1, 1, 1}), pair, UnembedMode::majority) ==
        SpinAssignment({-1, 1}));
}

TEST_CASE("embed_ising rejects bad inputs") {
  const IsingInstance inst(complete_graph(3), {0, 0, 0}, {1, 1, 1});
  MinorEmbedding broken = triad_virtual(3).embedding;
  broken.mutable_tau()[0].reset();
  CHECK_THROWS_AS(embed_ising(inst, broken), std::invalid_argument);
  CHECK_THROWS_AS(embed_ising(inst, triad_virtual(4).embedding), std::invalid_argument);
  CHECK_THROWS_AS(ChainStrengthPolicy::fixed(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ChainStrengthPolicy::fixed(1.5), std::invalid_argument);
}

}  // namespace
}  // namespace triad
