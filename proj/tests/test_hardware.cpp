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
#include <cmath>

#include "support/oracles.hpp"
#include "triad/embedding.hpp"
#include "triad/hardware.hpp"

namespace triad {
namespace {

// Count couplers between every pair of chains from the qubit provenance
// alone; each logical pair must be linked exactly once.
bool one_coupler_per_chain_pair(const HardwareGraph& hw, int n) {
  std::vector<int> links(static_cast<std::size_t>(n * n), 0);
  for (const Edge& e : hw.graph().edges()) {
    const int a = hw.meta()[static_cast<std::size_t>(e.u)].chain;
    const int b = hw.meta()[static_cast<std::size_t>(e.v)].chain;
    if (a != b) ++links[static_cast<std::size_t>(std::min(a, b) * n + std::max(a, b))];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (links[static_cast<std::size_t>(i * n + j)] != 1) return false;
    }
  }
  return true;
}

TEST_CASE("triad_virtual small cases") {
  SECTION("n = 2") {
    const auto r = triad_virtual(2);
    CHECK(r.hardware->qubit_count() == 2);
    CHECK(r.hardware->count_kind(CouplerKind::inter_chain) == 1);
    CHECK(r.hardware->count_kind(CouplerKind::intra_chain) == 0);
    const auto& c = r.hardware->coords();
    CHECK(distance(c[0], c[1]) == Catch::Approx(0.25 * std::sqrt(2.0)));
  }
  SECTION("n = 3: chains of two") {
    const auto r = triad_virtual(3);
    CHECK(r.hardware->qubit_count() == 6);
    for (const auto& m : r.embedding.models()) CHECK(m.size() == 2);
  }
  SECTION("n = 8: chains of seven") {
    const auto r = triad_virtual(8);
    CHECK(r.hardware->qubit_count() == 56);
    for (const auto& m : r.embedding.models()) CHECK(m.size() == 7);
  }
  CHECK_THROWS_AS(triad_virtual(1), std::invalid_argument);
}

TEST_CASE("triad_virtual coupler counts by explicit enumeration") {
  const auto r = triad_virtual(8);
  const HardwareGraph& hw = *r.hardware;
  std::size_t intra = 0, inter = 0;
  for (const Edge& e : hw.graph().edges()) {
    const bool same = hw.meta()[static_cast<std::size_t>(e.u)].chain ==
                      hw.meta()[static_cast<std::size_t>(e.v)].chain;
    (same ? intra : inter) += 1;
  }
  CHECK(intra == 48);
  CHECK(inter == 28);
  CHECK(hw.count_kind(CouplerKind::intra_chain) == intra);
  CHECK(hw.count_kind(CouplerKind::inter_chain) == inter);
}

TEST_CASE("triad_virtual structure for n in 2..64") {
  for (int n = 2; n <= 64; ++n) {
    const auto r = triad_virtual(n);
    const HardwareGraph& hw = *r.hardware;
    INFO("n = " << n);
    REQUIRE(hw.qubit_count() == n * (n - 1));
    CHECK(hw.count_kind(CouplerKind::intra_chain) == static_cast<std::size_t>(n * (n - 2)));
    CHECK(hw.count_kind(CouplerKind::inter_chain) == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(hw.graph().max_degree() <= 3);
    CHECK(one_coupler_per_chain_pair(hw, n));
    // every virtual qubit carries exactly one inter-chain coupler
    std::vector<int> inter(static_cast<std::size_t>(hw.qubit_count()), 0);
    const auto edges = hw.graph().edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (hw.kinds()[k] == CouplerKind::inter_chain) {
        ++inter[static_cast<std::size_t>(edges[k].u)];
        ++inter[static_cast<std::size_t>(edges[k].v)];
      }
    }
    CHECK(std::all_of(inter.begin(), inter.end(), [](int x) { return x == 1; }));
    CHECK(verify_embedding(r.embedding).empty());
  }
}

TEST_CASE("virtual layout coupler length is independent of n") {
  const double at8 = check_physical(*triad_virtual(8).hardware, 3, 1.5).max_edge_length;
  CHECK(at8 <= 1.5);
  CHECK(at8 == Catch::Approx(std::sqrt(2.125)));
  for (int n = 3; n <= 64; ++n) {
    const auto report = check_physical(*triad_virtual(n).hardware, 3, kVirtualLengthBound);
    INFO("n = " << n);
    CHECK(report.ok());
    CHECK(report.max_edge_length == at8);
  }
}

TEST_CASE("chop sizes") {
  CHECK(chop_sizes(8, 6, ChopSpec::optimal()) == std::vector<int>{3, 4});
  CHECK(chop_sizes(4, 3, ChopSpec::optimal()) == std::vector<int>{3});
  CHECK(chop_sizes(8, 4, ChopSpec::optimal()).size() == 3);
  CHECK(chop_sizes(2, 3, ChopSpec::optimal()) == std::vector<int>{1});
  CHECK(chop_sizes(3, 5, ChopSpec::optimal()) == std::vector<int>{2});
  CHECK(chop_sizes(13, 6, ChopSpec::uniform(4)) == std::vector<int>{4, 4, 4});
  CHECK(chop_sizes(12, 6, ChopSpec::uniform(4)) == std::vector<int>{4, 4, 3});
  CHECK_THROWS_AS(chop_sizes(13, 5, ChopSpec::uniform(4)), std::invalid_argument);
  CHECK_THROWS_AS(chop_sizes(13, 6, ChopSpec::uniform(0)), std::invalid_argument);
  CHECK_THROWS_AS(chop_sizes(8, 2, ChopSpec::optimal()), std::invalid_argument);
  // a single segment still has to respect the degree bound
  CHECK_THROWS_AS(chop_sizes(8, 4, ChopSpec::uniform(10)), std::invalid_argument);
}

TEST_CASE("optimal chop sizes respect capacities and balance") {
  for (int n = 2; n <= 64; ++n) {
    for (int deg = 3; deg <= 8; ++deg) {
      const auto sizes = chop_sizes(n, deg, ChopSpec::optimal());
      INFO("n = " << n << " deg = " << deg);
      CHECK(static_cast<int>(sizes.size()) == chopped_segments_per_chain(n, deg));
      CHECK(std::accumulate(sizes.begin(), sizes.end(), 0) == n - 1);
      if (sizes.size() == 1) {
        CHECK(sizes[0] <= deg);
        continue;
      }
      CHECK(sizes.front() <= deg - 1);
      CHECK(sizes.back() <= deg - 1);
      CHECK(std::abs(sizes.front() - sizes.back()) <= 1);
      for (std::size_t t = 1; t + 1 < sizes.size(); ++t) {
        CHECK(sizes[t] >= 1);
        CHECK(sizes[t] <= deg - 2);
        CHECK(std::abs(sizes[t] - sizes[1]) <= 1);
      }
    }
  }
}

TEST_CASE("triad_chopped examples") {
  SECTION("n = 8, deg = 6") {
    const auto r = triad_chopped(8, 6);
    CHECK(r.hardware->qubit_count() == 16);
    const auto& model = r.embedding.model(0);
    REQUIRE(model.size() == 2);
    const auto& meta = r.hardware->meta();
    CHECK(meta[static_cast<std::size_t>(model[0])].first_position == 1);
    CHECK(meta[static_cast<std::size_t>(model[0])].last_position == 3);
    CHECK(meta[static_cast<std::size_t>(model[1])].last_position == 7);
  }
  SECTION("n = 4, deg = 3 collapses to K4") {
    const auto r = triad_chopped(4, 3);
    CHECK(r.hardware->qubit_count() == 4);
    CHECK(r.hardware->graph() == complete_graph(4));
    CHECK(classify_embedding(r.embedding) == EmbeddingClass::subgraph);
  }
  SECTION("n = 8, deg = 4") {
    const auto r = triad_chopped(8, 4);
    CHECK(r.hardware->qubit_count() == 24);
    CHECK(r.embedding.model(3).size() == 3);
    CHECK(verify_embedding(r.embedding).empty());
  }
  SECTION("n = 2 and n = 3") {
    for (int deg = 3; deg <= 8; ++deg) {
      CHECK(triad_chopped(2, deg).hardware->qubit_count() == 2);
      CHECK(triad_chopped(3, deg).hardware->qubit_count() == 3);
    }
  }
  CHECK_THROWS_AS(triad_chopped(8, 2), std::invalid_argument);
}

TEST_CASE("triad_chopped counts, degrees and layout for n <= 64, deg <= 8") {
  for (int n = 2; n <= 64; ++n) {
    for (int deg = 3; deg <= 8; ++deg) {
      const auto r = triad_chopped(n, deg);
      const HardwareGraph& hw = *r.hardware;
      INFO("n = " << n << " deg = " << deg);
      const int per_chain = chopped_segments_per_chain(n, deg);
      CHECK(hw.qubit_count() == n * per_chain);
      CHECK(hw.graph().max_degree() <= deg);
      CHECK(hw.qubit_count() * deg >= n * (n - 1));
      CHECK(one_coupler_per_chain_pair(hw, n));
      CHECK(check_physical(hw, deg, chopped_length_bound(deg)).ok());
      CHECK(verify_embedding(r.embedding).empty());
    }
  }
}

TEST_CASE("uniform chopping with deg = c + 2 tiles chains exactly") {
  for (int c = 1; c <= 6; ++c) {
    for (int blocks = 1; blocks <= 5; ++blocks) {
      const int n = c * blocks + 1;
      if (n < 2) continue;
      const auto r = triad_chopped(n, c + 2, ChopSpec::uniform(c));
      for (Vertex q = 0; q < r.hardware->qubit_count(); ++q) {
        const QubitMeta& m = r.hardware->meta()[static_cast<std::size_t>(q)];
        CHECK(m.last_position - m.first_position + 1 == c);
      }
      CHECK(r.hardware->graph().max_degree() <= c + 2);
      CHECK(verify_embedding(r.embedding).empty());
    }
  }
}

TEST_CASE("check_physical reports violations") {
  SECTION("isolated qubit") {
    const HardwareGraph hw("one", Graph(1, {}), {{0.0, 0.0}}, std::nullopt, {}, {});
    const auto report = check_physical(hw, 0, 0.0);
    CHECK(report.ok());
    CHECK(report.max_degree == 0);
  }
  SECTION("virtual TRIAD is degree 3") {
    CHECK(check_physical(*triad_virtual(8).hardware, 3, 1.5).degree_ok);
    CHECK_FALSE(check_physical(*triad_virtual(8).hardware, 2, 1.5).degree_ok);
  }
  SECTION("chopped n = 16, deg = 6") {
    const auto report = check_physical(*triad_chopped(16, 6).hardware, 6, 1.5 * 5);
    CHECK(report.ok());
    CHECK(report.violations.empty());
  }
  SECTION("planted over-degree qubit") {
    const HardwareGraph star("star", Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}),
                             {{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}}, std::nullopt, {}, {});
    const auto report = check_physical(star, 3, 1.5);
    CHECK_FALSE(report.degree_ok);
    CHECK(report.length_ok);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].qubit == 0);
  }
  SECTION("planted long coupler") {
    const HardwareGraph line("line", Graph(2, {{0, 1}}), {{0, 0}, {3, 4}}, std::nullopt, {}, {});
    const auto report = check_physical(line, 3, 1.5);
    CHECK_FALSE(report.length_ok);
    CHECK(report.max_edge_length == 5.0);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].coupler == Edge(0, 1));
  }
  SECTION("missing coordinates") {
    const HardwareGraph bare("bare", Graph(2, {{0, 1}}), {}, std::nullopt, {}, {});
    CHECK_THROWS_AS(check_physical(bare, 3, 1.5), std::invalid_argument);
  }
}

TEST_CASE("HardwareGraph enforces its invariants") {
  CHECK_THROWS_AS(HardwareGraph("x", Graph(3, {{0, 1}, {0, 2}}), {}, 1, {}, {}), GraphError);
  // chain 0 = qubits 0, 2 but they are not adjacent
  CHECK_THROWS_AS(HardwareGraph("x", Graph(3, {{0, 1}, {1, 2}}), {}, std::nullopt,
                                {{0, 1, 1}, {1, 1, 1}, {0, 2, 2}}, {}),
                  GraphError);
  // positions do not start at 1
  CHECK_THROWS_AS(HardwareGraph("x", Graph(2, {{0, 1}}), {}, std::nullopt,
                                {{0, 2, 2}, {0, 3, 3}}, {}),
                  GraphError);
}

TEST_CASE("decompose_complete") {
  SECTION("K8 with c = 4") {
    const auto d = decompose_complete(8, 4);
    REQUIRE(d.blocks.size() == 3);
    CHECK(d.blocks[0].kind == BlockKind::clique);
    CHECK(d.blocks[0].left == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(d.blocks[1].kind == BlockKind::biclique);
    CHECK(d.blocks[1].left == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(d.blocks[1].right == std::vector<Vertex>{4, 5, 6, 7});
    CHECK(d.blocks[2].left == std::vector<Vertex>{4, 5, 6, 7});
    CHECK(d.blocks[0].edge_count() + d.blocks[1].edge_count() + d.blocks[2].edge_count() == 28);
  }
  SECTION("no split when n = c") {
    const auto d = decompose_complete(5, 5);
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].edge_count() == 10);
  }
  SECTION("K16 with c = 4") {
    const auto d = decompose_complete(16, 4);
    int cliques = 0, bicliques = 0;
    std::vector<std::vector<Edge>> edges;
    for (const Block& b : d.blocks) {
      (b.kind == BlockKind::clique ? cliques : bicliques) += 1;
      CHECK(b.edge_count() == (b.kind == BlockKind::clique ? 6u : 16u));
      edges.push_back(b.edges());
    }
    CHECK(cliques == 4);
    CHECK(bicliques == 6);
    CHECK(testing::blocks_partition_complete(16, edges));
  }
  SECTION("partition property up to 32") {
    for (int c = 1; c <= 8; ++c) {
      for (int n = c; n <= 32; n *= 2) {
        std::vector<std::vector<Edge>> edges;
        for (const Block& b : decompose_complete(n, c).blocks) edges.push_back(b.edges());
        INFO("n = " << n << " c = " << c);
        CHECK(testing::blocks_partition_complete(n, edges));
      }
    }
  }
  CHECK_THROWS_AS(decompose_complete(12, 5), std::invalid_argument);
  CHECK_THROWS_AS(decompose_complete(12, 8), std::invalid_argument);
  CHECK_THROWS_AS(decompose_complete(3, 4), std::invalid_argument);
}

}  // namespace
}  // namespace triad
