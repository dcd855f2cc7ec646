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

#include <regex>

#include "support/oracles.hpp"
#include "triad/io.hpp"

namespace triad {
namespace {

std::size_t count_matches(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

std::vector<double> vec(std::span<const double> xs) { return {xs.begin(), xs.end()}; }

void check_round_trip(const io::Manifest& m) {
  const std::string text = m.dump();
  const io::Manifest back = io::Manifest::parse(text);
  CHECK(back.kind == m.kind);
  CHECK(back.dump() == text);
}

TEST_CASE("manifests round-trip byte-identically") {
  std::mt19937_64 rng(8);
  const auto virt = triad_virtual(5);
  const auto chop = triad_chopped(8, 6);
  check_round_trip(io::wrap(testing::cycle_graph(5)));
  check_round_trip(io::wrap(*virt.hardware));
  check_round_trip(io::wrap(*chop.hardware));
  check_round_trip(io::wrap(virt.embedding));
  check_round_trip(io::wrap(chop.embedding));
  check_round_trip(io::wrap(testing::lattice_fixture()));
  const IsingInstance inst = testing::random_instance(complete_graph(5), rng, -2, 2);
  check_round_trip(io::wrap(inst));
  check_round_trip(io::wrap(embed_ising(inst, virt.embedding)));
  check_round_trip(io::wrap(IsingInstance(complete_graph(3), {0.1, -1e-7, 3.0}, {1.0 / 3, 2.5, -0.7})));
  check_round_trip(io::wrap(
      IsingInstance::exact(complete_graph(2), {Rational(1, 3), Rational(-2, 5)}, {Rational(7, 6)})));
}

TEST_CASE("decoded artifacts equal the originals") {
  std::mt19937_64 rng(13);
  const auto r = triad_chopped(7, 4);
  const HardwareGraph hw = io::hardware_from_json(io::hardware_to_json(*r.hardware));
  CHECK(hw.graph() == r.hardware->graph());
  CHECK(hw.name() == r.hardware->name());

  const MinorEmbedding emb = io::embedding_from_json(io::embedding_to_json(r.embedding));
  CHECK(emb.models() == r.embedding.models());
  CHECK(emb.tau() == r.embedding.tau());
  CHECK(verify_embedding(emb).empty());

  const IsingInstance inst = testing::random_instance(complete_graph(7), rng, -2, 2);
  const IsingInstance back = io::ising_from_json(io::ising_to_json(inst));
  CHECK(vec(back.h()) == vec(inst.h()));
  CHECK(vec(back.J()) == vec(inst.J()));
  CHECK(back.is_exact());

  const IsingInstance q =
      IsingInstance::exact(complete_graph(2), {Rational(1, 3), Rational(0)}, {Rational(-1, 2)});
  const IsingInstance qb = io::ising_from_json(io::ising_to_json(q));
  CHECK(qb.is_exact());
  CHECK(qb.h_exact(0) == Rational(1, 3));
  CHECK(qb.J_exact(0) == Rational(-1, 2));

  const EmbeddedIsing e = embed_ising(inst, r.embedding);
  const EmbeddedIsing eb = io::embedded_ising_from_json(io::embedded_ising_to_json(e));
  CHECK(vec(eb.instance.J()) == vec(e.instance.J()));
  CHECK(eb.chain_couplers == e.chain_couplers);
  CHECK(eb.chain_strength == e.chain_strength);
  CHECK(eb.aligned_offset == e.aligned_offset);
  CHECK(eb.exact_offset == e.exact_offset);

  const SpinAssignment s = SpinAssignment::from_index(6, 37);
  CHECK(io::spins_from_json(io::spins_to_json(s)) == s);
}

TEST_CASE("manifest envelope") {
  const io::Json j = io::wrap(complete_graph(2)).to_json();
  CHECK(j.at("artifact_kind") == "graph");
  CHECK(j.at("format_version") == io::kFormatVersion);
  CHECK(j.at("payload").at("num_vertices") == 2);
  const std::string text = io::wrap(complete_graph(3)).dump();
  CHECK(text.back() == '\n');
  // sorted keys
  CHECK(text.find("artifact_kind") < text.find("format_version"));
  CHECK(text.find("format_version") < text.find("payload"));
}

TEST_CASE("malformed input is a parse error") {
  const auto graph_doc = [](const std::string& edges) {
    return R"({"artifact_kind":"graph","format_version":"1","payload":{"num_vertices":3,"edges":)" +
           edges + "}}";
  };
  CHECK_NOTHROW(io::graph_from_json(io::Manifest::parse(graph_doc("[[0,1]]")).payload));
  CHECK_THROWS_AS(io::graph_from_json(io::Manifest::parse(graph_doc("[[1,1]]")).payload),
                  io::ParseError);
  CHECK_THROWS_AS(io::graph_from_json(io::Manifest::parse(graph_doc("[[0,5]]")).payload),
                  io::ParseError);
  CHECK_THROWS_AS(io::graph_from_json(io::Manifest::parse(graph_doc("[[0,1],[1,0]]")).payload),
                  io::ParseError);
  CHECK_THROWS_AS(io::graph_from_json(io::Manifest::parse(graph_doc("[[0]]")).payload),
                  io::ParseError);
  CHECK_THROWS_AS(io::Manifest::parse("{not json"), io::ParseError);
  CHECK_THROWS_AS(io::Manifest::parse(R"({"artifact_kind":"banana","format_version":"1","payload":{}})"),
                  io::ParseError);
  CHECK_THROWS_AS(io::Manifest::parse(R"({"artifact_kind":"graph","format_version":"99","payload":{}})"),
                  io::ParseError);
  CHECK_THROWS_AS(io::ising_from_json(io::Json::parse(R"({"num_vertices":2,"h":[0],"couplings":[]})")),
                  io::ParseError);
}

TEST_CASE("DOT export") {
  const auto r = triad_virtual(4);
  const std::string dot = io::to_dot(*r.hardware, &r.embedding);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(count_matches(dot, std::regex(R"(\n  q\d+ \[label=)")) == 12);
  CHECK(count_matches(dot, std::regex(R"( -- )")) == r.hardware->graph().edge_count());
  CHECK(count_matches(dot, std::regex(R"(style=bold)")) == 6);
  // one colour per chain
  std::set<std::string> colours;
  const std::regex colour_re(R"#(color="([^"]+)")#");
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), colour_re); it != std::sregex_iterator(); ++it) {
    colours.insert((*it)[1]);
  }
  CHECK(colours.size() >= 4);
  CHECK(io::to_dot(*r.hardware, &r.embedding) == dot);

  const std::string gdot = io::to_dot(testing::cycle_graph(5));
  CHECK(count_matches(gdot, std::regex(R"( -- )")) == 5);
}

TEST_CASE("SVG export") {
  const auto r = triad_chopped(6, 4);
  const std::string svg = io::to_svg(*r.hardware, &r.embedding);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_matches(svg, std::regex(R"(<circle )")) ==
        static_cast<std::size_t>(r.hardware->qubit_count()));
  CHECK(count_matches(svg, std::regex(R"(<line )")) == r.hardware->graph().edge_count());
  CHECK(io::to_svg(*r.hardware, &r.embedding) == svg);
  CHECK(io::to_svg(complete_graph(4)).find("<svg") != std::string::npos);
}

}  // namespace
}  // namespace triad
