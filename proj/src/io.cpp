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

#include "triad/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace triad::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + ": expected integer");
  return j.get<int>();
}

double as_real(const Json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + ": expected number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(std::string(what) + ": not finite");
  return x;
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + ": expected array");
  return j;
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Edge edge_from(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) fail(std::string(what) + ": expected [u, v]");
  const int u = as_int(j[0], what);
  const int v = as_int(j[1], what);
  if (u == v) fail(std::string(what) + ": self-loop at " + std::to_string(u));
  return Edge(u, v);
}

template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  } catch (const std::overflow_error& e) {
    fail(e.what());
  }
}

const char* kind_name(CouplerKind k) {
  return k == CouplerKind::intra_chain ? "intra_chain" : "inter_chain";
}

}  // namespace

std::string to_string(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::graph: return "graph";
    case ArtifactKind::hardware: return "hardware";
    case ArtifactKind::embedding: return "embedding";
    case ArtifactKind::ising: return "ising";
    case ArtifactKind::embedded_ising: return "embedded_ising";
    case ArtifactKind::report: return "report";
  }
  return "report";
}

ArtifactKind artifact_kind_from_string(const std::string& name) {
  for (ArtifactKind k :
       {ArtifactKind::graph, ArtifactKind::hardware, ArtifactKind::embedding,
        ArtifactKind::ising, ArtifactKind::embedded_ising,
        ArtifactKind::report}) {
    if (to_string(k) == name) return k;
  }
  fail("unknown artifact_kind \"" + name + "\"");
}

Json Manifest::to_json() const {
  return Json{{"artifact_kind", to_string(kind)},
              {"format_version", kFormatVersion},
              {"payload", payload}};
}

std::string Manifest::dump() const { return to_json().dump(2) + "\n"; }

Manifest Manifest::from_json(const Json& j) {
  const Json& version = field(j, "format_version");
  if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
    fail("unsupported format_version");
  }
  const Json& kind = field(j, "artifact_kind");
  if (!kind.is_string()) fail("artifact_kind must be a string");
  return {artifact_kind_from_string(kind.get<std::string>()),
          field(j, "payload")};
}

Manifest Manifest::parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_json(e));
  return Json{{"num_vertices", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  return guarded([&] {
    const int n = as_int(field(j, "num_vertices"), "num_vertices");
    std::vector<Edge> edges;
    for (const Json& e : as_array(field(j, "edges"), "edges")) {
      edges.push_back(edge_from(e, "edge"));
    }
    return Graph(n, std::move(edges));
  });
}

Json hardware_to_json(const HardwareGraph& hw) {
  Json qubits = Json::array();
  for (Vertex q = 0; q < hw.qubit_count(); ++q) {
    Json entry = Json::object();
    if (hw.has_coords()) {
      entry["x"] = hw.coords()[static_cast<std::size_t>(q)].x;
      entry["y"] = hw.coords()[static_cast<std::size_t>(q)].y;
    }
    if (hw.has_meta()) {
      const QubitMeta& m = hw.meta()[static_cast<std::size_t>(q)];
      entry["chain"] = m.chain;
      entry["positions"] = Json::array({m.first_position, m.last_position});
    }
    qubits.push_back(entry);
  }
  Json couplers = Json::array();
  const auto edges = hw.graph().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    Json c{{"u", edges[k].u}, {"v", edges[k].v}};
    if (hw.has_kinds()) c["kind"] = kind_name(hw.kinds()[k]);
    couplers.push_back(c);
  }
  Json out{{"name", hw.name()}, {"qubits", qubits}, {"couplers", couplers}};
  out["degree_bound"] = hw.degree_bound() ? Json(*hw.degree_bound()) : Json();
  return out;
}

HardwareGraph hardware_from_json(const Json& j) {
  return guarded([&] {
    const Json& name = field(j, "name");
    if (!name.is_string()) fail("hardware name must be a string");
    const Json& qubits = as_array(field(j, "qubits"), "qubits");
    std::vector<Point> coords;
    std::vector<QubitMeta> meta;
    const bool has_coords = !qubits.empty() && qubits[0].contains("x");
    const bool has_meta = !qubits.empty() && qubits[0].contains("chain");
    for (const Json& q : qubits) {
      if (has_coords) {
        coords.push_back({as_real(field(q, "x"), "x"), as_real(field(q, "y"), "y")});
      } else if (q.contains("x")) {
        fail("qubit coordinates must be given for all qubits or none");
      }
      if (has_meta) {
        const Json& pos = field(q, "positions");
        if (!pos.is_array() || pos.size() != 2) fail("positions: expected [a, b]");
        meta.push_back({as_int(field(q, "chain"), "chain"),
                        as_int(pos[0], "positions"), as_int(pos[1], "positions")});
      } else if (q.contains("chain")) {
        fail("qubit meta must be given for all qubits or none");
      }
    }
    std::vector<Edge> edges;
    std::vector<std::pair<Edge, CouplerKind>> kinds;
    bool has_kinds = false;
    for (const Json& c : as_array(field(j, "couplers"), "couplers")) {
      const int u = as_int(field(c, "u"), "u");
      const int v = as_int(field(c, "v"), "v");
      if (u == v) fail("coupler self-loop at " + std::to_string(u));
      edges.emplace_back(u, v);
      if (c.contains("kind")) {
        has_kinds = true;
        const std::string k = c["kind"].get<std::string>();
        if (k != "intra_chain" && k != "inter_chain") {
          fail("unknown coupler kind \"" + k + "\"");
        }
        kinds.emplace_back(Edge(u, v), k == "intra_chain"
                                           ? CouplerKind::intra_chain
                                           : CouplerKind::inter_chain);
      }
    }
    Graph g(static_cast<int>(qubits.size()), std::move(edges));
    std::vector<CouplerKind> kind_list;
    if (has_kinds) {
      if (kinds.size() != g.edge_count()) fail("coupler kind missing");
      std::sort(kinds.begin(), kinds.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [e, k] : kinds) kind_list.push_back(k);
    }
    std::optional<int> bound;
    const Json& b = field(j, "degree_bound");
    if (!b.is_null()) bound = as_int(b, "degree_bound");
    return HardwareGraph(name.get<std::string>(), std::move(g),
                         std::move(coords), bound, std::move(meta),
                         std::move(kind_list));
  });
}

Json embedding_to_json(const MinorEmbedding& emb) {
  Json models = Json::array();
  for (const auto& m : emb.models()) models.push_back(m);
  Json tau = Json::array();
  const auto edges = emb.logical_graph().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (!emb.tau(k)) continue;
    tau.push_back(Json{{"edge", edge_json(edges[k])},
                       {"coupler", edge_json(*emb.tau(k))}});
  }
  return Json{{"logical_graph", graph_to_json(emb.logical_graph())},
              {"hardware_ref", emb.hardware().name()},
              {"hardware", hardware_to_json(emb.hardware())},
              {"models", models},
              {"tau", tau}};
}

MinorEmbedding embedding_from_json(const Json& j) {
  return guarded([&] {
    Graph logical = graph_from_json(field(j, "logical_graph"));
    auto hw = std::make_shared<const HardwareGraph>(
        hardware_from_json(field(j, "hardware")));
    const Json& ref = field(j, "hardware_ref");
    if (!ref.is_string() || ref.get<std::string>() != hw->name()) {
      fail("hardware_ref does not match the embedded hardware");
    }
    std::vector<std::vector<Vertex>> models;
    for (const Json& m : as_array(field(j, "models"), "models")) {
      std::vector<Vertex> model;
      for (const Json& q : as_array(m, "model")) model.push_back(as_int(q, "qubit"));
      models.push_back(std::move(model));
    }
    if (models.size() != static_cast<std::size_t>(logical.vertex_count())) {
      fail("models: need one model per logical vertex");
    }
    std::vector<std::optional<Edge>> tau(logical.edge_count());
    for (const Json& t : as_array(field(j, "tau"), "tau")) {
      const Edge e = edge_from(field(t, "edge"), "tau edge");
      const auto k = logical.edge_index(e.u, e.v);
      if (!k) fail("tau names a non-edge of the logical graph");
      if (tau[*k]) fail("tau assigns a logical edge twice");
      tau[*k] = edge_from(field(t, "coupler"), "tau coupler");
    }
    return MinorEmbedding(std::move(logical), std::move(hw), std::move(models),
                          std::move(tau));
  });
}

Json spins_to_json(const SpinAssignment& s) {
  Json out = Json::array();
  for (Spin x : s.spins()) out.push_back(static_cast<int>(x));
  return out;
}

SpinAssignment spins_from_json(const Json& j) {
  return guarded([&] {
    std::vector<Spin> spins;
    for (const Json& x : as_array(j, "spins")) {
      spins.push_back(static_cast<Spin>(as_int(x, "spin")));
    }
    return SpinAssignment(std::move(spins));
  });
}

Json ising_to_json(const IsingInstance& inst) {
  Json h = Json::array();
  for (double x : inst.h()) h.push_back(x);
  Json couplings = Json::array();
  const auto edges = inst.graph().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    couplings.push_back(Json::array({edges[k].u, edges[k].v, inst.J(k)}));
  }
  Json out{{"num_vertices", inst.vertex_count()},
           {"h", h},
           {"couplings", couplings}};
  if (inst.is_exact() && inst.denominator() > 1) {
    out["denominator"] = inst.denominator();
  }
  return out;
}

IsingInstance ising_from_json(const Json& j) {
  return guarded([&] {
    const int n = as_int(field(j, "num_vertices"), "num_vertices");
    std::vector<double> h;
    for (const Json& x : as_array(field(j, "h"), "h")) h.push_back(as_real(x, "h"));
    std::vector<std::pair<Edge, double>> weighted;
    for (const Json& c : as_array(field(j, "couplings"), "couplings")) {
      if (!c.is_array() || c.size() != 3) fail("coupling: expected [u, v, J]");
      const int u = as_int(c[0], "coupling");
      const int v = as_int(c[1], "coupling");
      if (u == v) fail("coupling self-loop at " + std::to_string(u));
      weighted.emplace_back(Edge(u, v), as_real(c[2], "J"));
    }
    std::vector<Edge> edges;
    for (const auto& [e, _] : weighted) edges.push_back(e);
    Graph g(n, std::move(edges));
    std::sort(weighted.begin(), weighted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<double> J;
    for (const auto& [_, w] : weighted) J.push_back(w);

    if (!j.contains("denominator")) {
      return IsingInstance(std::move(g), std::move(h), std::move(J));
    }
    const std::int64_t den = j["denominator"].get<std::int64_t>();
    if (den <= 0) fail("denominator must be positive");
    auto scale = [den](const std::vector<double>& values) {
      std::vector<std::int64_t> out;
      for (double x : values) {
        const double scaled = x * static_cast<double>(den);
        const double r = std::round(scaled);
        if (std::fabs(scaled - r) > 1e-6 * std::max(1.0, std::fabs(scaled))) {
          fail("weight is not a multiple of 1/denominator");
        }
        out.push_back(static_cast<std::int64_t>(r));
      }
      return out;
    };
    if (h.size() != static_cast<std::size_t>(n)) {
      fail("h must have one entry per vertex");
    }
    return IsingInstance::scaled(std::move(g), den, scale(h), scale(J));
  });
}

Json embedded_ising_to_json(const EmbeddedIsing& e) {
  Json chain = Json::array();
  for (const Edge& c : e.chain_couplers) chain.push_back(edge_json(c));
  Json out{{"instance", ising_to_json(e.instance)},
           {"chain_couplers", chain},
           {"chain_strengths", e.chain_strength},
           {"aligned_offset", e.aligned_offset},
           {"embedding", embedding_to_json(e.embedding)}};
  if (e.exact_offset) out["exact_offset"] = e.exact_offset->str();
  return out;
}

namespace {

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    fail("invalid rational \"" + s + "\"");
  }
}

}  // namespace

EmbeddedIsing embedded_ising_from_json(const Json& j) {
  return guarded([&] {
    EmbeddedIsing e;
    e.instance = ising_from_json(field(j, "instance"));
    e.embedding = embedding_from_json(field(j, "embedding"));
    for (const Json& c : as_array(field(j, "chain_couplers"), "chain_couplers")) {
      e.chain_couplers.push_back(edge_from(c, "chain coupler"));
    }
    for (const Json& f : as_array(field(j, "chain_strengths"), "chain_strengths")) {
      e.chain_strength.push_back(as_real(f, "chain strength"));
    }
    e.aligned_offset = as_real(field(j, "aligned_offset"), "aligned_offset");
    if (j.contains("exact_offset")) {
      e.exact_offset = parse_rational(j["exact_offset"].get<std::string>());
    }
    if (e.instance.vertex_count() != e.embedding.hardware().qubit_count()) {
      fail("embedded instance does not match its hardware");
    }
    if (e.chain_strength.size() != e.embedding.models().size()) {
      fail("chain_strengths: need one per logical vertex");
    }
    return e;
  });
}

Json ground_state_to_json(const GroundStateResult& r) {
  Json out{{"min_energy", r.min_energy},
           {"argmin", spins_to_json(r.canonical_argmin)},
           {"degeneracy", r.degeneracy}};
  if (r.exact_min) out["exact_min"] = r.exact_min->str();
  return out;
}

Json reduction_report_to_json(const ReductionReport& r) {
  Json out{{"original", ground_state_to_json(r.original)},
           {"embedded", ground_state_to_json(r.embedded)},
           {"aligned_offset", r.aligned_offset},
           {"exact", r.exact},
           {"energy_matches", r.energy_matches},
           {"broken_chains", r.broken},
           {"unembed_attains", r.unembed_attains},
           {"ok", r.ok()}};
  out["unembedded_energy"] =
      r.unembedded_energy ? Json(*r.unembedded_energy) : Json();
  return out;
}

Manifest wrap(const Graph& g) { return {ArtifactKind::graph, graph_to_json(g)}; }
Manifest wrap(const HardwareGraph& hw) {
  return {ArtifactKind::hardware, hardware_to_json(hw)};
}
Manifest wrap(const MinorEmbedding& emb) {
  return {ArtifactKind::embedding, embedding_to_json(emb)};
}
Manifest wrap(const IsingInstance& inst) {
  return {ArtifactKind::ising, ising_to_json(inst)};
}
Manifest wrap(const EmbeddedIsing& e) {
  return {ArtifactKind::embedded_ising, embedded_ising_to_json(e)};
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace triad::io
