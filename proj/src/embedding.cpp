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

#include "triad/embedding.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "triad/hardware.hpp"

namespace triad {

MinorEmbedding::MinorEmbedding(Graph logical,
                               std::shared_ptr<const HardwareGraph> hardware,
                               std::vector<std::vector<Vertex>> models,
                               std::vector<std::optional<Edge>> tau)
    : logical_(std::move(logical)),
      hardware_(std::move(hardware)),
      models_(std::move(models)),
      tau_(std::move(tau)) {
  if (!hardware_) throw std::invalid_argument("embedding: null hardware");
  if (models_.size() != static_cast<std::size_t>(logical_.vertex_count())) {
    throw std::invalid_argument("embedding: need one model per logical vertex");
  }
  if (tau_.size() != logical_.edge_count()) {
    throw std::invalid_argument("embedding: need one tau slot per logical edge");
  }
}

std::size_t MinorEmbedding::qubits_used() const {
  std::size_t total = 0;
  for (const auto& m : models_) total += m.size();
  return total;
}

Condition condition_of(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::overlap:
      return Condition::disjoint;
    case ViolationKind::dangling_qubit:
    case ViolationKind::empty_model:
    case ViolationKind::disconnected:
      return Condition::connected;
    case ViolationKind::missing_tau:
    case ViolationKind::tau_not_coupler:
    case ViolationKind::tau_not_bridging:
      return Condition::edge_map;
  }
  return Condition::edge_map;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::dangling_qubit: return "dangling_qubit";
    case ViolationKind::empty_model: return "empty_model";
    case ViolationKind::overlap: return "overlap";
    case ViolationKind::disconnected: return "disconnected";
    case ViolationKind::missing_tau: return "missing_tau";
    case ViolationKind::tau_not_coupler: return "tau_not_coupler";
    case ViolationKind::tau_not_bridging: return "tau_not_bridging";
  }
  return "unknown";
}

std::string to_string(EmbeddingClass c) {
  switch (c) {
    case EmbeddingClass::subgraph: return "subgraph";
    case EmbeddingClass::topological_minor: return "topological_minor";
    case EmbeddingClass::general_minor: return "general_minor";
  }
  return "unknown";
}

namespace {

std::string edge_str(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

std::vector<Violation> verify_embedding(const MinorEmbedding& emb) {
  const Graph& hw = emb.hardware().graph();
  const Graph& g = emb.logical_graph();
  std::vector<Violation> out;
  std::vector<Vertex> owner(static_cast<std::size_t>(hw.vertex_count()), -1);
  std::vector<std::set<Vertex>> members(emb.models().size());

  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    const auto& model = emb.model(i);
    const std::string who = "vertex " + std::to_string(i);
    if (model.empty()) {
      out.push_back({ViolationKind::empty_model, i, std::nullopt, std::nullopt,
                     who + ": empty model"});
      continue;
    }
    std::vector<Vertex> valid;
    for (Vertex q : model) {
      if (q < 0 || q >= hw.vertex_count()) {
        out.push_back({ViolationKind::dangling_qubit, i, std::nullopt, q,
                       who + ": qubit " + std::to_string(q) +
                           " is not in the hardware"});
        continue;
      }
      Vertex& own = owner[static_cast<std::size_t>(q)];
      if (own != -1) {
        out.push_back({ViolationKind::overlap, i, std::nullopt, q,
                       who + ": qubit " + std::to_string(q) +
                           " already used by vertex " + std::to_string(own)});
      } else {
        own = i;
      }
      valid.push_back(q);
      members[static_cast<std::size_t>(i)].insert(q);
    }
    if (!valid.empty() && !induces_connected(hw, valid)) {
      out.push_back({ViolationKind::disconnected, i, std::nullopt,
                     std::nullopt, who + ": model is not connected"});
    }
  }

  const auto edges = g.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    const auto& t = emb.tau(k);
    const std::string who = "edge " + edge_str(e);
    if (!t) {
      out.push_back({ViolationKind::missing_tau, std::nullopt, e, std::nullopt,
                     who + ": no coupler assigned"});
      continue;
    }
    if (t->u < 0 || t->v >= hw.vertex_count() || !hw.has_edge(t->u, t->v)) {
      out.push_back({ViolationKind::tau_not_coupler, std::nullopt, e,
                     std::nullopt,
                     who + ": " + edge_str(*t) + " is not a hardware coupler"});
      continue;
    }
    const auto& mu = members[static_cast<std::size_t>(e.u)];
    const auto& mv = members[static_cast<std::size_t>(e.v)];
    const bool bridges = (mu.count(t->u) && mv.count(t->v)) ||
                         (mu.count(t->v) && mv.count(t->u));
    if (!bridges) {
      out.push_back({ViolationKind::tau_not_bridging, std::nullopt, e,
                     std::nullopt,
                     who + ": coupler " + edge_str(*t) +
                         " does not join the two models"});
    }
  }
  return out;
}

namespace {

bool induces_path(const Graph& hw, const std::vector<Vertex>& model) {
  if (!induces_connected(hw, model)) return false;
  const std::set<Vertex> in(model.begin(), model.end());
  std::size_t inner = 0;
  for (Vertex q : model) {
    int d = 0;
    for (Vertex w : hw.neighbors(q)) d += in.count(w) ? 1 : 0;
    if (d > 2) return false;
    inner += static_cast<std::size_t>(d);
  }
  return inner / 2 == model.size() - 1;
}

}  // namespace

EmbeddingClass classify_embedding(const MinorEmbedding& emb) {
  if (!verify_embedding(emb).empty()) {
    throw std::invalid_argument("classify_embedding: embedding does not verify");
  }
  const auto& models = emb.models();
  if (std::all_of(models.begin(), models.end(),
                  [](const auto& m) { return m.size() == 1; })) {
    return EmbeddingClass::subgraph;
  }
  const Graph& hw = emb.hardware().graph();
  if (std::all_of(models.begin(), models.end(),
                  [&hw](const auto& m) { return induces_path(hw, m); })) {
    return EmbeddingClass::topological_minor;
  }
  return EmbeddingClass::general_minor;
}

MinorEmbedding embed_via_complete(const Graph& g, int deg,
                                  const ChopSpec& chop) {
  if (deg < 3) throw std::invalid_argument("embed_via_complete: deg must be >= 3");
  const int n = g.vertex_count();
  if (n < 2) {
    std::vector<Point> coords(static_cast<std::size_t>(n));
    auto hw = std::make_shared<const HardwareGraph>(
        "isolated n=" + std::to_string(n), Graph(n, {}), std::move(coords), deg,
        std::vector<QubitMeta>{}, std::vector<CouplerKind>{});
    std::vector<std::vector<Vertex>> models;
    for (Vertex i = 0; i < n; ++i) models.push_back({i});
    return MinorEmbedding(g, hw, std::move(models), {});
  }
  TriadResult triad = triad_chopped(n, deg, chop);
  const MinorEmbedding& full = triad.embedding;
  std::vector<std::optional<Edge>> tau;
  tau.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    tau.push_back(full.tau(*full.logical_graph().edge_index(e.u, e.v)));
  }
  return MinorEmbedding(g, triad.hardware, full.models(), std::move(tau));
}

Graph contract(const Graph& hw, std::span<const int> partition) {
  if (partition.size() != static_cast<std::size_t>(hw.vertex_count())) {
    throw GraphError("contract: partition must label every qubit");
  }
  int classes = 0;
  for (int label : partition) {
    if (label < -1) throw GraphError("contract: negative label");
    classes = std::max(classes, label + 1);
  }
  std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(classes));
  for (Vertex q = 0; q < hw.vertex_count(); ++q) {
    const int label = partition[static_cast<std::size_t>(q)];
    if (label >= 0) members[static_cast<std::size_t>(label)].push_back(q);
  }
  for (int c = 0; c < classes; ++c) {
    if (!induces_connected(hw, members[static_cast<std::size_t>(c)])) {
      throw GraphError("contract: class " + std::to_string(c) +
                       " is empty or disconnected");
    }
  }
  std::set<Edge> edges;
  for (const Edge& e : hw.edges()) {
    const int a = partition[static_cast<std::size_t>(e.u)];
    const int b = partition[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0 && a != b) edges.emplace(a, b);
  }
  return Graph(classes, std::vector<Edge>(edges.begin(), edges.end()));
}

EmbeddedSubgraph embedded_subgraph(const MinorEmbedding& emb) {
  const Graph& hw = emb.hardware().graph();
  std::vector<int> partition(static_cast<std::size_t>(hw.vertex_count()), -1);
  for (Vertex i = 0; i < emb.logical_graph().vertex_count(); ++i) {
    for (Vertex q : emb.model(i)) partition[static_cast<std::size_t>(q)] = i;
  }
  std::set<Edge> edges;
  for (const Edge& e : hw.edges()) {
    const int a = partition[static_cast<std::size_t>(e.u)];
    if (a >= 0 && a == partition[static_cast<std::size_t>(e.v)]) edges.insert(e);
  }
  for (const auto& t : emb.tau()) {
    if (t) edges.insert(*t);
  }
  return {Graph(hw.vertex_count(), std::vector<Edge>(edges.begin(), edges.end())),
          std::move(partition)};
}

}  // namespace triad
