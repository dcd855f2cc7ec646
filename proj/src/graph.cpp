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

#include "triad/graph.hpp"

#include <algorithm>
#include <string>

namespace triad {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v >= vertex_count) {
      throw GraphError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," +
                     std::to_string(dup->v) + ")");
  }
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adjacency_) {
    best = std::max(best, static_cast<int>(nbrs.size()));
  }
  return best;
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  const Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph complete_graph(int n) {
  if (n < 1) throw GraphError("complete_graph: n must be positive");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

bool induces_connected(const Graph& g, std::span<const Vertex> subset) {
  if (subset.empty()) return false;
  std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : subset) {
    if (v < 0 || v >= g.vertex_count()) return false;
    in_set[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<char> seen(in_set.size(), 0);
  std::vector<Vertex> stack{subset.front()};
  seen[static_cast<std::size_t>(subset.front())] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (in_set[wi] && !seen[wi]) {
        seen[wi] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  // duplicates in `subset` are counted once
  const auto distinct =
      static_cast<std::size_t>(std::count(in_set.begin(), in_set.end(), 1));
  return reached == distinct;
}

}  // namespace triad
