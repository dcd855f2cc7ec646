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

#include "triad/hardware.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace triad {

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

HardwareGraph::HardwareGraph(std::string name, Graph graph,
                             std::vector<Point> coords,
                             std::optional<int> degree_bound,
                             std::vector<QubitMeta> meta,
                             std::vector<CouplerKind> kinds)
    : name_(std::move(name)),
      graph_(std::move(graph)),
      coords_(std::move(coords)),
      degree_bound_(degree_bound),
      meta_(std::move(meta)),
      kinds_(std::move(kinds)) {
  const auto qubits = static_cast<std::size_t>(graph_.vertex_count());
  if (!coords_.empty() && coords_.size() != qubits) {
    throw GraphError("hardware: coords must cover every qubit");
  }
  if (!meta_.empty() && meta_.size() != qubits) {
    throw GraphError("hardware: meta must cover every qubit");
  }
  if (!kinds_.empty() && kinds_.size() != graph_.edge_count()) {
    throw GraphError("hardware: coupler kinds must cover every coupler");
  }
  if (degree_bound_) {
    if (*degree_bound_ < 1) throw GraphError("hardware: degree bound < 1");
    for (Vertex q = 0; q < graph_.vertex_count(); ++q) {
      if (graph_.degree(q) > *degree_bound_) {
        throw GraphError("hardware: qubit " + std::to_string(q) +
                         " exceeds degree bound");
      }
    }
  }
  if (meta_.empty()) return;

  std::map<Vertex, std::vector<Vertex>> chains;
  for (Vertex q = 0; q < graph_.vertex_count(); ++q) {
    const QubitMeta& m = meta_[static_cast<std::size_t>(q)];
    if (m.chain < 0 || m.first_position < 1 ||
        m.last_position < m.first_position) {
      throw GraphError("hardware: bad meta on qubit " + std::to_string(q));
    }
    chains[m.chain].push_back(q);
  }
  for (auto& [chain, qs] : chains) {
    std::sort(qs.begin(), qs.end(), [this](Vertex a, Vertex b) {
      return meta_[static_cast<std::size_t>(a)].first_position <
             meta_[static_cast<std::size_t>(b)].first_position;
    });
    int expected = 1;
    for (std::size_t k = 0; k < qs.size(); ++k) {
      const QubitMeta& m = meta_[static_cast<std::size_t>(qs[k])];
      if (m.first_position != expected) {
        throw GraphError("hardware: chain " + std::to_string(chain) +
                         " positions are not contiguous");
      }
      expected = m.last_position + 1;
      if (k > 0 && !graph_.has_edge(qs[k - 1], qs[k])) {
        throw GraphError("hardware: chain " + std::to_string(chain) +
                         " is not a path");
      }
    }
    std::size_t inner = 0;
    for (std::size_t a = 0; a < qs.size(); ++a) {
      for (std::size_t b = a + 1; b < qs.size(); ++b) {
        inner += graph_.has_edge(qs[a], qs[b]) ? 1 : 0;
      }
    }
    if (inner != qs.size() - 1) {
      throw GraphError("hardware: chain " + std::to_string(chain) +
                       " does not induce a path");
    }
  }
}

std::size_t HardwareGraph::count_kind(CouplerKind kind) const {
  return static_cast<std::size_t>(std::count(kinds_.begin(), kinds_.end(), kind));
}

namespace {

// 1-based position k of chain i in the virtual layout.
Point virtual_slot(int i, int k) {
  if (k <= i) return {i + 0.25, static_cast<double>(k - 1)};
  return {static_cast<double>(k), i + 0.25};
}

std::vector<std::optional<Edge>> as_tau(const Graph& logical,
                                        const std::map<Edge, Edge>& coupler) {
  std::vector<std::optional<Edge>> tau;
  tau.reserve(logical.edge_count());
  for (const Edge& e : logical.edges()) tau.emplace_back(coupler.at(e));
  return tau;
}

}  // namespace

TriadResult triad_virtual(int n) {
  if (n < 2) throw std::invalid_argument("triad_virtual: n must be >= 2");
  const int len = n - 1;
  auto id = [len](int i, int k) { return i * len + (k - 1); };

  std::vector<Edge> edges;
  std::vector<Point> coords(static_cast<std::size_t>(n * len));
  std::vector<QubitMeta> meta(coords.size());
  std::map<Edge, CouplerKind> kind;
  std::map<Edge, Edge> realizes;
  for (int i = 0; i < n; ++i) {
    for (int k = 1; k <= len; ++k) {
      coords[static_cast<std::size_t>(id(i, k))] = virtual_slot(i, k);
      meta[static_cast<std::size_t>(id(i, k))] = {i, k, k};
      if (k < len) {
        const Edge e(id(i, k), id(i, k + 1));
        edges.push_back(e);
        kind[e] = CouplerKind::intra_chain;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Edge e(id(i, j), id(j, i + 1));
      edges.push_back(e);
      kind[e] = CouplerKind::inter_chain;
      realizes[Edge(i, j)] = e;
    }
  }
  Graph g(n * len, std::move(edges));
  std::vector<CouplerKind> kinds;
  for (const Edge& e : g.edges()) kinds.push_back(kind.at(e));

  auto hw = std::make_shared<const HardwareGraph>(
      "triad-virtual n=" + std::to_string(n), std::move(g), std::move(coords),
      3, std::move(meta), std::move(kinds));

  Graph logical = complete_graph(n);
  std::vector<std::vector<Vertex>> models(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 1; k <= len; ++k) {
      models[static_cast<std::size_t>(i)].push_back(id(i, k));
    }
  }
  auto tau = as_tau(logical, realizes);
  return {hw, MinorEmbedding(std::move(logical), hw, std::move(models),
                             std::move(tau))};
}

int chopped_segments_per_chain(int n, int deg) {
  if (deg < 3) throw std::invalid_argument("chop: deg must be >= 3");
  const int num = n - 3;
  if (num <= 0) return 1;
  return std::max(1, (num + (deg - 2) - 1) / (deg - 2));
}

std::vector<int> chop_sizes(int n, int deg, const ChopSpec& chop) {
  if (n < 2) throw std::invalid_argument("chop: n must be >= 2");
  if (deg < 3) throw std::invalid_argument("chop: deg must be >= 3");
  const int len = n - 1;
  if (chop.mode == ChopMode::uniform) {
    const int c = chop.segment;
    if (c < 1) throw std::invalid_argument("chop: uniform segment must be >= 1");
    if (c >= len) {
      if (len > deg) {
        throw std::invalid_argument(
            "chop: single segment of " + std::to_string(len) +
            " positions exceeds degree " + std::to_string(deg));
      }
      return {len};
    }
    if (c + 2 > deg) {
      throw std::invalid_argument("chop: uniform segment " + std::to_string(c) +
                                  " needs degree >= " + std::to_string(c + 2));
    }
    std::vector<int> sizes(static_cast<std::size_t>(len / c), c);
    if (len % c) sizes.push_back(len % c);
    return sizes;
  }

  const int s = chopped_segments_per_chain(n, deg);
  if (s == 1) return {len};
  // Terminal segments hold up to deg-1 positions, interior ones deg-2. The
  // surplus capacity is taken back round-robin from the left.
  std::vector<int> sizes(static_cast<std::size_t>(s), deg - 2);
  sizes.front() = sizes.back() = deg - 1;
  int surplus = 2 * (deg - 1) + (s - 2) * (deg - 2) - len;
  const int each = surplus / s;
  const int extra = surplus % s;
  for (int t = 0; t < s; ++t) {
    sizes[static_cast<std::size_t>(t)] -= each + (t < extra ? 1 : 0);
  }
  return sizes;
}

TriadResult triad_chopped(int n, int deg, const ChopSpec& chop) {
  const std::vector<int> sizes = chop_sizes(n, deg, chop);
  const int len = n - 1;
  const int per_chain = static_cast<int>(sizes.size());

  // segment_of[k] for 1-based virtual position k
  std::vector<int> segment_of(static_cast<std::size_t>(len) + 1, 0);
  std::vector<int> first(sizes.size());
  for (int t = 0, k = 1; t < per_chain; ++t) {
    first[static_cast<std::size_t>(t)] = k;
    for (int r = 0; r < sizes[static_cast<std::size_t>(t)]; ++r, ++k) {
      segment_of[static_cast<std::size_t>(k)] = t;
    }
  }
  auto id = [per_chain](int i, int t) { return i * per_chain + t; };
  auto at = [&](int i, int k) {
    return id(i, segment_of[static_cast<std::size_t>(k)]);
  };

  const auto qubits = static_cast<std::size_t>(n * per_chain);
  std::vector<Point> coords(qubits);
  std::vector<QubitMeta> meta(qubits);
  std::vector<Edge> edges;
  std::map<Edge, CouplerKind> kind;
  std::map<Edge, Edge> realizes;
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < per_chain; ++t) {
      const int size = sizes[static_cast<std::size_t>(t)];
      const int lo = first[static_cast<std::size_t>(t)];
      Point c;
      for (int k = lo; k < lo + size; ++k) {
        const Point p = virtual_slot(i, k);
        c.x += p.x;
        c.y += p.y;
      }
      c.x /= size;
      c.y /= size;
      coords[static_cast<std::size_t>(id(i, t))] = c;
      meta[static_cast<std::size_t>(id(i, t))] = {i, lo, lo + size - 1};
      if (t + 1 < per_chain) {
        const Edge e(id(i, t), id(i, t + 1));
        edges.push_back(e);
        kind[e] = CouplerKind::intra_chain;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Edge e(at(i, j), at(j, i + 1));
      edges.push_back(e);
      kind[e] = CouplerKind::inter_chain;
      realizes[Edge(i, j)] = e;
    }
  }
  Graph g(static_cast<int>(qubits), std::move(edges));
  std::vector<CouplerKind> kinds;
  for (const Edge& e : g.edges()) kinds.push_back(kind.at(e));

  std::ostringstream name;
  name << "triad-chopped n=" << n << " deg=" << deg;
  if (chop.mode == ChopMode::uniform) name << " uniform=" << chop.segment;
  auto hw = std::make_shared<const HardwareGraph>(
      name.str(), std::move(g), std::move(coords), deg, std::move(meta),
      std::move(kinds));

  Graph logical = complete_graph(n);
  std::vector<std::vector<Vertex>> models(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < per_chain; ++t) {
      models[static_cast<std::size_t>(i)].push_back(id(i, t));
    }
  }
  auto tau = as_tau(logical, realizes);
  return {hw, MinorEmbedding(std::move(logical), hw, std::move(models),
                             std::move(tau))};
}

ConstraintReport check_physical(const HardwareGraph& hw, int deg_max,
                                double len_max) {
  if (!hw.has_coords() && hw.qubit_count() > 0) {
    throw std::invalid_argument("check_physical: hardware has no coordinates");
  }
  const Graph& g = hw.graph();
  ConstraintReport report;
  for (Vertex q = 0; q < g.vertex_count(); ++q) {
    report.max_degree = std::max(report.max_degree, g.degree(q));
    if (g.degree(q) > deg_max) {
      report.violations.push_back(
          {q, std::nullopt,
           "degree " + std::to_string(g.degree(q)) + " > " +
               std::to_string(deg_max)});
    }
  }
  for (const Edge& e : g.edges()) {
    const double len = distance(hw.coords()[static_cast<std::size_t>(e.u)],
                                hw.coords()[static_cast<std::size_t>(e.v)]);
    report.max_edge_length = std::max(report.max_edge_length, len);
    if (len > len_max) {
      std::ostringstream reason;
      reason << "length " << len << " > " << len_max;
      report.violations.push_back({std::nullopt, e, reason.str()});
    }
  }
  report.degree_ok = report.max_degree <= deg_max;
  report.length_ok = report.max_edge_length <= len_max;
  return report;
}

std::size_t Block::edge_count() const {
  const std::size_t l = left.size();
  return kind == BlockKind::clique ? l * (l - (l ? 1 : 0)) / 2
                                   : l * right.size();
}

std::vector<Edge> Block::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  if (kind == BlockKind::clique) {
    for (std::size_t a = 0; a < left.size(); ++a) {
      for (std::size_t b = a + 1; b < left.size(); ++b) {
        out.emplace_back(left[a], left[b]);
      }
    }
  } else {
    for (Vertex a : left) {
      for (Vertex b : right) out.emplace_back(a, b);
    }
  }
  return out;
}

namespace {

std::vector<Vertex> range(int lo, int count) {
  std::vector<Vertex> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = lo + k;
  return out;
}

void halve(int lo, int m, int c, std::vector<Block>& out) {
  if (m == c) {
    out.push_back({BlockKind::clique, range(lo, c), {}});
    return;
  }
  const int half = m / 2;
  halve(lo, half, c, out);
  for (int a = 0; a < half; a += c) {
    for (int b = 0; b < half; b += c) {
      out.push_back(
          {BlockKind::biclique, range(lo + a, c), range(lo + half + b, c)});
    }
  }
  halve(lo + half, half, c, out);
}

}  // namespace

CompleteDecomposition decompose_complete(int n, int c) {
  if (c < 1 || n < c) {
    throw std::invalid_argument("decompose_complete: need 1 <= c <= n");
  }
  int m = n;
  while (m > c && m % 2 == 0) m /= 2;
  if (m != c) {
    throw std::invalid_argument("decompose_complete: n = " + std::to_string(n) +
                                " is not c * 2^k for c = " + std::to_string(c));
  }
  CompleteDecomposition d;
  halve(0, n, c, d.blocks);
  return d;
}

}  // namespace triad
