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

// Exhaustive ground-state search.
//
// Assignments are numbered lexicographically (vertex 0 is the most
// significant bit, -1 < +1). The index space is cut into 2^p chunks on the
// top p bits; every chunk walks its low bits in Gray-code order and keeps
// (best energy, smallest index attaining it, count). Chunk results are
// reduced in chunk order, so the answer does not depend on how chunks are
// scheduled onto threads.

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <string>
#include <thread>

#include "triad/ising.hpp"

namespace triad {

namespace {

struct Csr {
  std::vector<std::size_t> offset;
  std::vector<int> target;
  std::vector<std::size_t> edge;
};

Csr build_csr(const Graph& g) {
  Csr csr;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  csr.offset.assign(n + 1, 0);
  for (const Edge& e : g.edges()) {
    ++csr.offset[static_cast<std::size_t>(e.u) + 1];
    ++csr.offset[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t v = 0; v < n; ++v) csr.offset[v + 1] += csr.offset[v];
  csr.target.resize(csr.offset[n]);
  csr.edge.resize(csr.offset[n]);
  std::vector<std::size_t> fill(csr.offset.begin(), csr.offset.end() - 1);
  const auto edges = g.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto u = static_cast<std::size_t>(edges[k].u);
    const auto v = static_cast<std::size_t>(edges[k].v);
    csr.target[fill[u]] = edges[k].v;
    csr.edge[fill[u]++] = k;
    csr.target[fill[v]] = edges[k].u;
    csr.edge[fill[v]++] = k;
  }
  return csr;
}

template <typename Energy>
struct ChunkResult {
  Energy best{};
  std::uint64_t best_index = 0;
  std::uint64_t count = 0;
};

template <typename Fn>
void run_chunks(std::size_t chunks, int workers, Fn&& fn) {
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads <= 1 || chunks <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < std::min(threads, chunks); ++t) {
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) fn(c);
    });
  }
}

class ExactSearch {
 public:
  ExactSearch(const IsingInstance& inst, int prefix_bits)
      : n_(inst.vertex_count()),
        low_bits_(n_ - prefix_bits),
        h_(inst.h_scaled().begin(), inst.h_scaled().end()),
        J_(inst.J_scaled().begin(), inst.J_scaled().end()),
        csr_(build_csr(inst.graph())),
        edges_(inst.graph().edges()) {}

  ChunkResult<std::int64_t> run(std::uint64_t chunk) const {
    const std::uint64_t base = chunk << low_bits_;
    std::vector<Spin> s(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      s[static_cast<std::size_t>(v)] = ((base >> (n_ - 1 - v)) & 1u) ? 1 : -1;
    }
    std::int64_t e = 0;
    for (std::size_t v = 0; v < s.size(); ++v) e += h_[v] * s[v];
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      e += J_[k] * s[static_cast<std::size_t>(edges_[k].u)] *
           s[static_cast<std::size_t>(edges_[k].v)];
    }
    ChunkResult<std::int64_t> r{e, base, 1};
    std::uint64_t gray = 0;
    const std::uint64_t steps = std::uint64_t{1} << low_bits_;
    for (std::uint64_t t = 1; t < steps; ++t) {
      const int bit = std::countr_zero(t);
      gray ^= std::uint64_t{1} << bit;
      const auto v = static_cast<std::size_t>(n_ - 1 - bit);
      std::int64_t field = h_[v];
      for (std::size_t a = csr_.offset[v]; a < csr_.offset[v + 1]; ++a) {
        field += J_[csr_.edge[a]] * s[static_cast<std::size_t>(csr_.target[a])];
      }
      e -= 2 * s[v] * field;
      s[v] = static_cast<Spin>(-s[v]);
      const std::uint64_t index = base | gray;
      if (e < r.best) {
        r = {e, index, 1};
      } else if (e == r.best) {
        ++r.count;
        r.best_index = std::min(r.best_index, index);
      }
    }
    return r;
  }

 private:
  int n_;
  int low_bits_;
  std::vector<std::int64_t> h_;
  std::vector<std::int64_t> J_;
  Csr csr_;
  std::span<const Edge> edges_;
};

double real_energy(const IsingInstance& inst, const std::vector<Spin>& s) {
  double e = 0.0;
  for (std::size_t v = 0; v < s.size(); ++v) e += inst.h()[v] * s[v];
  const auto edges = inst.graph().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    e += inst.J(k) * s[static_cast<std::size_t>(edges[k].u)] *
         s[static_cast<std::size_t>(edges[k].v)];
  }
  return e;
}

template <typename Visit>
void for_each_in_chunk(int n, int low_bits, std::uint64_t chunk,
                       Visit&& visit) {
  const std::uint64_t base = chunk << low_bits;
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  std::vector<Spin> s(static_cast<std::size_t>(n));
  for (std::uint64_t t = 0; t < steps; ++t) {
    const std::uint64_t index = base | t;
    for (int v = 0; v < n; ++v) {
      s[static_cast<std::size_t>(v)] = ((index >> (n - 1 - v)) & 1u) ? 1 : -1;
    }
    visit(index, s);
  }
}

}  // namespace

GroundStateResult solve_exhaustive(const IsingInstance& inst,
                                   const SolverOptions& options) {
  const int n = inst.vertex_count();
  if (n > options.max_spins || n > 62) {
    throw SolverCapExceeded("instance has " + std::to_string(n) +
                            " spins, solver cap is " +
                            std::to_string(options.max_spins));
  }
  const int prefix_bits = std::min(n, 8);
  const int low_bits = n - prefix_bits;
  const std::size_t chunks = std::size_t{1} << prefix_bits;
  int workers = options.workers;
  if (workers <= 0) {
    workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  // Small instances are not worth a thread.
  if (n < 16) workers = 1;

  GroundStateResult result;
  if (inst.is_exact()) {
    ExactSearch search(inst, prefix_bits);
    std::vector<ChunkResult<std::int64_t>> parts(chunks);
    run_chunks(chunks, workers, [&](std::size_t c) { parts[c] = search.run(c); });
    ChunkResult<std::int64_t> total = parts.front();
    for (std::size_t c = 1; c < chunks; ++c) {
      const auto& p = parts[c];
      if (p.best < total.best) {
        total = p;
      } else if (p.best == total.best) {
        total.count += p.count;
        total.best_index = std::min(total.best_index, p.best_index);
      }
    }
    result.exact_min = Rational(total.best, inst.denominator());
    result.min_energy = result.exact_min->to_double();
    result.canonical_argmin = SpinAssignment::from_index(n, total.best_index);
    result.degeneracy = total.count;
    return result;
  }

  // Inexact weights: every state is summed from scratch so its energy does
  // not depend on the enumeration path. Two passes: minimum, then ties.
  std::vector<double> mins(chunks, std::numeric_limits<double>::infinity());
  run_chunks(chunks, workers, [&](std::size_t c) {
    for_each_in_chunk(n, low_bits, c, [&](std::uint64_t, const auto& s) {
      mins[c] = std::min(mins[c], real_energy(inst, s));
    });
  });
  const double best = *std::min_element(mins.begin(), mins.end());
  const double cutoff = best + options.tolerance;
  std::vector<ChunkResult<double>> parts(chunks);
  run_chunks(chunks, workers, [&](std::size_t c) {
    auto& p = parts[c];
    p.best_index = std::numeric_limits<std::uint64_t>::max();
    for_each_in_chunk(n, low_bits, c, [&](std::uint64_t index, const auto& s) {
      if (real_energy(inst, s) <= cutoff) {
        if (p.count++ == 0) p.best_index = index;
      }
    });
  });
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  for (const auto& p : parts) {
    result.degeneracy += p.count;
    first = std::min(first, p.best_index);
  }
  result.min_energy = best;
  result.canonical_argmin = SpinAssignment::from_index(n, first);
  return result;
}

}  // namespace triad
