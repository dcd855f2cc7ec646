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

// triad: generate TRIAD hardware, embed graphs, reduce and solve Ising
// problems. Exit codes: 0 ok, 1 verification/check failure, 2 usage or
// parse error.

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "triad/embedding.hpp"
#include "triad/hardware.hpp"
#include "triad/io.hpp"
#include "triad/ising.hpp"
#include "triad/reduction.hpp"

namespace {

using namespace triad;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string number(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(xs[k]);
  }
  return out;
}

io::Manifest load(const std::string& path) {
  return io::Manifest::parse(io::read_text(path));
}

io::Manifest load_as(const std::string& path, io::ArtifactKind kind) {
  io::Manifest m = load(path);
  if (m.kind != kind) {
    throw io::ParseError(path + ": expected a " + io::to_string(kind) +
                         " manifest, got " + io::to_string(m.kind));
  }
  return m;
}

ChopSpec chop_spec(const std::string& mode, int segment) {
  if (mode == "optimal") return ChopSpec::optimal();
  return ChopSpec::uniform(segment);
}

ChainStrengthPolicy chain_policy(const std::string& text) {
  if (text == "auto") return ChainStrengthPolicy::automatic();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("--chain-strength: expected auto or a number");
  }
  return ChainStrengthPolicy::fixed(value);
}

SolverOptions solver_options(int workers, int cap) {
  SolverOptions options;
  options.workers = workers;
  if (const char* env = std::getenv("TRIAD_SOLVER_CAP")) {
    options.max_spins = std::atoi(env);
  }
  if (cap > 0) options.max_spins = cap;
  return options;
}

struct GenArgs {
  std::string kind;
  int n = 0;
  int deg = 6;
  std::string mode = "optimal";
  int segment = 4;
  std::string hardware_out = "hardware.json";
  std::string embedding_out = "embedding.json";
};

int cmd_gen(const GenArgs& a) {
  TriadResult r = a.kind == "triad-virtual"
                      ? triad_virtual(a.n)
                      : triad_chopped(a.n, a.deg, chop_spec(a.mode, a.segment));
  const HardwareGraph& hw = *r.hardware;
  io::write_text(a.hardware_out, io::wrap(hw).dump());
  io::write_text(a.embedding_out, io::wrap(r.embedding).dump());
  const std::size_t per_chain = r.embedding.model(0).size();
  if (a.kind == "triad-virtual") {
    std::cout << "qubits=" << hw.qubit_count()
              << " couplers=" << hw.coupler_count() << "\n"
              << "max-degree=" << hw.graph().max_degree()
              << " per-chain=" << per_chain << "\n";
  } else {
    std::vector<int> sizes;
    for (Vertex q : r.embedding.model(0)) {
      const QubitMeta& m = hw.meta()[static_cast<std::size_t>(q)];
      sizes.push_back(m.last_position - m.first_position + 1);
    }
    std::cout << "qubits=" << hw.qubit_count() << " per-chain=" << per_chain
              << " sizes=" << join(sizes) << "\n"
              << "couplers=" << hw.coupler_count()
              << " max-degree=" << hw.graph().max_degree() << "\n";
  }
  return kOk;
}

void print_violations(const std::vector<Violation>& violations) {
  for (const Violation& v : violations) {
    std::cout << "VIOLATION " << to_string(v.kind) << ": " << v.message << "\n";
  }
}

int cmd_embed(const std::string& graph_file, int deg, const std::string& mode,
              int segment, const std::string& out) {
  const Graph g = io::graph_from_json(load_as(graph_file, io::ArtifactKind::graph).payload);
  const MinorEmbedding emb = embed_via_complete(g, deg, chop_spec(mode, segment));
  const auto violations = verify_embedding(emb);
  if (!violations.empty()) {
    print_violations(violations);
    return kFailed;
  }
  io::write_text(out, io::wrap(emb).dump());
  std::cerr << "models=" << emb.models().size()
            << " qubits=" << emb.hardware().qubit_count()
            << " tau=" << g.edge_count() << "\n";
  return kOk;
}

int cmd_verify(const std::string& file) {
  const MinorEmbedding emb =
      io::embedding_from_json(load_as(file, io::ArtifactKind::embedding).payload);
  const auto violations = verify_embedding(emb);
  if (!violations.empty()) {
    print_violations(violations);
    std::cout << "FAIL: " << violations.size() << " violation(s)\n";
    return kFailed;
  }
  std::cout << "OK: " << emb.models().size() << " models, "
            << emb.qubits_used() << " qubits, class="
            << to_string(classify_embedding(emb)) << "\n";
  return kOk;
}

int cmd_reduce(const std::string& ising_file, const std::string& emb_file,
               const std::string& strength, const std::string& out) {
  const IsingInstance inst =
      io::ising_from_json(load_as(ising_file, io::ArtifactKind::ising).payload);
  const MinorEmbedding emb =
      io::embedding_from_json(load_as(emb_file, io::ArtifactKind::embedding).payload);
  if (!(emb.logical_graph() == inst.graph())) {
    throw std::invalid_argument("embedding and instance have different graphs");
  }
  const auto violations = verify_embedding(emb);
  if (!violations.empty()) {
    print_violations(violations);
    return kFailed;
  }
  const EmbeddedIsing e = embed_ising(inst, emb, chain_policy(strength));
  io::write_text(out, io::wrap(e).dump());
  std::cerr << "qubits=" << e.instance.vertex_count()
            << " couplers=" << e.instance.graph().edge_count()
            << " chain-couplers=" << e.chain_couplers.size()
            << " offset=" << number(e.aligned_offset) << "\n";
  return kOk;
}

int cmd_solve(const std::string& file, int workers, int cap,
              const std::string& out) {
  const io::Manifest m = load(file);
  const SolverOptions options = solver_options(workers, cap);
  io::Json report;
  std::ostringstream text;
  if (m.kind == io::ArtifactKind::ising) {
    const IsingInstance inst = io::ising_from_json(m.payload);
    const GroundStateResult r = solve_exhaustive(inst, options);
    report = io::ground_state_to_json(r);
    text << "min=" << number(r.min_energy) << " degeneracy=" << r.degeneracy
         << " argmin=" << r.canonical_argmin.str() << "\n";
  } else if (m.kind == io::ArtifactKind::embedded_ising) {
    const EmbeddedIsing e = io::embedded_ising_from_json(m.payload);
    const GroundStateResult r = solve_exhaustive(e.instance, options);
    report = io::ground_state_to_json(r);
    const auto broken = broken_chains(r.canonical_argmin, e.embedding);
    const SpinAssignment logical =
        unembed(r.canonical_argmin, e.embedding, UnembedMode::majority);
    report["broken_chains"] = broken;
    report["logical_argmin"] = io::spins_to_json(logical);
    text << "min=" << number(r.min_energy) << " degeneracy=" << r.degeneracy
         << " argmin=" << r.canonical_argmin.str() << "\n"
         << "offset=" << number(e.aligned_offset)
         << " broken-chains=" << broken.size()
         << " logical=" << logical.str() << "\n";
  } else {
    throw io::ParseError(file + ": solve expects an ising or embedded_ising manifest");
  }
  std::cout << text.str();
  if (!out.empty()) {
    io::write_text(out, io::Manifest{io::ArtifactKind::report, report}.dump());
  }
  return kOk;
}

int cmd_check(const std::string& ising_file, const std::string& emb_file,
              const std::string& strength, int workers, int cap,
              const std::string& out) {
  const IsingInstance inst =
      io::ising_from_json(load_as(ising_file, io::ArtifactKind::ising).payload);
  const MinorEmbedding emb =
      io::embedding_from_json(load_as(emb_file, io::ArtifactKind::embedding).payload);
  if (!(emb.logical_graph() == inst.graph())) {
    throw std::invalid_argument("embedding and instance have different graphs");
  }
  const auto violations = verify_embedding(emb);
  if (!violations.empty()) {
    print_violations(violations);
    return kFailed;
  }
  const ReductionReport r = reduction_check(inst, emb, chain_policy(strength),
                                            solver_options(workers, cap));
  if (!out.empty()) {
    io::write_text(out, io::Manifest{io::ArtifactKind::report,
                                     io::reduction_report_to_json(r)}.dump());
  }
  std::cout << (r.energy_matches ? "OK: E_emb_min = E_min + offset"
                                 : "FAIL: E_emb_min != E_min + offset")
            << "\n"
            << "E_min=" << number(r.original.min_energy)
            << " E_emb_min=" << number(r.embedded.min_energy)
            << " offset=" << number(r.aligned_offset)
            << " exact=" << (r.exact ? "yes" : "no") << "\n";
  if (!r.broken.empty()) {
    std::cout << "broken chains:";
    for (Vertex v : r.broken) std::cout << ' ' << v;
    std::cout << "\n";
  } else {
    std::cout << "unembedded argmin "
              << (r.unembed_attains ? "attains" : "misses") << " E_min\n";
  }
  return r.ok() ? kOk : kFailed;
}

int cmd_export(const std::string& file, const std::string& format,
               const std::string& out) {
  const io::Manifest m = load(file);
  const bool dot = format == "dot";
  std::string text;
  switch (m.kind) {
    case io::ArtifactKind::graph: {
      const Graph g = io::graph_from_json(m.payload);
      text = dot ? io::to_dot(g) : io::to_svg(g);
      break;
    }
    case io::ArtifactKind::hardware: {
      const HardwareGraph hw = io::hardware_from_json(m.payload);
      text = dot ? io::to_dot(hw) : io::to_svg(hw);
      break;
    }
    case io::ArtifactKind::embedding: {
      const MinorEmbedding emb = io::embedding_from_json(m.payload);
      text = dot ? io::to_dot(emb.hardware(), &emb) : io::to_svg(emb.hardware(), &emb);
      break;
    }
    case io::ArtifactKind::embedded_ising: {
      const EmbeddedIsing e = io::embedded_ising_from_json(m.payload);
      const MinorEmbedding& emb = e.embedding;
      text = dot ? io::to_dot(emb.hardware(), &emb) : io::to_svg(emb.hardware(), &emb);
      break;
    }
    default:
      throw io::ParseError(file + ": nothing to export in a " +
                           io::to_string(m.kind) + " manifest");
  }
  io::write_text(out, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TRIAD complete-graph-minor hardware toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate TRIAD hardware and its canonical K_n embedding");
  gen_cmd->add_option("kind", gen.kind, "triad-virtual or triad-chopped")
      ->required()
      ->check(CLI::IsMember({"triad-virtual", "triad-chopped"}));
  gen_cmd->add_option("--n", gen.n, "Number of logical vertices")->required()->check(CLI::Range(2, 4096));
  gen_cmd->add_option("--deg", gen.deg, "Physical degree bound (chopped)")->check(CLI::Range(3, 1 << 20));
  gen_cmd->add_option("--mode", gen.mode, "Chopping mode")
      ->check(CLI::IsMember({"optimal", "uniform"}));
  gen_cmd->add_option("--segment", gen.segment, "Positions per qubit in uniform mode")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--hardware", gen.hardware_out, "Hardware manifest output ('-' for stdout)");
  gen_cmd->add_option("--embedding", gen.embedding_out, "Embedding manifest output ('-' for stdout)");

  std::string in_a, in_b, out = "-", mode = "optimal", strength = "auto", format;
  int deg = 6, segment = 4, workers = 0, cap = 0;

  auto* embed_cmd = app.add_subcommand("embed", "Embed a graph through the TRIAD route");
  embed_cmd->add_option("graph", in_a, "Graph manifest ('-' for stdin)")->required();
  embed_cmd->add_option("--deg", deg, "Physical degree bound")->check(CLI::Range(3, 1 << 20));
  embed_cmd->add_option("--mode", mode, "Chopping mode")->check(CLI::IsMember({"optimal", "uniform"}));
  embed_cmd->add_option("--segment", segment, "Positions per qubit in uniform mode")
      ->check(CLI::PositiveNumber);
  embed_cmd->add_option("-o,--out", out, "Output file ('-' for stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Verify an embedding manifest");
  verify_cmd->add_option("embedding", in_a, "Embedding manifest ('-' for stdin)")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Build the embedded Ising instance");
  reduce_cmd->add_option("ising", in_a, "Ising manifest")->required();
  reduce_cmd->add_option("embedding", in_b, "Embedding manifest")->required();
  reduce_cmd->add_option("--chain-strength", strength, "auto or a negative number");
  reduce_cmd->add_option("-o,--out", out, "Output file ('-' for stdout)");

  std::string report_out;
  auto* solve_cmd = app.add_subcommand("solve", "Exhaustive ground state of an Ising or embedded Ising manifest");
  solve_cmd->add_option("file", in_a, "Ising or embedded_ising manifest")->required();
  solve_cmd->add_option("--workers", workers, "Solver threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--cap", cap, "Max spins (default 26, or TRIAD_SOLVER_CAP)")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("-o,--out", report_out, "Write a report manifest");

  auto* check_cmd = app.add_subcommand("check", "Check the reduction by solving both sides exhaustively");
  check_cmd->add_option("ising", in_a, "Ising manifest")->required();
  check_cmd->add_option("embedding", in_b, "Embedding manifest")->required();
  check_cmd->add_option("--chain-strength", strength, "auto or a negative number");
  check_cmd->add_option("--workers", workers, "Solver threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--cap", cap, "Max spins (default 26, or TRIAD_SOLVER_CAP)")->check(CLI::NonNegativeNumber);
  check_cmd->add_option("-o,--out", report_out, "Write a report manifest");

  auto* export_cmd = app.add_subcommand("export", "Render a manifest as DOT or SVG");
  export_cmd->add_option("file", in_a, "Graph, hardware, embedding or embedded_ising manifest")->required();
  export_cmd->add_option("--format", format, "dot or svg")
      ->required()
      ->check(CLI::IsMember({"dot", "svg"}));
  export_cmd->add_option("-o,--out", out, "Output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*embed_cmd) return cmd_embed(in_a, deg, mode, segment, out);
    if (*verify_cmd) return cmd_verify(in_a);
    if (*reduce_cmd) return cmd_reduce(in_a, in_b, strength, out);
    if (*solve_cmd) return cmd_solve(in_a, workers, cap, report_out);
    if (*check_cmd) return cmd_check(in_a, in_b, strength, workers, cap, report_out);
    if (*export_cmd) return cmd_export(in_a, format, out);
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SolverCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
