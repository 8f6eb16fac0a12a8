#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "blockpd/block_tree.hpp"
#include "blockpd/dp.hpp"
#include "blockpd/error.hpp"
#include "blockpd/generator.hpp"
#include "blockpd/instance_io.hpp"
#include "blockpd/oracle.hpp"
#include "json.hpp"

namespace blockpd::cli {
namespace {

struct SolveArgs {
  std::string file;
  bool json = false;
  bool check = false;
};

struct VerifyArgs {
  std::uint64_t seed = 0;
  std::size_t instances = 100;
  std::size_t max_blocks = 4;
  std::size_t max_size = 3;
  Weight wmax = 100;
};

struct GenArgs {
  std::size_t blocks = 0;
  std::size_t max_size = 0;
  Weight wmax = 0;
  std::uint64_t seed = 0;
  std::string output;
};

struct BenchArgs {
  std::size_t chain = 0;
  std::size_t repeat = 1;
};

struct DecomposeArgs {
  std::string file;
  bool dot = false;
};

void print_ids(std::ostream& out, std::span<const VertexId> ids) {
  for (VertexId v : ids) out << ' ' << v + 1;
}

int do_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const WeightedGraph g = read_instance_file(a.file);
  const Solution s = solve(g);
  if (a.check &&
      (!is_paired_dominating_set(g, s.set) || s.set.total_weight != s.weight)) {
    err << "error: solution failed validation\n";
    return kExitInternal;
  }
  if (a.json) {
    nlohmann::json j;
    j["weight"] = s.weight;
    std::vector<VertexId> ids;
    for (VertexId v : s.set.members) ids.push_back(v + 1);
    j["set"] = ids;
    j["n"] = g.vertex_count();
    j["blocks"] = s.block_count;
    out << j.dump() << '\n';
  } else {
    out << "weight " << s.weight << '\n' << "set";
    print_ids(out, s.set.members);
    out << '\n';
  }
  return kExitOk;
}

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.max_blocks == 0 || a.max_size < 2 || a.wmax == 0) {
    err << "error: need --max-blocks >= 1, --max-size >= 2, --wmax >= 1\n";
    return kExitInvalidInput;
  }
  const std::size_t largest = 1 + a.max_blocks * (a.max_size - 1);
  if (largest > oracle::kMaxPdsVertices) {
    err << "error: instances may reach " << largest
        << " vertices; the oracle handles at most " << oracle::kMaxPdsVertices
        << '\n';
    return kExitInvalidInput;
  }
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < a.instances; ++i) {
    const std::uint64_t seed = a.seed + i;
    const std::size_t blocks = 1 + i % a.max_blocks;
    const WeightedGraph g = random_block_graph(blocks, a.max_size, a.wmax, seed);
    const Solution s = solve(g);
    const auto expected = oracle::min_pds(g);
    const bool valid = is_paired_dominating_set(g, s.set);
    if (!expected || expected->weight != s.weight || !valid) {
      ++mismatches;
      err << "mismatch: seed " << seed << " blocks " << blocks << " dp "
          << s.weight << " oracle ";
      if (expected) {
        err << expected->weight;
      } else {
        err << "none";
      }
      err << (valid ? "" : " (invalid set)") << '\n';
    }
  }
  out << "instances " << a.instances << " mismatches " << mismatches << '\n';
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

int do_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const WeightedGraph g =
      random_block_graph(a.blocks, a.max_size, a.wmax, a.seed);
  const std::vector<std::string> comments = {
      "generator " + std::string(kGeneratorAlgorithm),
      "blocks " + std::to_string(a.blocks) + " max-size " +
          std::to_string(a.max_size) + " wmax " + std::to_string(a.wmax) +
          " seed " + std::to_string(a.seed)};
  if (a.output.empty()) {
    write_instance(out, g, comments);
    return kExitOk;
  }
  std::ofstream file(a.output);
  if (!file) {
    err << "error: cannot write " << a.output << '\n';
    return kExitInvalidInput;
  }
  write_instance(file, g, comments);
  return kExitOk;
}

int do_bench(const BenchArgs& a, std::ostream& out, std::ostream&) {
  const WeightedGraph g = chain_of_triangles(a.chain);
  double best = 0;
  Weight weight = 0;
  for (std::size_t r = 0; r < std::max<std::size_t>(a.repeat, 1); ++r) {
    const auto start = std::chrono::steady_clock::now();
    weight = solve(g).weight;
    const std::chrono::duration<double> took =
        std::chrono::steady_clock::now() - start;
    if (r == 0 || took.count() < best) best = took.count();
  }
  out << "n " << g.vertex_count() << " blocks " << a.chain << " weight "
      << weight << " seconds " << best << '\n';
  return kExitOk;
}

int do_decompose(const DecomposeArgs& a, std::ostream& out, std::ostream&) {
  const WeightedGraph g = read_instance_file(a.file);
  const BlockCutTree t = find_blocks(g);
  if (a.dot) {
    out << to_dot(t);
    return kExitOk;
  }
  out << "blocks " << t.block_count() << '\n';
  for (BlockId b = 0; b < t.block_count(); ++b) {
    out << "block " << b << ':';
    print_ids(out, t.block(b));
    out << (t.is_pendant(b) ? " pendant" : "") << '\n';
  }
  out << "cut vertices";
  print_ids(out, t.cut_vertices());
  out << "\nelimination order";
  for (BlockId b : t.elimination_order()) out << ' ' << b;
  out << '\n';
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::kInternalInconsistency ? kExitInternal
                                                   : kExitInvalidInput;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Minimum-weight paired-domination on block graphs"};
  app.name("blockpd");
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("file", solve_args.file, "Instance file")->required();
  solve_cmd->add_flag("--json", solve_args.json, "Print JSON");
  solve_cmd->add_flag("--check", solve_args.check,
                      "Validate the set before printing");

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "Compare the solver with brute force");
  verify_cmd->add_option("--seed", verify_args.seed, "First seed");
  verify_cmd->add_option("--instances", verify_args.instances,
                         "Number of instances");
  verify_cmd->add_option("--max-blocks", verify_args.max_blocks,
                         "Blocks per instance cycle through 1..B");
  verify_cmd->add_option("--max-size", verify_args.max_size,
                         "Largest block size");
  verify_cmd->add_option("--wmax", verify_args.wmax, "Largest vertex weight");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--blocks", gen_args.blocks, "Number of blocks")
      ->required();
  gen_cmd->add_option("--max-size", gen_args.max_size, "Largest block size")
      ->required();
  gen_cmd->add_option("--wmax", gen_args.wmax, "Largest vertex weight")
      ->required();
  gen_cmd->add_option("--seed", gen_args.seed, "Seed")->required();
  gen_cmd->add_option("-o,--output", gen_args.output, "Output file");

  BenchArgs bench_args;
  auto* bench_cmd =
      app.add_subcommand("bench", "Time the solver on a chain of triangles");
  bench_cmd->add_option("--chain", bench_args.chain, "Number of triangles")
      ->required();
  bench_cmd->add_option("--repeat", bench_args.repeat, "Runs; best is shown");

  DecomposeArgs decompose_args;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "Print blocks and cut vertices");
  decompose_cmd->add_option("file", decompose_args.file, "Instance file")
      ->required();
  decompose_cmd->add_flag("--dot", decompose_args.dot, "Print Graphviz DOT");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*solve_cmd) return do_solve(solve_args, out, err);
    if (*verify_cmd) return do_verify(verify_args, out, err);
    if (*gen_cmd) return do_gen(gen_args, out, err);
    if (*bench_cmd) return do_bench(bench_args, out, err);
    if (*decompose_cmd) return do_decompose(decompose_args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace blockpd::cli
