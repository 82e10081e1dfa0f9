#include "cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <set>

#include "sinkloc/brute_force.hpp"
#include "sinkloc/cost.hpp"
#include "sinkloc/feasibility.hpp"
#include "sinkloc/generator.hpp"
#include "sinkloc/instance_io.hpp"
#include "sinkloc/optimizer.hpp"

namespace sinkloc::cli {
namespace {

constexpr std::size_t kValidateBruteForceCap = 12;

using Clock = std::chrono::steady_clock;

struct CommonOptions {
  std::string file;
  std::optional<std::int64_t> k;
  std::string oracle = "evac";
  std::string algo = "fast";
};

std::unique_ptr<CostFunction> oracle_from(const std::string& name) {
  if (name == "kcenter") return make_cost_function(CostKind::Eccentricity);
  return make_cost_function(parse_cost_kind(name));
}

SolverKind solver_from(const std::string& name) {
  return name == "iterative" ? SolverKind::Iterative : SolverKind::Fast;
}

std::string elapsed_ms(Clock::time_point start) {
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

void add_common(CLI::App* cmd, CommonOptions& o, bool with_algo) {
  cmd->add_option("file", o.file, "instance file")->required();
  cmd->add_option("--k", o.k, "sink budget, overrides the file");
  cmd->add_option("--oracle", o.oracle, "cost oracle")
      ->check(CLI::IsMember({"evac", "evacuation", "kcenter", "ecc", "eccentricity"}));
  if (with_algo) cmd->add_option("--algo", o.algo, "feasibility solver")->check(CLI::IsMember({"iterative", "fast"}));
}

void print_blocks(std::ostream& out, const std::vector<Block>& blocks) {
  out << "sinks";
  for (const Block& b : blocks) out << ' ' << b.sink;
  out << "\n";
  for (const Block& b : blocks) {
    out << "block " << b.sink;
    for (VertexId v : b.vertices.members()) out << ' ' << v;
    out << "\n";
  }
}

// Every block must be connected, hold its sink and cost at most `cost`.
bool verify_blocks(const Instance& inst, const CostFunction& fn, const std::vector<Block>& blocks, Cost cost) {
  VertexSet covered(inst.size());
  for (const Block& b : blocks) {
    if (!b.vertices.contains(b.sink) || fn.evaluate(inst, b.vertices, b.sink) > cost) return false;
    for (VertexId v : b.vertices.members()) {
      if (covered.contains(v)) return false;
      covered.insert(v);
    }
  }
  return covered.size() == inst.size();
}

void print_calls(std::ostream& out, const SolverStats& s, const OracleStats& probes) {
  out << "oracle_calls " << s.total().calls + probes.calls << "\n";
  out << "calls_pc " << s.pc.calls << "\n";
  out << "calls_rc " << s.rc.calls << "\n";
  out << "calls_degenerate " << s.degenerate.calls << "\n";
  out << "calls_probe " << probes.calls << "\n";
}

void print_header(std::ostream& out, const std::string& algorithm, const CostFunction& fn, const Instance& inst) {
  out << "algorithm " << algorithm << "\n";
  out << "oracle " << to_string(fn.kind()) << "\n";
  out << "n " << inst.size() << "\n";
  out << "k " << inst.k() << "\n";
}

void print_summary(std::ostream& out, const std::string& algorithm, std::size_t sinks, Cost cost, std::size_t n) {
  out << "# " << algorithm << ": " << sinks << (sinks == 1 ? " sink" : " sinks") << ", cost " << format_cost(cost)
      << " over " << n << (n == 1 ? " vertex" : " vertices") << "\n";
}

int cmd_solve(const CommonOptions& o, std::ostream& out) {
  const Instance inst = read_instance_file(o.file, o.k);
  const auto fn = oracle_from(o.oracle);
  const auto start = Clock::now();
  const OptimizationResult r = solve_parametric(inst, *fn, solver_from(o.algo));
  const std::string ms = elapsed_ms(start);
  const std::vector<Block> blocks = r.configuration.blocks();
  const bool ok = verify_blocks(inst, *fn, blocks, r.cost);
  print_header(out, o.algo, *fn, inst);
  out << "cost " << format_cost(r.cost) << "\n";
  print_blocks(out, blocks);
  print_calls(out, r.interfered, r.probe_calls);
  out << "verified " << (ok ? "yes" : "no") << "\n";
  out << "wall_time_ms " << ms << "\n";
  print_summary(out, o.algo, blocks.size(), r.cost, inst.size());
  return ok ? kOk : kMismatch;
}

int cmd_check(const CommonOptions& o, Cost threshold, std::ostream& out) {
  const Instance inst = read_instance_file(o.file, o.k);
  const auto fn = oracle_from(o.oracle);
  const auto start = Clock::now();
  Oracle oracle(inst, *fn);
  const FeasibilityResult r = solver_from(o.algo) == SolverKind::Iterative
                                  ? bounded_cost_iterative(inst, oracle, threshold)
                                  : bounded_cost_fast(inst, oracle, threshold);
  const std::string ms = elapsed_ms(start);
  print_header(out, o.algo, *fn, inst);
  out << "threshold " << threshold << "\n";
  out << "feasible " << (r.feasible() ? "yes" : "no") << "\n";
  bool ok = true;
  if (r.feasible()) {
    const std::vector<Block> blocks = r.configuration->blocks();
    ok = verify_blocks(inst, *fn, blocks, threshold);
    out << "cost " << format_cost(r.configuration->cost(inst, *fn)) << "\n";
    print_blocks(out, blocks);
  }
  print_calls(out, r.stats, {});
  if (r.feasible()) out << "verified " << (ok ? "yes" : "no") << "\n";
  out << "wall_time_ms " << ms << "\n";
  out << "# " << o.algo << ": threshold " << threshold << (r.feasible() ? " is feasible" : " is infeasible") << "\n";
  if (!ok) return kMismatch;
  return r.feasible() ? kOk : kInfeasible;
}

int cmd_partition(const CommonOptions& o, const std::vector<std::int64_t>& sink_list, std::ostream& out,
                  std::ostream& err) {
  const Instance inst = read_instance_file(o.file, o.k);
  const auto fn = oracle_from(o.oracle);
  VertexSet sinks(inst.size());
  for (std::int64_t s : sink_list) {
    if (s < 0 || static_cast<std::size_t>(s) >= inst.size()) {
      err << "invalid instance: sink " << s << " out of range\n";
      return kInvalidInstance;
    }
    sinks.insert(static_cast<VertexId>(s));
  }
  const auto start = Clock::now();
  const FixedSinksResult r = partition_fixed_sinks(inst, *fn, sinks);
  const std::string ms = elapsed_ms(start);
  const bool ok = verify_blocks(inst, *fn, r.blocks, r.cost);
  print_header(out, "fixed", *fn, inst);
  out << "cost " << format_cost(r.cost) << "\n";
  print_blocks(out, r.blocks);
  out << "oracle_calls " << r.calls.calls << "\n";
  out << "verified " << (ok ? "yes" : "no") << "\n";
  out << "wall_time_ms " << ms << "\n";
  print_summary(out, "fixed", r.blocks.size(), r.cost, inst.size());
  return ok ? kOk : kMismatch;
}

int cmd_validate(const CommonOptions& o, std::uint64_t seed, bool inject_fault, std::ostream& out,
                 std::ostream& err) {
  const Instance inst = read_instance_file(o.file, o.k);
  const auto fn = oracle_from(o.oracle);
  const OptimizationResult it = solve_parametric(inst, *fn, SolverKind::Iterative);
  const OptimizationResult fast = solve_parametric(inst, *fn, SolverKind::Fast);
  const Cost fast_cost = fast.cost + (inject_fault ? 1 : 0);
  std::optional<Cost> brute;
  if (inst.size() <= kValidateBruteForceCap) {
    brute = brute_force_optimal(inst, *fn, inst.k()).cost;
  } else {
    err << "warning: n=" << inst.size() << " exceeds the brute-force cap " << kValidateBruteForceCap
        << "; solver-only self-check\n";
  }

  bool agree = it.cost == fast_cost && (!brute || *brute == it.cost);
  agree = agree && verify_blocks(inst, *fn, it.configuration.blocks(), it.cost) &&
          verify_blocks(inst, *fn, fast.configuration.blocks(), fast_cost);

  std::set<Cost> thresholds{it.cost};
  if (it.cost > 0) thresholds.insert(it.cost - 1);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 6; ++i) thresholds.insert(rng() % (2 * it.cost + 2));
  std::size_t mismatches = 0;
  for (Cost t : thresholds) {
    Oracle a(inst, *fn);
    Oracle b(inst, *fn);
    const bool vi = bounded_cost_iterative(inst, a, t).feasible();
    const bool vf = bounded_cost_fast(inst, b, t).feasible();
    const bool expected = brute ? brute_force_feasible(inst, *fn, inst.k(), t) : t >= it.cost;
    if (vi != expected || vf != expected) ++mismatches;
  }
  agree = agree && mismatches == 0;

  out << "oracle " << to_string(fn->kind()) << "\n";
  out << "n " << inst.size() << "\n";
  out << "k " << inst.k() << "\n";
  out << "iterative " << format_cost(it.cost) << "\n";
  out << "fast " << format_cost(fast_cost) << "\n";
  out << "brute_force " << (brute ? format_cost(*brute) : std::string("skipped")) << "\n";
  out << "thresholds_checked " << thresholds.size() << "\n";
  out << "threshold_mismatches " << mismatches << "\n";
  out << "verdict " << (agree ? "agree" : "mismatch") << "\n";
  return agree ? kOk : kMismatch;
}

int cmd_gen(const GeneratorOptions& g, const std::string& output, std::ostream& out) {
  const std::string text = serialize_instance(generate_instance(g));
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output, std::ios::binary);
    file << text;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minmax k-sink location and evacuation on trees", "sinkloc_cli"};
  app.require_subcommand(1);

  CommonOptions solve_opts;
  CLI::App* solve = app.add_subcommand("solve", "minimise the worst block cost with at most k sinks");
  add_common(solve, solve_opts, true);

  CommonOptions check_opts;
  Cost threshold = 0;
  CLI::App* check = app.add_subcommand("check", "decide feasibility at a threshold");
  add_common(check, check_opts, true);
  check->add_option("--threshold", threshold, "cost threshold")->required();

  CommonOptions part_opts;
  std::vector<std::int64_t> sink_list;
  CLI::App* partition = app.add_subcommand("partition", "best partition for a given sink set");
  add_common(partition, part_opts, false);
  partition->add_option("--sinks", sink_list, "comma-separated sink list")->required()->delimiter(',');

  CommonOptions val_opts;
  std::uint64_t seed = 0;
  bool inject_fault = false;
  CLI::App* validate = app.add_subcommand("validate", "compare both solvers with brute force");
  add_common(validate, val_opts, false);
  validate->add_option("--seed", seed, "seed for sampled thresholds");
  validate->add_flag("--inject-fault", inject_fault, "perturb the fast result")->group("");

  GeneratorOptions gen_opts;
  std::string shape = "random";
  std::string output;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--n", gen_opts.n, "vertex count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--k", gen_opts.k, "sink budget")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_opts.seed, "random seed");
  gen->add_option("--max-tau", gen_opts.max_tau, "largest transit time")->check(CLI::PositiveNumber);
  gen->add_option("--max-cap", gen_opts.max_cap, "largest capacity")->check(CLI::PositiveNumber);
  gen->add_option("--max-w", gen_opts.max_weight, "largest weight")->check(CLI::PositiveNumber);
  gen->add_option("--shape", shape, "tree shape")->check(CLI::IsMember({"random", "path", "star", "caterpillar"}));
  gen->add_option("-o,--output", output, "output file, default stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*solve) return cmd_solve(solve_opts, out);
    if (*check) return cmd_check(check_opts, threshold, out);
    if (*partition) return cmd_partition(part_opts, sink_list, out, err);
    if (*validate) return cmd_validate(val_opts, seed, inject_fault, out, err);
    gen_opts.shape = parse_tree_shape(shape);
    return cmd_gen(gen_opts, output, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InstanceError& e) {
    err << "invalid instance: " << e.what() << "\n";
    return kInvalidInstance;
  } catch (const OptimizationError& e) {
    if (e.kind() == OptimizationError::Kind::SinkSetEmpty) {
      err << "invalid instance: " << e.what() << "\n";
      return kInvalidInstance;
    }
    err << "verification failed: " << e.what() << "\n";
    return kMismatch;
  }
}

}  // namespace sinkloc::cli
