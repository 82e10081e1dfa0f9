#include "sinkloc/optimizer.hpp"

#include <algorithm>
#include <map>

#include "sinkloc/tree.hpp"

namespace sinkloc {

bool InterferingThreshold::settled(Cost value) const {
  return (margin_.low && value <= *margin_.low) || (margin_.high && value > *margin_.high);
}

bool InterferingThreshold::inside(Cost value) const { return !settled(value); }

bool InterferingThreshold::run_probe(Cost value) {
  ++probes_;
  const bool feasible = probe_(value);
  if (feasible) {
    margin_.high = value;
  } else {
    margin_.low = value;
  }
  return feasible;
}

bool InterferingThreshold::admits(Cost value) {
  if (margin_.low && value <= *margin_.low) return true;
  if (margin_.high && value > *margin_.high) return false;
  return !run_probe(value);
}

std::vector<bool> InterferingThreshold::admits_all(std::span<const Cost> values) {
  std::vector<Cost> open;
  for (Cost c : values) {
    if (inside(c)) open.push_back(c);
  }
  std::sort(open.begin(), open.end());
  open.erase(std::unique(open.begin(), open.end()), open.end());
  // Smallest feasible candidate by binary search.
  std::ptrdiff_t lo = -1;
  auto hi = static_cast<std::ptrdiff_t>(open.size());
  while (hi - lo > 1) {
    const std::ptrdiff_t mid = lo + (hi - lo) / 2;
    if (run_probe(open[mid])) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  std::vector<bool> out;
  out.reserve(values.size());
  for (Cost c : values) out.push_back(margin_.low && c <= *margin_.low);
  return out;
}

Cost InterferingThreshold::resolve(bool run_feasible) const {
  if (run_feasible) return margin_.low ? *margin_.low + 1 : 0;
  if (!margin_.high) {
    throw OptimizationError(OptimizationError::Kind::VerificationFailed, "infeasible run without an upper bound");
  }
  return *margin_.high;
}

namespace {

FeasibilityResult run_solver(SolverKind solver, const Instance& inst, Oracle& oracle, Threshold& threshold) {
  return solver == SolverKind::Iterative ? bounded_cost_iterative(inst, oracle, threshold)
                                         : bounded_cost_fast(inst, oracle, threshold);
}

}  // namespace

OptimizationResult solve_parametric(const Instance& inst, const CostFunction& fn, SolverKind solver) {
  Oracle probe_oracle(inst, fn);
  InterferingThreshold threshold([&](Cost t) {
    FixedThreshold fixed(t);
    return run_solver(solver, inst, probe_oracle, fixed).feasible();
  });
  Oracle oracle(inst, fn);
  const FeasibilityResult run = run_solver(solver, inst, oracle, threshold);
  const Cost best = threshold.resolve(run.feasible());

  OptimizationResult result;
  result.cost = best;
  result.interfered = run.stats;
  result.probes = threshold.probes();
  result.probe_calls = probe_oracle.stats();
  result.margin = threshold.margin();

  Oracle check_oracle(inst, fn);
  FixedThreshold at(best);
  FeasibilityResult clean = run_solver(solver, inst, check_oracle, at);
  if (!clean.feasible()) {
    throw OptimizationError(OptimizationError::Kind::VerificationFailed,
                            "infeasible at the computed optimum " + format_cost(best));
  }
  if (best > 0) {
    FixedThreshold below(best - 1);
    if (run_solver(solver, inst, check_oracle, below).feasible()) {
      throw OptimizationError(OptimizationError::Kind::VerificationFailed,
                              "feasible below the computed optimum " + format_cost(best));
    }
  }
  result.configuration = std::move(*clean.configuration);
  return result;
}

OptimizationResult solve_parametric_iterative(const Instance& inst, const CostFunction& fn) {
  return solve_parametric(inst, fn, SolverKind::Iterative);
}

OptimizationResult solve_parametric_fast(const Instance& inst, const CostFunction& fn) {
  return solve_parametric(inst, fn, SolverKind::Fast);
}

namespace {

// Instance in which every internal sink s hands its role to a new pendant leaf
// attached by a free, unbounded edge.
struct PendantTransform {
  Instance inst;
  VertexSet sinks;
  // Original sink behind each vertex of the transformed instance that is a sink.
  std::vector<VertexId> origin;
};

PendantTransform pendant_transform(const Instance& inst, const VertexSet& sinks) {
  if (sinks.empty()) throw OptimizationError(OptimizationError::Kind::SinkSetEmpty, "sink set is empty");
  const auto n = static_cast<VertexId>(inst.size());
  std::vector<RawEdge> edges;
  for (const Edge& e : inst.edges()) {
    edges.push_back({e.u, e.v, static_cast<std::int64_t>(e.tau), static_cast<std::int64_t>(e.cap)});
  }
  std::vector<std::int64_t> weights(inst.weights().begin(), inst.weights().end());
  const auto cap = static_cast<std::int64_t>(std::max<std::uint64_t>(1, inst.total_weight()));
  std::vector<VertexId> origin(n, kNoVertex);
  std::vector<VertexId> labels;
  for (VertexId s : sinks.members()) {
    if (inst.degree(s) <= 1) {
      origin[s] = s;
      labels.push_back(s);
      continue;
    }
    const auto leaf = static_cast<VertexId>(weights.size());
    edges.push_back({s, leaf, 0, cap});
    weights.push_back(0);
    origin.push_back(s);
    labels.push_back(leaf);
  }
  origin.resize(weights.size(), kNoVertex);
  PendantTransform out{Instance::build(static_cast<std::int64_t>(weights.size()), edges, weights,
                                       static_cast<std::int64_t>(sinks.size())),
                       VertexSet(weights.size()), std::move(origin)};
  for (VertexId l : labels) out.sinks.insert(l);
  return out;
}

// Blocks of the original instance. A sink that landed in another block is
// split off together with everything behind it.
std::vector<Block> map_back(const Instance& inst, const VertexSet& sinks, const PendantTransform& t,
                            const Configuration& config) {
  const std::size_t n = inst.size();
  std::map<VertexId, VertexSet> blocks;
  for (VertexId s : sinks.members()) blocks.emplace(s, VertexSet(n));
  for (const Block& b : config.blocks()) {
    VertexSet& target = blocks.at(t.origin[b.sink]);
    for (VertexId v : b.vertices.members()) {
      if (static_cast<std::size_t>(v) < n) target.insert(v);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId s : sinks.members()) {
      if (blocks.at(s).contains(s)) continue;
      for (auto& [owner, members] : blocks) {
        if (!members.contains(s)) continue;
        const std::vector<VertexId> path = tree_path(inst, members, s, owner);
        const VertexSet behind = component_from(inst, members, s, path[1]);
        for (VertexId v : behind.members()) {
          members.erase(v);
          blocks.at(s).insert(v);
        }
        changed = true;
        break;
      }
    }
  }
  std::vector<Block> out;
  for (auto& [s, members] : blocks) out.push_back({std::move(members), s});
  return out;
}

}  // namespace

FeasibilityResult fixed_sinks_feasible(const Instance& inst, const CostFunction& fn, const VertexSet& sinks,
                                       Cost limit) {
  const PendantTransform t = pendant_transform(inst, sinks);
  Oracle oracle(t.inst, fn);
  FixedThreshold threshold(limit);
  return bounded_cost_fixed_sinks(t.inst, oracle, threshold, t.sinks);
}

FixedSinksResult partition_fixed_sinks(const Instance& inst, const CostFunction& fn, const VertexSet& sinks) {
  const PendantTransform t = pendant_transform(inst, sinks);
  Oracle probe_oracle(t.inst, fn);
  InterferingThreshold threshold([&](Cost limit) {
    FixedThreshold fixed(limit);
    return bounded_cost_fixed_sinks(t.inst, probe_oracle, fixed, t.sinks).feasible();
  });
  Oracle oracle(t.inst, fn);
  const FeasibilityResult run = bounded_cost_fixed_sinks(t.inst, oracle, threshold, t.sinks);
  const Cost best = threshold.resolve(run.feasible());

  FixedThreshold at(best);
  FeasibilityResult clean = bounded_cost_fixed_sinks(t.inst, oracle, at, t.sinks);
  if (!clean.feasible()) {
    throw OptimizationError(OptimizationError::Kind::VerificationFailed,
                            "fixed sinks infeasible at the computed optimum " + format_cost(best));
  }
  if (best > 0) {
    FixedThreshold below(best - 1);
    if (bounded_cost_fixed_sinks(t.inst, oracle, below, t.sinks).feasible()) {
      throw OptimizationError(OptimizationError::Kind::VerificationFailed,
                              "fixed sinks feasible below the computed optimum " + format_cost(best));
    }
  }
  FixedSinksResult result;
  result.blocks = map_back(inst, sinks, t, *clean.configuration);
  result.cost = 0;
  for (const Block& b : result.blocks) result.cost = std::max(result.cost, fn.evaluate(inst, b.vertices, b.sink));
  if (result.cost != best) {
    throw OptimizationError(OptimizationError::Kind::VerificationFailed,
                            "mapped partition costs " + format_cost(result.cost) + ", expected " + format_cost(best));
  }
  result.calls = oracle.stats();
  result.calls += probe_oracle.stats();
  return result;
}

}  // namespace sinkloc
