#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sinkloc/configuration.hpp"
#include "sinkloc/cost.hpp"
#include "sinkloc/feasibility.hpp"
#include "sinkloc/instance.hpp"
#include "sinkloc/vertex_set.hpp"

namespace sinkloc {

// Known bounds on the unknown optimum T*: `low` is infeasible, `high` is
// feasible. An empty bound is unbounded.
struct ThresholdMargin {
  std::optional<Cost> low;
  std::optional<Cost> high;
};

// Resolves comparisons a <= T* without knowing T*, narrowing the margin with
// clean feasibility probes whenever a value falls inside it.
class InterferingThreshold final : public Threshold {
 public:
  using Probe = std::function<bool(Cost)>;

  explicit InterferingThreshold(Probe probe) : probe_(std::move(probe)) {}

  bool admits(Cost value) override;
  std::vector<bool> admits_all(std::span<const Cost> values) override;

  const ThresholdMargin& margin() const { return margin_; }
  std::uint64_t probes() const { return probes_; }
  // T* implied by the outcome of the interfered run.
  Cost resolve(bool run_feasible) const;

 private:
  bool inside(Cost value) const;
  bool settled(Cost value) const;
  bool run_probe(Cost value);

  Probe probe_;
  ThresholdMargin margin_;
  std::uint64_t probes_ = 0;
};

enum class SolverKind { Iterative, Fast };

class OptimizationError : public std::logic_error {
 public:
  enum class Kind { VerificationFailed, SinkSetEmpty };

  OptimizationError(Kind kind, const std::string& what) : std::logic_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct OptimizationResult {
  Cost cost = 0;
  Configuration configuration;
  // Oracle use of the interfered run and of the clean probes.
  SolverStats interfered;
  OracleStats probe_calls;
  std::uint64_t probes = 0;
  ThresholdMargin margin;
};

// Minimum over sink sets of size at most k of the best partition cost.
// The result is checked: feasible at T* and infeasible at T*-1.
OptimizationResult solve_parametric(const Instance& inst, const CostFunction& fn, SolverKind solver);
OptimizationResult solve_parametric_iterative(const Instance& inst, const CostFunction& fn);
OptimizationResult solve_parametric_fast(const Instance& inst, const CostFunction& fn);

// Feasibility for a prescribed sink set; internal sinks are handled by a
// pendant-leaf transform.
FeasibilityResult fixed_sinks_feasible(const Instance& inst, const CostFunction& fn, const VertexSet& sinks,
                                       Cost limit);

struct FixedSinksResult {
  Cost cost = 0;
  std::vector<Block> blocks;
  OracleStats calls;
};

// Optimal partition for the given sinks.
FixedSinksResult partition_fixed_sinks(const Instance& inst, const CostFunction& fn, const VertexSet& sinks);

}  // namespace sinkloc
