#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sinkloc/configuration.hpp"
#include "sinkloc/cost.hpp"
#include "sinkloc/instance.hpp"
#include "sinkloc/vertex_set.hpp"

namespace sinkloc {

// Decides comparisons f(U, v) <= T. Parametric search substitutes an
// implementation that resolves comparisons against an unknown T.
class Threshold {
 public:
  virtual ~Threshold() = default;
  virtual bool admits(Cost value) = 0;
  // Resolves a batch of independent comparisons.
  virtual std::vector<bool> admits_all(std::span<const Cost> values);
};

class FixedThreshold final : public Threshold {
 public:
  explicit FixedThreshold(Cost limit) : limit_(limit) {}
  bool admits(Cost value) override { return value <= limit_; }
  Cost limit() const { return limit_; }

 private:
  Cost limit_;
};

class FeasibilityError : public std::logic_error {
 public:
  enum class Kind { MissingWitness, Stalled };

  FeasibilityError(Kind kind, const std::string& what) : std::logic_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Outbound state of a vertex towards `target`.
//   Open      not yet resolved
//   PcQueued  its side away from target is sink-free and waiting for a peaking check
//   PcMarked  absorbed: its side can be served through target
//   RcQueued  its side away from target is recursively self-sufficient
//   RcMarked  target can be served by a sink on its side
enum class Status : std::uint8_t { Open, PcQueued, PcMarked, RcQueued, RcMarked };

struct VertexPair {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
};

struct SolverStats {
  OracleStats pc;
  OracleStats rc;
  OracleStats degenerate;
  std::uint64_t pc_rounds = 0;
  std::uint64_t rc_removals = 0;
  std::uint64_t max_epochs = 0;

  OracleStats total() const {
    OracleStats t = pc;
    t += rc;
    t += degenerate;
    return t;
  }
};

class WorkingState;

// Callbacks for invariant checks in tests. Default implementations do nothing.
class SolverHooks {
 public:
  virtual ~SolverHooks() = default;
  virtual void on_pc_enqueue(const WorkingState&, VertexId /*u*/, VertexId /*v*/) {}
  virtual void on_rc_enqueue(const WorkingState&, VertexId /*u*/, VertexId /*v*/) {}
  virtual void on_pc_phase_end(const WorkingState&) {}
  virtual void on_commit(const WorkingState&, const VertexSet& /*block*/) {}
};

enum class Phase { Pc, Rc, Degenerate };

class WorkingState {
 public:
  enum class Outcome { Running, Feasible, Infeasible };

  WorkingState(const Instance& inst, Oracle& oracle, Threshold& threshold, SolverHooks* hooks = nullptr);

  const Instance& instance() const { return *inst_; }
  Oracle& oracle() { return *oracle_; }
  Threshold& threshold() { return *threshold_; }
  SolverHooks* hooks() const { return hooks_; }

  const VertexSet& alive() const { return alive_; }
  // Working sinks S = S_out restricted to the working tree.
  const VertexSet& sinks() const { return sinks_; }
  bool is_sink(VertexId v) const { return sinks_.contains(v); }
  Status status(VertexId v) const { return status_[v]; }
  VertexId target(VertexId v) const { return target_[v]; }
  VertexId witness(VertexId v) const { return witness_[v]; }
  bool rejected(VertexId s) const { return rejected_[s] != 0; }
  const Configuration& configuration() const { return config_; }
  Configuration& configuration() { return config_; }
  Outcome outcome() const { return outcome_; }
  bool running() const { return outcome_ == Outcome::Running; }
  const SolverStats& stats() const { return stats_; }
  SolverStats& stats() { return stats_; }

  void set_status(VertexId v, Status s, VertexId target);
  void set_witness(VertexId v, VertexId s) { witness_[v] = s; }
  void reject(VertexId s) { rejected_[s] = 1; }
  void set_outcome(Outcome o) { outcome_ = o; }
  // When cleared, any attempt to open a sink makes the run infeasible.
  void set_allow_new_sinks(bool allow) { allow_new_sinks_ = allow; }
  bool allow_new_sinks() const { return allow_new_sinks_; }

  // Adds v to S_out; marks the run infeasible and returns false when the
  // budget is exceeded.
  bool place_sink(VertexId v);
  // Declares an existing sink without budget checks (fixed-sinks mode).
  void declare_sink(VertexId v);
  void remove(const VertexSet& vertices);

  // x is resolved into its neighbour v.
  bool resolved_into(VertexId x, VertexId v) const;
  // Alive neighbours of v not resolved into v, ascending.
  std::vector<VertexId> pending(VertexId v) const;
  // Alive vertices outside Marked_PC.
  bool in_hull(VertexId v) const;
  VertexSet hull() const;
  VertexSet marked_pc() const;
  VertexSet marked_rc() const;

  // V_{-v}(u) in the working tree.
  VertexSet side(VertexId v, VertexId u) const;
  // Path from..to plus the absorbed branches hanging from path vertices.
  VertexSet bulk_path(VertexId from, VertexId to) const;

  // Counted oracle call attributed to `phase`.
  Cost evaluate(const VertexSet& U, VertexId v, Phase phase);

  void push_pc(VertexId u, VertexId v);
  void push_rc(VertexId u, VertexId v);
  std::optional<VertexPair> pop_pc();
  std::optional<VertexPair> pop_rc();
  bool pc_empty() const { return q_pc_.empty(); }
  bool rc_empty() const { return q_rc_.empty(); }
  void clear_pc() { q_pc_.clear(); }

 private:
  const Instance* inst_;
  Oracle* oracle_;
  Threshold* threshold_;
  SolverHooks* hooks_;
  VertexSet alive_;
  VertexSet sinks_;
  std::vector<Status> status_;
  std::vector<VertexId> target_;
  std::vector<VertexId> witness_;
  std::vector<std::uint8_t> rejected_;
  std::deque<VertexPair> q_pc_;
  std::deque<VertexPair> q_rc_;
  Configuration config_;
  Outcome outcome_ = Outcome::Running;
  bool allow_new_sinks_ = true;
  SolverStats stats_;
};

struct FeasibilityResult {
  std::optional<Configuration> configuration;
  SolverStats stats;

  bool feasible() const { return configuration.has_value(); }
};

enum class PcResult { Marked, SinkPlaced };
enum class RcResult { Marked, SubtreeRemoved };

// Commits p_new to the configuration and reports it to the hooks.
void commit(WorkingState& state, const VertexSet& p_new);

// Peaking check of the queued pair (u, v).
PcResult pc_check(WorkingState& state, VertexId u, VertexId v);

// Reaching check of the queued pair (u, v): can v be served by a sink on u's
// side? When `use_rejection` is set, rejected sinks are skipped and failing
// sinks become rejected.
RcResult rc_check(WorkingState& state, VertexId u, VertexId v, bool use_rejection = false);

// Blocks covering `sub`, peeled from `root` along witnesses.
std::vector<Block> partition_from_witnesses(const WorkingState& state, VertexId root, const VertexSet& sub);

// Re-examines v after one of its neighbours was resolved or removed.
void settle(WorkingState& state, VertexId v);
// Called when neighbour x has just been absorbed into v.
void on_absorbed(WorkingState& state, VertexId v, VertexId x);

FeasibilityResult bounded_cost_iterative(const Instance& inst, Oracle& oracle, Threshold& threshold,
                                         SolverHooks* hooks = nullptr);
FeasibilityResult bounded_cost_iterative(const Instance& inst, Oracle& oracle, Cost limit,
                                         SolverHooks* hooks = nullptr);

// One divide-and-conquer peaking pass over the working tree.
void recursive_pc_pass(WorkingState& state);

struct RcSearchResult {
  // Edge (lower, upper) at which the reaching criterion fires; kNoVertex when
  // the whole path can be served from below.
  VertexId lower = kNoVertex;
  VertexId upper = kNoVertex;
  // Sink serving the vertices below the cut or the whole path.
  VertexId witness = kNoVertex;

  bool all_self_sufficient() const { return lower == kNoVertex; }
};

// Given path[0..m-1] climbing away from the recursively self-sufficient side
// hanging below path[0] (child `below`), finds the highest path vertex that
// can be served by a sink on that side.
RcSearchResult rc_binary_search(WorkingState& state, VertexId below, const std::vector<VertexId>& path);

// Processes the queued reaching pair (u, v), climbing through a whole path of
// degree-two hull vertices with rc_binary_search. Returns true when a subtree
// was removed.
bool rc_climb(WorkingState& state, VertexId u, VertexId v);

FeasibilityResult bounded_cost_fast(const Instance& inst, Oracle& oracle, Threshold& threshold,
                                    SolverHooks* hooks = nullptr);
FeasibilityResult bounded_cost_fast(const Instance& inst, Oracle& oracle, Cost limit, SolverHooks* hooks = nullptr);

// Reaching-only solver for a prescribed sink set; every sink must be a leaf
// (or the only vertex). Infeasible whenever a further sink would be needed.
FeasibilityResult bounded_cost_fixed_sinks(const Instance& inst, Oracle& oracle, Threshold& threshold,
                                           const VertexSet& sinks, SolverHooks* hooks = nullptr);

}  // namespace sinkloc
