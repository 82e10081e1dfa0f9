#include "sinkloc/feasibility.hpp"
#include "solver_common.hpp"

namespace sinkloc {
using detail::collect;
using detail::run_single_vertex;

FeasibilityResult bounded_cost_iterative(const Instance& inst, Oracle& oracle, Threshold& threshold,
                                         SolverHooks* hooks) {
  WorkingState state(inst, oracle, threshold, hooks);
  if (inst.size() == 1) {
    run_single_vertex(state);
    return collect(state);
  }
  for (std::size_t v = 0; v < inst.size(); ++v) {
    const auto leaf = static_cast<VertexId>(v);
    if (inst.degree(leaf) == 1) state.push_pc(leaf, inst.neighbors(leaf).front().to);
  }
  while (state.running()) {
    while (state.running()) {
      auto pair = state.pop_pc();
      if (!pair) break;
      pc_check(state, pair->u, pair->v);
    }
    if (!state.running()) break;
    ++state.stats().pc_rounds;
    if (hooks) hooks->on_pc_phase_end(state);
    auto pair = state.pop_rc();
    if (!pair) throw FeasibilityError(FeasibilityError::Kind::Stalled, "both queues empty before termination");
    rc_check(state, pair->u, pair->v);
  }
  return collect(state);
}

FeasibilityResult bounded_cost_iterative(const Instance& inst, Oracle& oracle, Cost limit, SolverHooks* hooks) {
  FixedThreshold threshold(limit);
  return bounded_cost_iterative(inst, oracle, threshold, hooks);
}

}  // namespace sinkloc
