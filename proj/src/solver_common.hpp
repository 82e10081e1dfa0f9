#pragma once

#include "sinkloc/feasibility.hpp"

namespace sinkloc::detail {

inline void run_single_vertex(WorkingState& state) {
  if (!state.place_sink(0)) return;
  commit(state, state.alive());
  state.remove(state.alive());
  state.set_outcome(WorkingState::Outcome::Feasible);
}

inline FeasibilityResult collect(const WorkingState& state) {
  FeasibilityResult result;
  result.stats = state.stats();
  if (state.outcome() == WorkingState::Outcome::Feasible) result.configuration = state.configuration();
  return result;
}

}  // namespace sinkloc::detail
