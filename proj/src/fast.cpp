#include <algorithm>
#include <map>
#include <stdexcept>

#include "sinkloc/feasibility.hpp"
#include "solver_common.hpp"

namespace sinkloc {
namespace {

// First sink of `candidates` able to serve x, or kNoVertex.
VertexId serving_sink(WorkingState& state, VertexId x, const std::vector<VertexId>& candidates, bool reject) {
  for (VertexId s : candidates) {
    if (state.threshold().admits(state.evaluate(state.bulk_path(x, s), s, Phase::Rc))) return s;
    if (reject) state.reject(s);
  }
  return kNoVertex;
}

// Hull vertex with exactly two unresolved neighbours, one of them `from`,
// and nothing recorded yet.
bool plain_path_vertex(const WorkingState& state, VertexId x, VertexId from, VertexId& next) {
  if (state.is_sink(x) || state.status(x) != Status::Open || state.witness(x) != kNoVertex) return false;
  std::vector<VertexId> pend = state.pending(x);
  if (pend.size() != 2) return false;
  if (pend[0] == from) {
    next = pend[1];
  } else if (pend[1] == from) {
    next = pend[0];
  } else {
    return false;
  }
  return true;
}

}  // namespace

RcSearchResult rc_binary_search(WorkingState& state, VertexId below, const std::vector<VertexId>& path) {
  std::vector<VertexId> candidates;
  for (VertexId s : state.side(path.front(), below).members()) {
    if (state.is_sink(s) && !state.rejected(s)) candidates.push_back(s);
  }
  RcSearchResult result;
  // Sinks failing at the top can serve nothing above the path.
  if (VertexId s = serving_sink(state, path.back(), candidates, true); s != kNoVertex) {
    result.witness = s;
    return result;
  }
  // Largest index in [-1, m-2] whose vertex some sink can serve.
  std::map<long, VertexId> found;
  long lo = -1;
  long hi = static_cast<long>(path.size()) - 2;
  while (lo < hi) {
    const long mid = (lo + hi + 1) / 2;
    if (VertexId s = serving_sink(state, path[mid], candidates, false); s != kNoVertex) {
      found[mid] = s;
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  result.lower = lo < 0 ? below : path[lo];
  result.upper = path[lo + 1];
  result.witness = lo < 0 ? kNoVertex : found[lo];
  return result;
}

bool rc_climb(WorkingState& state, VertexId u, VertexId v) {
  std::vector<VertexId> path;
  VertexId from = u;
  VertexId cur = v;
  VertexId next = kNoVertex;
  while (plain_path_vertex(state, cur, from, next)) {
    path.push_back(cur);
    from = cur;
    cur = next;
  }
  if (path.size() < 2) {
    const std::uint64_t before = state.stats().rc_removals;
    rc_check(state, u, v, true);
    return state.stats().rc_removals != before;
  }

  const VertexId top_parent = cur;
  RcSearchResult r = rc_binary_search(state, u, path);
  auto mark_up_to = [&](std::size_t count, VertexId witness) {
    state.set_status(u, Status::RcMarked, path.front());
    for (std::size_t i = 0; i < count; ++i) {
      state.set_witness(path[i], witness);
      if (i + 1 < path.size()) state.set_status(path[i], Status::RcMarked, path[i + 1]);
    }
  };
  if (r.all_self_sufficient()) {
    mark_up_to(path.size(), r.witness);
    state.push_rc(path.back(), top_parent);
    return false;
  }
  if (r.lower != u) {
    const auto idx = static_cast<std::size_t>(std::find(path.begin(), path.end(), r.lower) - path.begin());
    mark_up_to(idx + 1, r.witness);
  }
  const VertexSet region = state.side(r.upper, r.lower);
  for (const Block& b : partition_from_witnesses(state, r.lower, region)) commit(state, b.vertices);
  state.remove(region);
  ++state.stats().rc_removals;
  settle(state, r.upper);
  return true;
}

namespace {

void drive(WorkingState& state) {
  while (state.running()) {
    recursive_pc_pass(state);
    ++state.stats().pc_rounds;
    if (!state.running()) break;
    if (!state.pc_empty()) continue;
    if (state.hooks()) state.hooks()->on_pc_phase_end(state);
    for (;;) {
      auto pair = state.pop_rc();
      if (!pair) {
        if (state.pc_empty()) {
          throw FeasibilityError(FeasibilityError::Kind::Stalled, "both queues empty before termination");
        }
        break;
      }
      const bool removed = rc_climb(state, pair->u, pair->v);
      if (removed || !state.running() || !state.pc_empty()) break;
    }
  }
}

}  // namespace

FeasibilityResult bounded_cost_fast(const Instance& inst, Oracle& oracle, Threshold& threshold, SolverHooks* hooks) {
  WorkingState state(inst, oracle, threshold, hooks);
  if (inst.size() == 1) {
    detail::run_single_vertex(state);
  } else {
    drive(state);
  }
  return detail::collect(state);
}

FeasibilityResult bounded_cost_fixed_sinks(const Instance& inst, Oracle& oracle, Threshold& threshold,
                                           const VertexSet& sinks, SolverHooks* hooks) {
  WorkingState state(inst, oracle, threshold, hooks);
  state.set_allow_new_sinks(false);
  for (VertexId s : sinks.members()) state.declare_sink(s);
  if (inst.size() == 1) {
    commit(state, state.alive());
    state.set_outcome(WorkingState::Outcome::Feasible);
    return detail::collect(state);
  }
  for (VertexId s : sinks.members()) {
    if (inst.degree(s) != 1) throw std::invalid_argument("fixed sink " + std::to_string(s) + " is not a leaf");
    state.push_rc(s, inst.neighbors(s).front().to);
  }
  drive(state);
  return detail::collect(state);
}

FeasibilityResult bounded_cost_fast(const Instance& inst, Oracle& oracle, Cost limit, SolverHooks* hooks) {
  FixedThreshold threshold(limit);
  return bounded_cost_fast(inst, oracle, threshold, hooks);
}

}  // namespace sinkloc
