#include <algorithm>

#include "sinkloc/feasibility.hpp"
#include "sinkloc/tree.hpp"

namespace sinkloc {

std::vector<bool> Threshold::admits_all(std::span<const Cost> values) {
  std::vector<bool> out;
  out.reserve(values.size());
  for (Cost c : values) out.push_back(admits(c));
  return out;
}

WorkingState::WorkingState(const Instance& inst, Oracle& oracle, Threshold& threshold, SolverHooks* hooks)
    : inst_(&inst),
      oracle_(&oracle),
      threshold_(&threshold),
      hooks_(hooks),
      alive_(VertexSet::full(inst.size())),
      sinks_(inst.size()),
      status_(inst.size(), Status::Open),
      target_(inst.size(), kNoVertex),
      witness_(inst.size(), kNoVertex),
      rejected_(inst.size(), 0),
      config_(inst.size()) {}

void WorkingState::set_status(VertexId v, Status s, VertexId target) {
  status_[v] = s;
  target_[v] = target;
}

bool WorkingState::place_sink(VertexId v) {
  if (!allow_new_sinks_) {
    outcome_ = Outcome::Infeasible;
    return false;
  }
  config_.add_sink(v);
  sinks_.insert(v);
  witness_[v] = v;
  if (config_.sink_count() > inst_->k()) {
    outcome_ = Outcome::Infeasible;
    return false;
  }
  return true;
}

void WorkingState::declare_sink(VertexId v) {
  config_.add_sink(v);
  sinks_.insert(v);
  witness_[v] = v;
}

void WorkingState::remove(const VertexSet& vertices) {
  for (VertexId v : vertices.members()) {
    alive_.erase(v);
    sinks_.erase(v);
  }
}

bool WorkingState::resolved_into(VertexId x, VertexId v) const {
  return alive_.contains(x) && target_[x] == v &&
         (status_[x] == Status::PcMarked || status_[x] == Status::RcMarked);
}

std::vector<VertexId> WorkingState::pending(VertexId v) const {
  std::vector<VertexId> out;
  for (const Arc& a : inst_->neighbors(v)) {
    if (alive_.contains(a.to) && !resolved_into(a.to, v)) out.push_back(a.to);
  }
  return out;
}

bool WorkingState::in_hull(VertexId v) const {
  return alive_.contains(v) && status_[v] != Status::PcMarked && status_[v] != Status::PcQueued;
}

VertexSet WorkingState::hull() const {
  VertexSet out(inst_->size());
  for (VertexId v : alive_.members()) {
    if (in_hull(v)) out.insert(v);
  }
  return out;
}

VertexSet WorkingState::marked_pc() const {
  VertexSet out(inst_->size());
  for (VertexId v : alive_.members()) {
    if (status_[v] != Status::Open) out.insert(v);
  }
  return out;
}

VertexSet WorkingState::marked_rc() const {
  VertexSet out(inst_->size());
  for (VertexId v : alive_.members()) {
    if (status_[v] == Status::RcMarked || status_[v] == Status::RcQueued) out.insert(v);
  }
  return out;
}

VertexSet WorkingState::side(VertexId v, VertexId u) const { return detached_subtree(*inst_, alive_, v, u); }

VertexSet WorkingState::bulk_path(VertexId from, VertexId to) const {
  VertexSet out(inst_->size());
  std::vector<VertexId> path = tree_path(*inst_, alive_, from, to);
  for (VertexId p : path) out.insert(p);
  for (VertexId p : path) {
    for (const Arc& a : inst_->neighbors(p)) {
      const VertexId y = a.to;
      if (out.contains(y) || !alive_.contains(y) || status_[y] != Status::PcMarked || target_[y] != p) continue;
      for (VertexId x : component_from(*inst_, alive_, y, p).members()) out.insert(x);
    }
  }
  return out;
}

Cost WorkingState::evaluate(const VertexSet& U, VertexId v, Phase phase) {
  const OracleStats before = oracle_->stats();
  const Cost value = (*oracle_)(U, v);
  const OracleStats delta = oracle_->stats() - before;
  switch (phase) {
    case Phase::Pc: stats_.pc += delta; break;
    case Phase::Rc: stats_.rc += delta; break;
    case Phase::Degenerate: stats_.degenerate += delta; break;
  }
  return value;
}

void WorkingState::push_pc(VertexId u, VertexId v) {
  set_status(u, Status::PcQueued, v);
  q_pc_.push_back({u, v});
  if (hooks_) hooks_->on_pc_enqueue(*this, u, v);
}

void WorkingState::push_rc(VertexId u, VertexId v) {
  set_status(u, Status::RcQueued, v);
  q_rc_.push_back({u, v});
  if (hooks_) hooks_->on_rc_enqueue(*this, u, v);
}

std::optional<VertexPair> WorkingState::pop_pc() {
  while (!q_pc_.empty()) {
    VertexPair p = q_pc_.front();
    q_pc_.pop_front();
    if (alive_.contains(p.u) && alive_.contains(p.v) && status_[p.u] == Status::PcQueued && target_[p.u] == p.v) {
      return p;
    }
  }
  return std::nullopt;
}

std::optional<VertexPair> WorkingState::pop_rc() {
  while (!q_rc_.empty()) {
    VertexPair p = q_rc_.front();
    q_rc_.pop_front();
    if (alive_.contains(p.u) && alive_.contains(p.v) && status_[p.u] == Status::RcQueued && target_[p.u] == p.v) {
      return p;
    }
  }
  return std::nullopt;
}

void commit(WorkingState& state, const VertexSet& p_new) {
  state.configuration().commit(p_new);
  if (state.hooks()) state.hooks()->on_commit(state, p_new);
}

std::vector<Block> partition_from_witnesses(const WorkingState& state, VertexId root, const VertexSet& sub) {
  const Instance& inst = state.instance();
  VertexSet remaining = sub;
  std::vector<Block> blocks;
  std::vector<VertexId> roots{root};
  while (!roots.empty()) {
    const VertexId x = roots.back();
    roots.pop_back();
    if (!remaining.contains(x)) continue;
    const VertexId s = state.witness(x);
    if (s == kNoVertex || !remaining.contains(s)) {
      throw FeasibilityError(FeasibilityError::Kind::MissingWitness,
                             "vertex " + std::to_string(x) + " has no usable witness sink");
    }
    Block block{state.bulk_path(x, s), s};
    for (VertexId b : block.vertices.members()) {
      if (!remaining.contains(b)) {
        throw FeasibilityError(FeasibilityError::Kind::MissingWitness,
                               "bulk path of " + std::to_string(x) + " leaves the subtree");
      }
      remaining.erase(b);
    }
    for (VertexId b : block.vertices.members()) {
      for (const Arc& a : inst.neighbors(b)) {
        if (remaining.contains(a.to)) roots.push_back(a.to);
      }
    }
    blocks.push_back(std::move(block));
  }
  if (!remaining.empty()) {
    throw FeasibilityError(FeasibilityError::Kind::MissingWitness, "witness peeling left vertices uncovered");
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.sink < b.sink; });
  return blocks;
}

namespace {

// Commits the whole working tree, rooted at v, and stops the run.
void finish_at(WorkingState& state, VertexId v) {
  const VertexSet all = state.alive();
  if (state.witness(v) != kNoVertex) {
    for (const Block& b : partition_from_witnesses(state, v, all)) commit(state, b.vertices);
  } else {
    // Sink-free remainder: every vertex of it can be served by v, so pick the
    // smallest id that also can.
    VertexId chosen = v;
    for (VertexId s : all.members()) {
      if (s >= v) break;
      if (state.threshold().admits(state.evaluate(all, s, Phase::Degenerate))) {
        chosen = s;
        break;
      }
    }
    if (!state.place_sink(chosen)) return;
    commit(state, all);
  }
  state.remove(all);
  state.set_outcome(WorkingState::Outcome::Feasible);
}

}  // namespace

void on_absorbed(WorkingState& state, VertexId v, VertexId x) {
  if (state.is_sink(v) || state.witness(v) == kNoVertex) return;
  // v's bulk paths grew, so earlier reaching tests at v are stale.
  state.set_witness(v, kNoVertex);
  if (state.status(v) == Status::RcQueued && state.target(v) == x) state.set_status(v, Status::Open, kNoVertex);
  for (const Arc& a : state.instance().neighbors(v)) {
    const VertexId c = a.to;
    if (state.alive().contains(c) && state.status(c) == Status::RcMarked && state.target(c) == v) {
      state.push_rc(c, v);
    }
  }
}

void settle(WorkingState& state, VertexId v) {
  if (!state.running() || !state.alive().contains(v)) return;
  std::vector<VertexId> pend = state.pending(v);
  if (pend.empty()) {
    finish_at(state, v);
    return;
  }
  if (pend.size() != 1 || state.status(v) != Status::Open) return;
  if (state.witness(v) != kNoVertex) {
    state.push_rc(v, pend.front());
  } else if (!state.is_sink(v)) {
    state.push_pc(v, pend.front());
  }
}

PcResult pc_check(WorkingState& state, VertexId u, VertexId v) {
  VertexSet region = state.side(v, u);
  VertexSet with_v = region;
  with_v.insert(v);
  if (state.threshold().admits(state.evaluate(with_v, v, Phase::Pc))) {
    state.set_status(u, Status::PcMarked, v);
    on_absorbed(state, v, u);
    settle(state, v);
    return PcResult::Marked;
  }
  if (!state.place_sink(u)) return PcResult::SinkPlaced;
  commit(state, region);
  region.erase(u);
  state.remove(region);
  state.push_rc(u, v);
  return PcResult::SinkPlaced;
}

RcResult rc_check(WorkingState& state, VertexId u, VertexId v, bool use_rejection) {
  if (state.is_sink(v)) {
    state.set_status(u, Status::RcMarked, v);
    settle(state, v);
    return RcResult::Marked;
  }
  const VertexSet region = state.side(v, u);
  for (VertexId s : region.members()) {
    if (!state.is_sink(s) || (use_rejection && state.rejected(s))) continue;
    if (state.threshold().admits(state.evaluate(state.bulk_path(v, s), s, Phase::Rc))) {
      if (state.witness(v) == kNoVertex) state.set_witness(v, s);
      state.set_status(u, Status::RcMarked, v);
      settle(state, v);
      return RcResult::Marked;
    }
    if (use_rejection) state.reject(s);
  }
  for (const Block& b : partition_from_witnesses(state, u, region)) commit(state, b.vertices);
  state.remove(region);
  ++state.stats().rc_removals;
  settle(state, v);
  return RcResult::SubtreeRemoved;
}

}  // namespace sinkloc
