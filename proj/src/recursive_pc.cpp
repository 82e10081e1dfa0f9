#include <algorithm>

#include "sinkloc/feasibility.hpp"
#include "sinkloc/tree.hpp"

namespace sinkloc {
namespace {

// Compartment: the unresolved part of the side of `start` away from `top`,
// where the edge start -> top is already known to be bad.
struct Task {
  VertexId top;
  VertexId start;
};

// An evaluation of f(side(to, from) + {to}, to) awaiting a batched verdict.
struct Probe {
  VertexId from;
  VertexId to;
  Cost value;
};

class RecursivePass {
 public:
  explicit RecursivePass(WorkingState& state) : st_(state), inst_(state.instance()) {}

  void run();

 private:
  Cost probe_value(VertexId from, VertexId to) {
    VertexSet U = st_.side(to, from);
    U.insert(to);
    return st_.evaluate(U, to, Phase::Pc);
  }

  std::vector<bool> resolve(const std::vector<Probe>& probes) {
    std::vector<Cost> values;
    values.reserve(probes.size());
    for (const Probe& p : probes) values.push_back(p.value);
    return st_.threshold().admits_all(values);
  }

  // Marks the side of y away from w as absorbed, each vertex pointing to w.
  void absorb(VertexId y, VertexId w) {
    std::vector<VertexPair> stack{{y, w}};
    while (!stack.empty()) {
      auto [x, up] = stack.back();
      stack.pop_back();
      st_.set_status(x, Status::PcMarked, up);
      for (const Arc& a : inst_.neighbors(x)) {
        if (a.to != up && st_.alive().contains(a.to)) stack.push_back({a.to, x});
      }
    }
  }

  bool unresolved(VertexId x) const { return st_.alive().contains(x) && st_.status(x) != Status::PcMarked; }

  // Unresolved vertices on start's side away from top.
  VertexSet interior(const Task& t) const {
    VertexSet out(inst_.size());
    std::vector<VertexPair> stack{{t.start, t.top}};
    while (!stack.empty()) {
      auto [x, up] = stack.back();
      stack.pop_back();
      out.insert(x);
      for (const Arc& a : inst_.neighbors(x)) {
        if (a.to != up && unresolved(a.to)) stack.push_back({a.to, x});
      }
    }
    return out;
  }

  // Neighbour of x on the way to the task's top.
  VertexId toward(VertexId x, const Task& t) const { return tree_path(inst_, st_.alive(), x, t.top)[1]; }

  void place_peak(VertexId m, VertexId up) {
    if (!st_.place_sink(m)) return;
    VertexSet region = st_.side(up, m);
    commit(st_, region);
    region.erase(m);
    st_.remove(region);
    st_.push_rc(m, up);
  }

  void top_level(const VertexSet& hull);
  void run_levels(std::vector<Task> tasks);
  void descend_chain(VertexId root);

  WorkingState& st_;
  const Instance& inst_;
  std::vector<VertexId> touched_;
};

void RecursivePass::top_level(const VertexSet& hull) {
  std::vector<Probe> probes;
  for (VertexId h : hull.members()) {
    for (const Arc& a : inst_.neighbors(h)) {
      const VertexId y = a.to;
      if (!st_.alive().contains(y) || hull.contains(y)) continue;
      if (st_.status(y) == Status::PcMarked && st_.target(y) == h) continue;
      probes.push_back({y, h, probe_value(y, h)});
    }
  }
  std::vector<bool> good = resolve(probes);
  if (!st_.allow_new_sinks() && std::find(good.begin(), good.end(), false) != good.end()) {
    st_.set_outcome(WorkingState::Outcome::Infeasible);
    return;
  }
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (good[i]) {
      absorb(probes[i].from, probes[i].to);
      on_absorbed(st_, probes[i].to, probes[i].from);
      touched_.push_back(probes[i].to);
    } else {
      tasks.push_back({probes[i].to, probes[i].from});
    }
  }
  run_levels(std::move(tasks));
}

void RecursivePass::run_levels(std::vector<Task> tasks) {
  std::uint64_t epoch = 1;
  while (!tasks.empty() && st_.running()) {
    st_.stats().max_epochs = std::max(st_.stats().max_epochs, epoch + 1);
    struct Work {
      Task task;
      VertexId median;
      VertexId up;
      bool bad_child = false;
      bool peak = false;
    };
    std::vector<Work> work;
    for (const Task& t : tasks) {
      VertexSet inner = interior(t);
      const VertexId m = tree_median(inst_, inner);
      work.push_back({t, m, m == t.start ? t.top : toward(m, t)});
    }
    std::vector<Task> next;

    // Children of each median.
    std::vector<Probe> probes;
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < work.size(); ++i) {
      const Work& w = work[i];
      for (const Arc& a : inst_.neighbors(w.median)) {
        if (a.to == w.up || !unresolved(a.to)) continue;
        probes.push_back({a.to, w.median, probe_value(a.to, w.median)});
        owner.push_back(i);
      }
    }
    std::vector<bool> good = resolve(probes);
    for (std::size_t j = 0; j < probes.size(); ++j) {
      if (good[j]) {
        absorb(probes[j].from, probes[j].to);
      } else {
        work[owner[j]].bad_child = true;
        next.push_back({probes[j].to, probes[j].from});
      }
    }

    // Up edge of medians whose children are all good.
    probes.clear();
    owner.clear();
    for (std::size_t i = 0; i < work.size(); ++i) {
      Work& w = work[i];
      if (w.bad_child) continue;
      if (w.median == w.task.start) {
        w.peak = true;
        continue;
      }
      probes.push_back({w.median, w.up, probe_value(w.median, w.up)});
      owner.push_back(i);
    }
    good = resolve(probes);
    for (std::size_t j = 0; j < probes.size(); ++j) {
      Work& w = work[owner[j]];
      if (good[j]) {
        absorb(w.median, w.up);
        next.push_back(w.task);
      } else {
        w.peak = true;
      }
    }
    for (const Work& w : work) {
      if (w.peak && st_.running()) place_peak(w.median, w.up);
    }
    if (!st_.running()) return;

    // Branches hanging off the path from a bad median up to its top.
    probes.clear();
    for (const Work& w : work) {
      if (!w.bad_child && !w.peak) continue;
      if (w.median == w.task.start) continue;
      std::vector<VertexId> path = tree_path(inst_, st_.alive(), w.median, w.task.top);
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        const VertexId q = path[i];
        for (const Arc& a : inst_.neighbors(q)) {
          if (a.to == path[i - 1] || a.to == path[i + 1] || !unresolved(a.to)) continue;
          probes.push_back({a.to, q, probe_value(a.to, q)});
        }
      }
    }
    good = resolve(probes);
    for (std::size_t j = 0; j < probes.size(); ++j) {
      if (good[j]) {
        absorb(probes[j].from, probes[j].to);
      } else {
        next.push_back({probes[j].to, probes[j].from});
      }
    }
    tasks = std::move(next);
    ++epoch;
  }
}

void RecursivePass::descend_chain(VertexId root) {
  auto bad_children = [&](VertexId q, VertexId parent) {
    std::vector<VertexId> out;
    for (const Arc& a : inst_.neighbors(q)) {
      if (a.to != parent && unresolved(a.to)) out.push_back(a.to);
    }
    return out;
  };
  std::vector<VertexId> chain{root};
  VertexId parent = kNoVertex;
  for (;;) {
    std::vector<VertexId> kids = bad_children(chain.back(), parent);
    if (kids.size() != 1) break;
    parent = chain.back();
    chain.push_back(kids.front());
  }
  if (chain.size() < 2) return;

  // Edges chain[j] -> chain[j+1] are good for a prefix of j.
  auto edge_good = [&](std::size_t j) {
    return st_.threshold().admits(probe_value(chain[j], chain[j + 1]));
  };
  std::size_t lo = 0;
  std::size_t hi = chain.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (edge_good(mid)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  const std::size_t good_edges = lo;
  if (good_edges > 0) {
    absorb(chain[good_edges - 1], chain[good_edges]);
    touched_.push_back(chain[good_edges]);
  }
  if (good_edges + 1 < chain.size()) place_peak(chain[good_edges], chain[good_edges + 1]);
}

void RecursivePass::run() {
  if (st_.sinks().empty()) {
    // Earlier absorption marks may point in any direction once all sinks are
    // gone; start afresh around the median.
    for (VertexId v : st_.alive().members()) {
      st_.set_status(v, Status::Open, kNoVertex);
      st_.set_witness(v, kNoVertex);
    }
    const VertexId rho = tree_median(inst_, st_.alive());
    top_level(VertexSet(inst_.size(), {rho}));
    if (!st_.running()) return;
    touched_.push_back(rho);
    descend_chain(rho);
  } else {
    top_level(steiner_tree(inst_, st_.alive(), st_.sinks()));
  }
  if (!st_.running()) return;
  std::sort(touched_.begin(), touched_.end());
  touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
  for (VertexId h : touched_) settle(st_, h);
}

}  // namespace

void recursive_pc_pass(WorkingState& state) {
  state.clear_pc();
  RecursivePass(state).run();
}

}  // namespace sinkloc
