#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sinkloc/cost.hpp"
#include "sinkloc/instance.hpp"
#include "sinkloc/vertex_set.hpp"

namespace sinkloc::testing {

inline Instance make_instance(std::int64_t n, const std::vector<RawEdge>& edges,
                              const std::vector<std::int64_t>& weights, std::int64_t k = 1) {
  return Instance::build(n, edges, weights, k);
}

inline Instance path(std::int64_t n, std::int64_t k = 1) {
  std::vector<RawEdge> edges;
  for (std::int64_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1, 1});
  return make_instance(n, edges, std::vector<std::int64_t>(n, 1), k);
}

inline Instance star3(std::int64_t k = 1) {
  return make_instance(4, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 1, 1}}, {0, 2, 2, 2}, k);
}

inline VertexSet set_of(const Instance& inst, std::initializer_list<VertexId> members) {
  return VertexSet(inst.size(), members);
}

inline VertexSet all_of(const Instance& inst) { return VertexSet::full(inst.size()); }

struct RandomTreeOptions {
  std::int64_t max_tau = 3;
  std::int64_t max_cap = 3;
  std::int64_t max_weight = 4;
};

// Random labelled tree: vertex i > 0 attaches to a uniform earlier vertex,
// then labels are shuffled.
inline Instance random_tree(std::int64_t n, std::mt19937_64& rng, std::int64_t k = 1,
                            RandomTreeOptions opt = {}) {
  std::vector<std::int64_t> label(n);
  for (std::int64_t i = 0; i < n; ++i) label[i] = i;
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<RawEdge> edges;
  for (std::int64_t i = 1; i < n; ++i) {
    std::int64_t parent = std::uniform_int_distribution<std::int64_t>(0, i - 1)(rng);
    edges.push_back({label[i], label[parent], std::uniform_int_distribution<std::int64_t>(0, opt.max_tau)(rng),
                     std::uniform_int_distribution<std::int64_t>(1, opt.max_cap)(rng)});
  }
  std::vector<std::int64_t> weights(n);
  for (auto& w : weights) w = std::uniform_int_distribution<std::int64_t>(0, opt.max_weight)(rng);
  return make_instance(n, edges, weights, k);
}

// Step-by-step evacuation simulation. Deepest vertices move first in each
// step so that zero-time edges pass people on within the step.
inline Cost naive_evacuation(const Instance& inst, const VertexSet& U, VertexId sink) {
  if (!U.contains(sink)) return kInfiniteCost;
  const std::size_t n = inst.size();
  std::vector<VertexId> order{sink};
  std::vector<VertexId> parent(n, kNoVertex);
  parent[sink] = sink;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Arc& a : inst.neighbors(order[i])) {
      if (U.contains(a.to) && parent[a.to] == kNoVertex) {
        parent[a.to] = order[i];
        order.push_back(a.to);
      }
    }
  }
  if (order.size() != U.size()) return kInfiniteCost;

  std::uint64_t horizon = 1;
  std::uint64_t remaining = 0;
  for (VertexId x : order) {
    if (x != sink) remaining += inst.weight(x);
    horizon += inst.weight(x);
    if (x != sink) horizon += inst.arc(x, parent[x]).tau;
  }
  std::vector<std::uint64_t> pool(n, 0);
  for (VertexId x : order) pool[x] = x == sink ? 0 : inst.weight(x);
  // pending[t][x]: people reaching x at step t.
  std::vector<std::vector<std::uint64_t>> pending(horizon + 1, std::vector<std::uint64_t>(n, 0));
  Cost last = 0;
  for (std::uint64_t t = 0; remaining > 0; ++t) {
    if (t > horizon) return kInfiniteCost;
    for (std::size_t i = order.size(); i-- > 1;) {
      const VertexId x = order[i];
      pool[x] += pending[t][x];
      pending[t][x] = 0;
      const Arc& up = inst.arc(x, parent[x]);
      const std::uint64_t moved = std::min(pool[x], up.cap);
      if (moved == 0) continue;
      pool[x] -= moved;
      const std::uint64_t arrive = t + up.tau;
      if (parent[x] == sink) {
        remaining -= moved;
        last = std::max<Cost>(last, arrive);
      } else {
        if (arrive >= pending.size()) pending.resize(arrive + 1, std::vector<std::uint64_t>(n, 0));
        pending[arrive][parent[x]] += moved;
      }
    }
  }
  return last;
}

}  // namespace sinkloc::testing
