#include "sinkloc/brute_force.hpp"

#include <algorithm>
#include <functional>

#include "sinkloc/tree.hpp"

namespace sinkloc {
namespace {

void check_size(const Instance& inst, std::size_t limit) {
  if (inst.size() > limit) {
    throw TooLarge("brute force limited to " + std::to_string(limit) + " vertices, instance has " +
                   std::to_string(inst.size()));
  }
}

// Calls visit(mask) for every subset of `count` elements of size `choose`.
void for_each_subset(std::size_t count, std::size_t choose, const std::function<void(std::uint32_t)>& visit) {
  if (choose > count) return;
  std::function<void(std::size_t, std::size_t, std::uint32_t)> rec = [&](std::size_t next, std::size_t left,
                                                                           std::uint32_t mask) {
    if (left == 0) {
      visit(mask);
      return;
    }
    for (std::size_t i = next; i + left <= count; ++i) rec(i + 1, left - 1, mask | (1u << i));
  };
  rec(0, choose, 0);
}

}  // namespace

BruteForceValue brute_force_partition(const Instance& inst, const CostFunction& fn, const VertexSet& sinks,
                                      std::size_t limit) {
  check_size(inst, limit);
  const std::size_t n = inst.size();
  BruteForceValue best;
  if (sinks.empty() || sinks.size() > n) return best;
  const auto& edges = inst.edges();

  for_each_subset(edges.size(), sinks.size() - 1, [&](std::uint32_t cut) {
    // Blocks are components of the tree without the cut edges.
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> blocks;
    for (std::size_t start = 0; start < n; ++start) {
      if (comp[start] >= 0) continue;
      const int id = static_cast<int>(blocks.size());
      blocks.emplace_back(n);
      std::vector<VertexId> stack{static_cast<VertexId>(start)};
      comp[start] = id;
      while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        blocks[id].insert(x);
        for (std::size_t e = 0; e < edges.size(); ++e) {
          if (cut & (1u << e)) continue;
          VertexId y = kNoVertex;
          if (edges[e].u == x) y = edges[e].v;
          if (edges[e].v == x) y = edges[e].u;
          if (y == kNoVertex || comp[y] >= 0) continue;
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::vector<VertexId> sink_of(blocks.size(), kNoVertex);
    for (VertexId s : sinks.members()) {
      if (sink_of[comp[s]] != kNoVertex) return;
      sink_of[comp[s]] = s;
    }
    Cost worst = 0;
    for (std::size_t b = 0; b < blocks.size() && worst < best.cost; ++b) {
      worst = std::max(worst, fn.evaluate(inst, blocks[b], sink_of[b]));
    }
    if (worst < best.cost) {
      best.cost = worst;
      best.blocks.clear();
      for (std::size_t b = 0; b < blocks.size(); ++b) best.blocks.push_back({blocks[b], sink_of[b]});
      std::sort(best.blocks.begin(), best.blocks.end(), [](const Block& a, const Block& b) { return a.sink < b.sink; });
    }
  });
  return best;
}

Cost brute_force_F(const Instance& inst, const CostFunction& fn, const VertexSet& sinks, std::size_t limit) {
  return brute_force_partition(inst, fn, sinks, limit).cost;
}

BruteForceOptimum brute_force_optimal(const Instance& inst, const CostFunction& fn, std::size_t k,
                                      std::size_t limit) {
  check_size(inst, limit);
  const std::size_t n = inst.size();
  BruteForceOptimum best;
  for (std::size_t size = 1; size <= std::min(k, n); ++size) {
    for_each_subset(n, size, [&](std::uint32_t mask) {
      std::vector<VertexId> members;
      for (std::size_t v = 0; v < n; ++v) {
        if (mask & (1u << v)) members.push_back(static_cast<VertexId>(v));
      }
      const Cost c = brute_force_F(inst, fn, VertexSet(n, members), limit);
      if (c < best.cost || (c == best.cost && members < best.sinks)) {
        best.cost = c;
        best.sinks = std::move(members);
      }
    });
  }
  return best;
}

bool brute_force_feasible(const Instance& inst, const CostFunction& fn, std::size_t k, Cost limit,
                          std::size_t size_limit) {
  return brute_force_optimal(inst, fn, k, size_limit).cost <= limit;
}

}  // namespace sinkloc
