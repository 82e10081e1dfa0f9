#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sinkloc/configuration.hpp"
#include "sinkloc/cost.hpp"
#include "sinkloc/instance.hpp"
#include "sinkloc/vertex_set.hpp"

namespace sinkloc {

class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kBruteForceLimit = 16;

struct BruteForceValue {
  Cost cost = kInfiniteCost;
  // Best partition, blocks ordered by sink.
  std::vector<Block> blocks;
};

// Minimum over edge cuts isolating the sinks of the largest block cost.
BruteForceValue brute_force_partition(const Instance& inst, const CostFunction& fn, const VertexSet& sinks,
                                      std::size_t limit = kBruteForceLimit);
Cost brute_force_F(const Instance& inst, const CostFunction& fn, const VertexSet& sinks,
                   std::size_t limit = kBruteForceLimit);

struct BruteForceOptimum {
  Cost cost = kInfiniteCost;
  std::vector<VertexId> sinks;
};

// Best sink set of size at most k; ties go to the lexicographically smallest
// ascending sink list.
BruteForceOptimum brute_force_optimal(const Instance& inst, const CostFunction& fn, std::size_t k,
                                      std::size_t limit = kBruteForceLimit);

// Whether some placement of at most k sinks reaches cost <= limit.
bool brute_force_feasible(const Instance& inst, const CostFunction& fn, std::size_t k, Cost limit,
                          std::size_t size_limit = kBruteForceLimit);

}  // namespace sinkloc
