#pragma once

#include <cstdint>
#include <string_view>

#include "sinkloc/instance.hpp"

namespace sinkloc {

enum class TreeShape { Random, Path, Star, Caterpillar };

std::string_view to_string(TreeShape shape);
// Throws std::invalid_argument for unknown names.
TreeShape parse_tree_shape(std::string_view text);

// Transit times, capacities and weights are drawn from [1, max_*]; the
// defaults give unit trees.
struct GeneratorOptions {
  std::int64_t n = 1;
  std::int64_t k = 1;
  std::uint64_t seed = 0;
  std::int64_t max_tau = 1;
  std::int64_t max_cap = 1;
  std::int64_t max_weight = 1;
  TreeShape shape = TreeShape::Random;
};

// Deterministic for a fixed seed on every platform. Vertex labels are not
// shuffled: path runs 0..n-1, star is centred at 0.
Instance generate_instance(const GeneratorOptions& options);

}  // namespace sinkloc
