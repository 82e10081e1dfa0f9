#include "sinkloc/generator.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace sinkloc {

std::string_view to_string(TreeShape shape) {
  switch (shape) {
    case TreeShape::Random: return "random";
    case TreeShape::Path: return "path";
    case TreeShape::Star: return "star";
    case TreeShape::Caterpillar: return "caterpillar";
  }
  return "random";
}

TreeShape parse_tree_shape(std::string_view text) {
  for (TreeShape s : {TreeShape::Random, TreeShape::Path, TreeShape::Star, TreeShape::Caterpillar}) {
    if (text == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown shape '" + std::string(text) + "'");
}

namespace {

// Modulo draw; std distributions differ between standard libraries.
std::int64_t draw(std::mt19937_64& rng, std::int64_t hi) {
  return 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi));
}

}  // namespace

Instance generate_instance(const GeneratorOptions& o) {
  if (o.n < 1) throw std::invalid_argument("n must be positive");
  if (o.max_tau < 1 || o.max_cap < 1 || o.max_weight < 1) throw std::invalid_argument("maxima must be positive");
  std::mt19937_64 rng(o.seed);
  std::vector<std::int64_t> parent(static_cast<std::size_t>(o.n), -1);
  const std::int64_t spine = (o.n + 1) / 2;
  for (std::int64_t v = 1; v < o.n; ++v) {
    switch (o.shape) {
      case TreeShape::Random: parent[v] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(v)); break;
      case TreeShape::Path: parent[v] = v - 1; break;
      case TreeShape::Star: parent[v] = 0; break;
      case TreeShape::Caterpillar:
        parent[v] = v < spine ? v - 1 : static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(spine));
        break;
    }
  }
  std::vector<RawEdge> edges;
  for (std::int64_t v = 1; v < o.n; ++v) edges.push_back({parent[v], v, draw(rng, o.max_tau), draw(rng, o.max_cap)});
  std::vector<std::int64_t> weights;
  for (std::int64_t v = 0; v < o.n; ++v) weights.push_back(draw(rng, o.max_weight));
  return Instance::build(o.n, edges, weights, o.k);
}

}  // namespace sinkloc
