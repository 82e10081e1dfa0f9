#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sinkloc {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

// Edge as read from input, before validation.
struct RawEdge {
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::int64_t tau = 0;
  std::int64_t cap = 0;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  std::uint64_t tau = 0;
  std::uint64_t cap = 1;
};

struct Arc {
  VertexId to = 0;
  std::uint64_t tau = 0;
  std::uint64_t cap = 1;
};

class InstanceError : public std::runtime_error {
 public:
  enum class Kind { NotATree, NegativeValue, ZeroCapacity, ZeroBudget, VertexOutOfRange, Overflow };

  InstanceError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class Instance {
 public:
  // Totals of weights and transit times are kept below this bound so that
  // evacuation arithmetic never overflows.
  static constexpr std::uint64_t kMagnitudeLimit = std::uint64_t{1} << 60;

  static Instance build(std::int64_t n, std::span<const RawEdge> edges,
                        std::span<const std::int64_t> weights, std::int64_t k);

  std::size_t size() const { return weights_.size(); }
  std::size_t k() const { return k_; }
  std::uint64_t weight(VertexId v) const { return weights_[v]; }
  const std::vector<std::uint64_t>& weights() const { return weights_; }
  std::uint64_t total_weight() const { return total_weight_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Arc> neighbors(VertexId v) const {
    return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  // Arc from u to its neighbour v; throws std::out_of_range if not adjacent.
  const Arc& arc(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;

  Instance with_k(std::size_t k) const;

 private:
  std::vector<std::uint64_t> weights_;
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> offsets_;
  std::uint64_t total_weight_ = 0;
  std::size_t k_ = 1;
};

}  // namespace sinkloc
