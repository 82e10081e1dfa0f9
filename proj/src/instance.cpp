#include "sinkloc/instance.hpp"

#include <algorithm>
#include <numeric>

namespace sinkloc {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Instance Instance::build(std::int64_t n, std::span<const RawEdge> edges,
                         std::span<const std::int64_t> weights, std::int64_t k) {
  using Kind = InstanceError::Kind;
  if (n < 0 || k < 0) throw InstanceError(Kind::NegativeValue, "negative vertex count or k");
  if (n == 0) throw InstanceError(Kind::NotATree, "empty tree");
  if (k == 0) throw InstanceError(Kind::ZeroBudget, "sink budget k must be at least 1");
  if (static_cast<std::int64_t>(weights.size()) != n) {
    throw InstanceError(Kind::VertexOutOfRange, "weight list length differs from n");
  }
  if (static_cast<std::int64_t>(edges.size()) != n - 1) {
    throw InstanceError(Kind::NotATree, "expected " + std::to_string(n - 1) + " edges, got " +
                                            std::to_string(edges.size()));
  }

  Instance inst;
  inst.k_ = static_cast<std::size_t>(k);
  inst.weights_.reserve(n);
  for (std::int64_t w : weights) {
    if (w < 0) throw InstanceError(Kind::NegativeValue, "negative vertex weight");
    inst.total_weight_ += static_cast<std::uint64_t>(w);
    if (inst.total_weight_ >= kMagnitudeLimit) throw InstanceError(Kind::Overflow, "total weight too large");
    inst.weights_.push_back(static_cast<std::uint64_t>(w));
  }

  DisjointSets sets(n);
  std::uint64_t total_tau = 0;
  std::vector<std::size_t> deg(n + 1, 0);
  for (const RawEdge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw InstanceError(Kind::VertexOutOfRange, "edge endpoint out of range");
    }
    if (e.tau < 0 || e.cap < 0) throw InstanceError(Kind::NegativeValue, "negative transit time or capacity");
    if (e.cap == 0) throw InstanceError(Kind::ZeroCapacity, "edge capacity must be positive");
    if (e.u == e.v || !sets.unite(e.u, e.v)) throw InstanceError(Kind::NotATree, "edges contain a cycle");
    total_tau += static_cast<std::uint64_t>(e.tau);
    if (total_tau >= kMagnitudeLimit) throw InstanceError(Kind::Overflow, "total transit time too large");
    inst.edges_.push_back({static_cast<VertexId>(e.u), static_cast<VertexId>(e.v),
                           static_cast<std::uint64_t>(e.tau), static_cast<std::uint64_t>(e.cap)});
    ++deg[e.u];
    ++deg[e.v];
  }

  inst.offsets_.assign(n + 1, 0);
  for (std::int64_t v = 0; v < n; ++v) inst.offsets_[v + 1] = inst.offsets_[v] + deg[v];
  inst.arcs_.resize(inst.offsets_[n]);
  std::vector<std::size_t> fill(inst.offsets_.begin(), inst.offsets_.end() - 1);
  for (const Edge& e : inst.edges_) {
    inst.arcs_[fill[e.u]++] = {e.v, e.tau, e.cap};
    inst.arcs_[fill[e.v]++] = {e.u, e.tau, e.cap};
  }
  for (std::int64_t v = 0; v < n; ++v) {
    std::sort(inst.arcs_.begin() + inst.offsets_[v], inst.arcs_.begin() + inst.offsets_[v + 1],
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }
  return inst;
}

const Arc& Instance::arc(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v, [](const Arc& a, VertexId x) { return a.to < x; });
  if (it == nb.end() || it->to != v) throw std::out_of_range("vertices are not adjacent");
  return *it;
}

bool Instance::adjacent(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= size() || static_cast<std::size_t>(v) >= size()) {
    return false;
  }
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), Arc{v, 0, 0},
                            [](const Arc& a, const Arc& b) { return a.to < b.to; });
}

Instance Instance::with_k(std::size_t k) const {
  Instance copy = *this;
  copy.k_ = k;
  return copy;
}

}  // namespace sinkloc
