#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "sinkloc/instance.hpp"

namespace sinkloc {

// Subset of the vertices 0..n-1 with O(1) membership and a member list.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : in_(universe, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members);
  VertexSet(std::size_t universe, const std::vector<VertexId>& members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return in_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(VertexId v) const {
    return v >= 0 && static_cast<std::size_t>(v) < in_.size() && in_[v] != 0;
  }
  void insert(VertexId v) {
    if (!in_[v]) {
      in_[v] = 1;
      ++count_;
    }
  }
  void erase(VertexId v) {
    if (in_[v]) {
      in_[v] = 0;
      --count_;
    }
  }
  void clear();
  // Members in ascending order.
  std::vector<VertexId> members() const;

  bool operator==(const VertexSet& other) const;

 private:
  std::vector<std::uint8_t> in_;
  std::size_t count_ = 0;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& set);

}  // namespace sinkloc
