#include "sinkloc/vertex_set.hpp"

#include <algorithm>

namespace sinkloc {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members) : in_(universe, 0) {
  for (VertexId v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, const std::vector<VertexId>& members) : in_(universe, 0) {
  for (VertexId v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s;
  s.in_.assign(universe, 1);
  s.count_ = universe;
  return s;
}

void VertexSet::clear() {
  std::fill(in_.begin(), in_.end(), 0);
  count_ = 0;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(count_);
  for (std::size_t v = 0; v < in_.size(); ++v) {
    if (in_[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

bool VertexSet::operator==(const VertexSet& other) const {
  if (count_ != other.count_) return false;
  std::size_t common = std::min(in_.size(), other.in_.size());
  for (std::size_t v = 0; v < common; ++v) {
    if (in_[v] != other.in_[v]) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& set) {
  os << '{';
  bool first = true;
  for (VertexId v : set.members()) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  return os << '}';
}

}  // namespace sinkloc
