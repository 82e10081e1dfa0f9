#include "sinkloc/configuration.hpp"

#include <algorithm>

#include "sinkloc/tree.hpp"

namespace sinkloc {

void Configuration::commit(const VertexSet& p_new) {
  VertexId sink = kNoVertex;
  for (VertexId s : sink_set_.members()) {
    if (!p_new.contains(s)) continue;
    if (sink != kNoVertex) {
      throw CommitError(CommitError::Kind::TwoSinksInBlock,
                        "block holds sinks " + std::to_string(sink) + " and " + std::to_string(s));
    }
    sink = s;
  }
  if (sink == kNoVertex) throw CommitError(CommitError::Kind::NoSinkInBlock, "block holds no sink");

  int index = block_of_[sink];
  if (index < 0) {
    index = static_cast<int>(blocks_.size());
    blocks_.push_back({VertexSet(universe()), sink});
    block_of_[sink] = index;
  }
  Block& block = blocks_[index];
  for (VertexId v : p_new.members()) {
    if (covered_.contains(v) && !block.vertices.contains(v)) {
      throw CommitError(CommitError::Kind::Overlap, "vertex " + std::to_string(v) + " already in another block");
    }
    block.vertices.insert(v);
    covered_.insert(v);
  }
}

std::vector<Block> Configuration::blocks() const {
  std::vector<Block> out = blocks_;
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.sink < b.sink; });
  return out;
}

Cost Configuration::cost(const Instance& inst, const CostFunction& fn) const {
  Cost worst = 0;
  for (const Block& b : blocks_) worst = std::max(worst, fn.evaluate(inst, b.vertices, b.sink));
  return worst;
}

std::string Configuration::validate(const Instance& inst) const {
  if (sink_set_.size() > inst.k()) return "more sinks than the budget allows";
  VertexSet seen(inst.size());
  for (const Block& b : blocks_) {
    if (!b.vertices.contains(b.sink)) return "block does not contain its sink " + std::to_string(b.sink);
    if (!is_connected(inst, b.vertices)) return "block of sink " + std::to_string(b.sink) + " is disconnected";
    for (VertexId v : b.vertices.members()) {
      if (seen.contains(v)) return "vertex " + std::to_string(v) + " lies in two blocks";
      seen.insert(v);
      if (v != b.sink && sink_set_.contains(v)) return "block of sink " + std::to_string(b.sink) + " holds another sink";
    }
  }
  if (seen.size() != inst.size()) return "blocks do not cover every vertex";
  for (VertexId s : sink_set_.members()) {
    if (block_of_[s] < 0) return "sink " + std::to_string(s) + " has no block";
  }
  return {};
}

}  // namespace sinkloc
