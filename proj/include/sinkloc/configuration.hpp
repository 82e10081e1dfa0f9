#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sinkloc/cost.hpp"
#include "sinkloc/instance.hpp"
#include "sinkloc/vertex_set.hpp"

namespace sinkloc {

struct Block {
  VertexSet vertices;
  VertexId sink = kNoVertex;
};

class CommitError : public std::logic_error {
 public:
  enum class Kind { NoSinkInBlock, TwoSinksInBlock, Overlap };

  CommitError(Kind kind, const std::string& what) : std::logic_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Sink set S_out with a partition into blocks, one sink per block.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t n) : sink_set_(n), covered_(n), block_of_(n, -1) {}

  std::size_t universe() const { return sink_set_.universe(); }
  void add_sink(VertexId s) { sink_set_.insert(s); }
  bool is_sink(VertexId s) const { return sink_set_.contains(s); }
  std::size_t sink_count() const { return sink_set_.size(); }
  // Ascending.
  std::vector<VertexId> sinks() const { return sink_set_.members(); }
  const VertexSet& sink_set() const { return sink_set_; }

  // Merges p_new into the block of its unique sink, or opens a new block.
  void commit(const VertexSet& p_new);

  // Blocks ordered by sink id.
  std::vector<Block> blocks() const;
  std::size_t block_count() const { return blocks_.size(); }
  bool covers_all() const { return covered_.size() == universe(); }
  const VertexSet& covered() const { return covered_; }

  // Largest f(block, sink); kInfiniteCost when a block is disconnected.
  Cost cost(const Instance& inst, const CostFunction& fn) const;

  // Checks disjoint, connected, one sink per block, full cover and the
  // budget. Returns an empty string when valid, else the first problem.
  std::string validate(const Instance& inst) const;

 private:
  VertexSet sink_set_;
  VertexSet covered_;
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
};

}  // namespace sinkloc
