#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sinkloc/instance.hpp"
#include "sinkloc/vertex_set.hpp"

namespace sinkloc {

class TreeError : public std::logic_error {
 public:
  enum class Kind { NotAdjacent, EmptySet, SinkNotLeaf, NotInHubTree, NotConnected };

  TreeError(Kind kind, const std::string& what) : std::logic_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct HubStructure {
  VertexSet hubs;
  VertexSet hub_tree_vertices;
  VertexSet sink_leaves;
};

struct Compartment {
  VertexSet vertices;
  VertexSet boundary;
};

// All queries take the working tree as the set `alive` of surviving vertices;
// `alive` must induce a subtree of the instance.

// Vertices reachable from `start` inside `within` without entering `blocked`.
VertexSet component_from(const Instance& inst, const VertexSet& within, VertexId start,
                         VertexId blocked = kNoVertex);

// V_{-v}(u): the side of u after deleting v.
VertexSet detached_subtree(const Instance& inst, const VertexSet& alive, VertexId v, VertexId u);

// Vertices on the a-b path, a first.
std::vector<VertexId> tree_path(const Instance& inst, const VertexSet& alive, VertexId a, VertexId b);

bool is_connected(const Instance& inst, const VertexSet& subset);

// Centroid of `sub`, ties broken by smallest id.
VertexId tree_median(const Instance& inst, const VertexSet& sub);

// Minimal subtree of `alive` containing `terminals`.
VertexSet steiner_tree(const Instance& inst, const VertexSet& alive, const VertexSet& terminals);

HubStructure hub_structure(const Instance& inst, const VertexSet& alive, const VertexSet& sinks);

// Path u..v inside `hub_tree` plus every branch of alive \ hub_tree hanging
// from a path vertex.
VertexSet bulk_path(const Instance& inst, const VertexSet& alive, const VertexSet& hub_tree, VertexId u,
                    VertexId v);
VertexSet bulk_path(const Instance& inst, const VertexSet& alive, const HubStructure& hub, VertexId u,
                    VertexId v);

std::vector<Compartment> compartments(const Instance& inst, const VertexSet& sub, const VertexSet& W);

}  // namespace sinkloc
