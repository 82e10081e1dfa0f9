#include "sinkloc/tree.hpp"

#include <algorithm>
#include <limits>

namespace sinkloc {
namespace {

void require_member(const VertexSet& set, VertexId v, TreeError::Kind kind, const char* what) {
  if (!set.contains(v)) throw TreeError(kind, std::string(what) + " (vertex " + std::to_string(v) + ")");
}

std::size_t degree_within(const Instance& inst, const VertexSet& set, VertexId v) {
  std::size_t d = 0;
  for (const Arc& a : inst.neighbors(v)) d += set.contains(a.to) ? 1 : 0;
  return d;
}

}  // namespace

VertexSet component_from(const Instance& inst, const VertexSet& within, VertexId start, VertexId blocked) {
  VertexSet out(inst.size());
  if (!within.contains(start) || start == blocked) return out;
  std::vector<VertexId> stack{start};
  out.insert(start);
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (const Arc& a : inst.neighbors(x)) {
      if (a.to == blocked || out.contains(a.to) || !within.contains(a.to)) continue;
      out.insert(a.to);
      stack.push_back(a.to);
    }
  }
  return out;
}

VertexSet detached_subtree(const Instance& inst, const VertexSet& alive, VertexId v, VertexId u) {
  if (!alive.contains(u) || !alive.contains(v) || !inst.adjacent(u, v)) {
    throw TreeError(TreeError::Kind::NotAdjacent,
                    "vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
  }
  return component_from(inst, alive, u, v);
}

std::vector<VertexId> tree_path(const Instance& inst, const VertexSet& alive, VertexId a, VertexId b) {
  require_member(alive, a, TreeError::Kind::NotConnected, "path endpoint not in tree");
  require_member(alive, b, TreeError::Kind::NotConnected, "path endpoint not in tree");
  std::vector<VertexId> parent(inst.size(), kNoVertex);
  std::vector<VertexId> stack{b};
  parent[b] = b;
  while (!stack.empty() && parent[a] == kNoVertex) {
    VertexId x = stack.back();
    stack.pop_back();
    for (const Arc& arc : inst.neighbors(x)) {
      if (parent[arc.to] != kNoVertex || !alive.contains(arc.to)) continue;
      parent[arc.to] = x;
      stack.push_back(arc.to);
    }
  }
  if (parent[a] == kNoVertex) throw TreeError(TreeError::Kind::NotConnected, "path endpoints are disconnected");
  std::vector<VertexId> path{a};
  while (path.back() != b) path.push_back(parent[path.back()]);
  return path;
}

bool is_connected(const Instance& inst, const VertexSet& subset) {
  if (subset.empty()) return false;
  VertexId start = kNoVertex;
  for (std::size_t v = 0; v < inst.size(); ++v) {
    if (subset.contains(static_cast<VertexId>(v))) {
      start = static_cast<VertexId>(v);
      break;
    }
  }
  return component_from(inst, subset, start).size() == subset.size();
}

VertexId tree_median(const Instance& inst, const VertexSet& sub) {
  if (sub.empty()) throw TreeError(TreeError::Kind::EmptySet, "median of an empty set");
  std::vector<VertexId> members = sub.members();
  VertexId root = members.front();
  std::vector<VertexId> order;
  std::vector<VertexId> parent(inst.size(), kNoVertex);
  order.reserve(members.size());
  order.push_back(root);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Arc& a : inst.neighbors(order[i])) {
      if (parent[a.to] != kNoVertex || !sub.contains(a.to)) continue;
      parent[a.to] = order[i];
      order.push_back(a.to);
    }
  }
  if (order.size() != sub.size()) throw TreeError(TreeError::Kind::NotConnected, "median of a disconnected set");

  const std::size_t total = order.size();
  std::vector<std::size_t> size(inst.size(), 1);
  std::vector<std::size_t> largest(inst.size(), 0);
  for (std::size_t i = total; i-- > 1;) {
    VertexId x = order[i];
    size[parent[x]] += size[x];
    largest[parent[x]] = std::max(largest[parent[x]], size[x]);
  }
  VertexId best = kNoVertex;
  std::size_t best_score = std::numeric_limits<std::size_t>::max();
  for (VertexId v : members) {
    std::size_t score = std::max(largest[v], total - size[v]);
    if (score < best_score) {
      best_score = score;
      best = v;
    }
  }
  return best;
}

VertexSet steiner_tree(const Instance& inst, const VertexSet& alive, const VertexSet& terminals) {
  if (terminals.empty()) return VertexSet(inst.size());
  VertexSet tree = alive;
  std::vector<std::size_t> deg(inst.size(), 0);
  std::vector<VertexId> leaves;
  for (VertexId v : alive.members()) {
    deg[v] = degree_within(inst, alive, v);
    if (deg[v] <= 1 && !terminals.contains(v)) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    VertexId x = leaves.back();
    leaves.pop_back();
    if (!tree.contains(x)) continue;
    tree.erase(x);
    for (const Arc& a : inst.neighbors(x)) {
      if (!tree.contains(a.to)) continue;
      if (--deg[a.to] <= 1 && !terminals.contains(a.to)) leaves.push_back(a.to);
    }
  }
  return tree;
}

HubStructure hub_structure(const Instance& inst, const VertexSet& alive, const VertexSet& sinks) {
  if (sinks.empty()) throw TreeError(TreeError::Kind::EmptySet, "hub structure needs at least one sink");
  for (VertexId s : sinks.members()) {
    require_member(alive, s, TreeError::Kind::SinkNotLeaf, "sink not in working tree");
    if (degree_within(inst, alive, s) > 1) {
      throw TreeError(TreeError::Kind::SinkNotLeaf, "sink " + std::to_string(s) + " is not a leaf");
    }
  }
  HubStructure hub{VertexSet(inst.size()), steiner_tree(inst, alive, sinks), sinks};
  for (VertexId v : hub.hub_tree_vertices.members()) {
    if (degree_within(inst, hub.hub_tree_vertices, v) >= 3) hub.hubs.insert(v);
  }
  return hub;
}

VertexSet bulk_path(const Instance& inst, const VertexSet& alive, const VertexSet& hub_tree, VertexId u,
                    VertexId v) {
  require_member(hub_tree, u, TreeError::Kind::NotInHubTree, "bulk path endpoint outside hub tree");
  require_member(hub_tree, v, TreeError::Kind::NotInHubTree, "bulk path endpoint outside hub tree");
  VertexSet out(inst.size());
  for (VertexId p : tree_path(inst, hub_tree, u, v)) {
    out.insert(p);
    for (const Arc& a : inst.neighbors(p)) {
      if (!alive.contains(a.to) || hub_tree.contains(a.to) || out.contains(a.to)) continue;
      for (VertexId x : component_from(inst, alive, a.to, p).members()) out.insert(x);
    }
  }
  return out;
}

VertexSet bulk_path(const Instance& inst, const VertexSet& alive, const HubStructure& hub, VertexId u,
                    VertexId v) {
  return bulk_path(inst, alive, hub.hub_tree_vertices, u, v);
}

std::vector<Compartment> compartments(const Instance& inst, const VertexSet& sub, const VertexSet& W) {
  const std::size_t n = inst.size();
  std::vector<VertexSet> groups;
  VertexSet seen(n);
  for (VertexId v : sub.members()) {
    if (W.contains(v) || seen.contains(v)) continue;
    VertexSet group(n);
    std::vector<VertexId> stack{v};
    seen.insert(v);
    group.insert(v);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const Arc& a : inst.neighbors(x)) {
        if (!sub.contains(a.to) || group.contains(a.to)) continue;
        group.insert(a.to);
        if (!W.contains(a.to)) {
          seen.insert(a.to);
          stack.push_back(a.to);
        }
      }
    }
    groups.push_back(std::move(group));
  }
  for (VertexId w : sub.members()) {
    if (!W.contains(w)) continue;
    bool isolated = true;
    for (const Arc& a : inst.neighbors(w)) {
      if (!sub.contains(a.to)) continue;
      isolated = false;
      if (W.contains(a.to) && w < a.to) groups.push_back(VertexSet(n, {w, a.to}));
    }
    if (isolated) groups.push_back(VertexSet(n, {w}));
  }
  std::sort(groups.begin(), groups.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.members() < b.members(); });

  std::vector<Compartment> out;
  out.reserve(groups.size());
  for (VertexSet& g : groups) {
    Compartment c{std::move(g), VertexSet(n)};
    for (VertexId w : c.vertices.members()) {
      if (!W.contains(w)) continue;
      for (const Arc& a : inst.neighbors(w)) {
        if (sub.contains(a.to) && !c.vertices.contains(a.to)) {
          c.boundary.insert(w);
          break;
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace sinkloc
