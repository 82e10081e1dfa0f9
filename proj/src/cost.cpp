#include "sinkloc/cost.hpp"

#include <algorithm>
#include <stdexcept>

namespace sinkloc {
namespace {

// BFS order of U from v with parents; empty when v is outside U or U is
// disconnected.
bool rooted_order(const Instance& inst, const VertexSet& U, VertexId v, std::vector<VertexId>& order,
                  std::vector<VertexId>& parent) {
  if (!U.contains(v)) return false;
  order.clear();
  order.reserve(U.size());
  parent.assign(inst.size(), kNoVertex);
  order.push_back(v);
  parent[v] = v;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Arc& a : inst.neighbors(order[i])) {
      if (parent[a.to] != kNoVertex || !U.contains(a.to)) continue;
      parent[a.to] = order[i];
      order.push_back(a.to);
    }
  }
  return order.size() == U.size();
}

class RunWriter {
 public:
  explicit RunWriter(std::vector<FlowRun>& out) : out_(out) {}
  void emit(std::uint64_t start, std::uint64_t length, std::uint64_t rate) {
    if (length == 0 || rate == 0) return;
    if (!out_.empty()) {
      FlowRun& last = out_.back();
      if (last.rate == rate && last.start + last.length == start) {
        last.length += length;
        return;
      }
    }
    out_.push_back({start, length, rate});
  }

 private:
  std::vector<FlowRun>& out_;
};

}  // namespace

std::string format_cost(Cost c) { return c == kInfiniteCost ? "inf" : std::to_string(c); }

std::string_view to_string(CostKind kind) {
  return kind == CostKind::Evacuation ? "evac" : "ecc";
}

CostKind parse_cost_kind(std::string_view text) {
  if (text == "evac" || text == "evacuation") return CostKind::Evacuation;
  if (text == "ecc" || text == "eccentricity") return CostKind::Eccentricity;
  throw std::invalid_argument("unknown cost function: " + std::string(text));
}

std::vector<FlowRun> departure_schedule(std::vector<std::pair<std::uint64_t, std::int64_t>> events,
                                        std::uint64_t cap) {
  std::vector<FlowRun> out;
  if (events.empty()) return out;
  std::sort(events.begin(), events.end());
  RunWriter writer(out);
  std::uint64_t rate = 0;
  std::uint64_t backlog = 0;
  std::size_t i = 0;
  std::uint64_t t = events.front().first;
  while (i < events.size()) {
    while (i < events.size() && events[i].first == t) {
      rate = static_cast<std::uint64_t>(static_cast<std::int64_t>(rate) + events[i].second);
      ++i;
    }
    if (i == events.size()) break;
    const std::uint64_t next = events[i].first;
    const std::uint64_t len = next - t;
    if (rate >= cap) {
      writer.emit(t, len, cap);
      backlog += (rate - cap) * len;
    } else {
      const std::uint64_t spare = cap - rate;
      const std::uint64_t full = std::min(len, backlog / spare);
      writer.emit(t, full, cap);
      backlog -= full * spare;
      if (full < len) {
        writer.emit(t + full, 1, backlog + rate);
        backlog = 0;
        writer.emit(t + full + 1, len - full - 1, rate);
      }
    }
    t = next;
  }
  if (backlog > 0) {
    writer.emit(t, backlog / cap, cap);
    writer.emit(t + backlog / cap, 1, backlog % cap);
  }
  return out;
}

Cost EvacuationTime::evaluate(const Instance& inst, const VertexSet& U, VertexId v) const {
  std::vector<VertexId> order;
  std::vector<VertexId> parent;
  if (!rooted_order(inst, U, v, order, parent)) return kInfiniteCost;

  // Arrival events at each vertex, filled by its children.
  std::vector<std::vector<std::pair<std::uint64_t, std::int64_t>>> arrivals(inst.size());
  Cost finish = 0;
  for (std::size_t i = order.size(); i-- > 1;) {
    const VertexId x = order[i];
    auto& events = arrivals[x];
    if (const std::uint64_t w = inst.weight(x); w > 0) {
      events.emplace_back(0, static_cast<std::int64_t>(w));
      events.emplace_back(1, -static_cast<std::int64_t>(w));
    }
    const Arc& up = inst.arc(x, parent[x]);
    std::vector<FlowRun> runs = departure_schedule(std::move(events), up.cap);
    arrivals[x].clear();
    arrivals[x].shrink_to_fit();
    if (runs.empty()) continue;
    if (parent[x] == v) {
      const FlowRun& last = runs.back();
      finish = std::max<Cost>(finish, last.start + last.length - 1 + up.tau);
      continue;
    }
    auto& target = arrivals[parent[x]];
    for (const FlowRun& r : runs) {
      target.emplace_back(r.start + up.tau, static_cast<std::int64_t>(r.rate));
      target.emplace_back(r.start + r.length + up.tau, -static_cast<std::int64_t>(r.rate));
    }
  }
  return finish;
}

Cost Eccentricity::evaluate(const Instance& inst, const VertexSet& U, VertexId v) const {
  std::vector<VertexId> order;
  std::vector<VertexId> parent;
  if (!rooted_order(inst, U, v, order, parent)) return kInfiniteCost;
  std::vector<Cost> dist(inst.size(), 0);
  Cost best = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const VertexId x = order[i];
    dist[x] = dist[parent[x]] + inst.arc(x, parent[x]).tau;
    best = std::max(best, dist[x]);
  }
  return best;
}

std::unique_ptr<CostFunction> make_cost_function(CostKind kind) {
  if (kind == CostKind::Evacuation) return std::make_unique<EvacuationTime>();
  return std::make_unique<Eccentricity>();
}

}  // namespace sinkloc
