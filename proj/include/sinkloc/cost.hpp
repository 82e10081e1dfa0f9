#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sinkloc/instance.hpp"
#include "sinkloc/vertex_set.hpp"

namespace sinkloc {

using Cost = std::uint64_t;
inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max();

std::string format_cost(Cost c);

enum class CostKind { Evacuation, Eccentricity };

std::string_view to_string(CostKind kind);
// Accepts "evac"/"evacuation" and "ecc"/"eccentricity"; throws std::invalid_argument.
CostKind parse_cost_kind(std::string_view text);

// f(U, v). Returns kInfiniteCost when v is not in U or U is disconnected.
class CostFunction {
 public:
  virtual ~CostFunction() = default;
  virtual CostKind kind() const = 0;
  virtual Cost evaluate(const Instance& inst, const VertexSet& U, VertexId v) const = 0;
};

// Completion time of confluent integer-time evacuation of U toward v.
class EvacuationTime final : public CostFunction {
 public:
  CostKind kind() const override { return CostKind::Evacuation; }
  Cost evaluate(const Instance& inst, const VertexSet& U, VertexId v) const override;
};

// Largest transit-time distance from a vertex of U to v.
class Eccentricity final : public CostFunction {
 public:
  CostKind kind() const override { return CostKind::Eccentricity; }
  Cost evaluate(const Instance& inst, const VertexSet& U, VertexId v) const override;
};

std::unique_ptr<CostFunction> make_cost_function(CostKind kind);

// `rate` people leave during each of the steps start .. start+length-1.
struct FlowRun {
  std::uint64_t start = 0;
  std::uint64_t length = 0;
  std::uint64_t rate = 0;
};

// Departures through an edge of capacity `cap` given the arrivals at its
// tail. `events` holds (time, signed rate change) pairs describing a
// piecewise-constant arrival rate; people arriving at time t may leave at t.
std::vector<FlowRun> departure_schedule(std::vector<std::pair<std::uint64_t, std::int64_t>> events,
                                        std::uint64_t cap);

struct OracleStats {
  std::uint64_t calls = 0;
  // Sum of |U| over all calls.
  std::uint64_t work = 0;

  OracleStats& operator+=(const OracleStats& other) {
    calls += other.calls;
    work += other.work;
    return *this;
  }
  friend OracleStats operator-(OracleStats a, const OracleStats& b) {
    a.calls -= b.calls;
    a.work -= b.work;
    return a;
  }
};

// Counting handle around a cost function bound to one instance.
class Oracle {
 public:
  Oracle(const Instance& inst, const CostFunction& fn) : inst_(&inst), fn_(&fn) {}

  Cost operator()(const VertexSet& U, VertexId v) {
    ++stats_.calls;
    stats_.work += U.size();
    return fn_->evaluate(*inst_, U, v);
  }
  // Evaluation that does not count towards the statistics.
  Cost peek(const VertexSet& U, VertexId v) const { return fn_->evaluate(*inst_, U, v); }

  const Instance& instance() const { return *inst_; }
  const CostFunction& function() const { return *fn_; }
  const OracleStats& stats() const { return stats_; }
  void reset() { stats_ = {}; }

 private:
  const Instance* inst_;
  const CostFunction* fn_;
  OracleStats stats_;
};

}  // namespace sinkloc
