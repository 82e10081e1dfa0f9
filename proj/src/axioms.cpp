#include "sinkloc/axioms.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sinkloc/tree.hpp"

namespace sinkloc {
namespace {

std::string describe(const VertexSet& U, VertexId v) {
  std::ostringstream os;
  os << "U={";
  bool first = true;
  for (VertexId x : U.members()) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << "} v=" << v;
  return os.str();
}

class Checker {
 public:
  Checker(const CostFunction& fn, const Instance& inst, AxiomReport& report)
      : fn_(fn), inst_(inst), report_(report) {
    for (int i = 0; i < 4; ++i) report_.axioms[i].axiom = i + 1;
  }

  Cost f(const VertexSet& U, VertexId v) const { return fn_.evaluate(inst_, U, v); }

  void record(int axiom, bool ok, const std::string& what) {
    AxiomResult& r = report_.axioms[axiom - 1];
    ++r.checked;
    if (!ok) {
      if (r.failures == 0) r.witness = what;
      ++r.failures;
    }
  }

  // Connected U containing v.
  void check_at(const VertexSet& U, VertexId v) {
    const Cost whole = f(U, v);
    if (U.size() == 1) record(1, whole == 0, "f({v},v) != 0 for " + describe(U, v));

    // Axiom 2 via removal of one leaf of U other than v.
    for (VertexId u : U.members()) {
      if (u == v || leaf_degree(U, u) != 1) continue;
      VertexSet smaller = U;
      smaller.erase(u);
      record(2, f(smaller, v) <= whole, "set monotonicity: " + describe(smaller, v) + " within " + describe(U, v));
    }

    // Axiom 3: step one edge outwards.
    for (const Arc& a : inst_.neighbors(v)) {
      if (U.contains(a.to)) continue;
      VertexSet grown = U;
      grown.insert(a.to);
      record(3, f(grown, a.to) >= whole, "path monotonicity: " + describe(U, v) + " extended to " +
                                             std::to_string(a.to));
    }

    // Axiom 4: components of U - v.
    VertexSet rest = U;
    rest.erase(v);
    Cost best = 0;
    for (const Arc& a : inst_.neighbors(v)) {
      if (!rest.contains(a.to)) continue;
      VertexSet part = component_from(inst_, rest, a.to);
      part.insert(v);
      best = std::max(best, f(part, v));
    }
    record(4, best == whole,
           "max composition: " + describe(U, v) + " gives " + format_cost(whole) + " but parts give " +
               format_cost(best));
  }

  void check_outside(const VertexSet& U, VertexId v) {
    record(1, f(U, v) == kInfiniteCost, "finite value outside set: " + describe(U, v));
  }

 private:
  std::size_t leaf_degree(const VertexSet& U, VertexId u) const {
    std::size_t d = 0;
    for (const Arc& a : inst_.neighbors(u)) d += U.contains(a.to) ? 1 : 0;
    return d;
  }

  const CostFunction& fn_;
  const Instance& inst_;
  AxiomReport& report_;
};

VertexSet from_mask(std::size_t n, std::uint32_t mask) {
  VertexSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (mask & (1u << i)) s.insert(static_cast<VertexId>(i));
  }
  return s;
}

VertexSet random_subtree(const Instance& inst, std::mt19937_64& rng) {
  const std::size_t n = inst.size();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t target = std::uniform_int_distribution<std::size_t>(1, n)(rng);
  VertexSet U(n);
  std::vector<VertexId> frontier;
  auto add = [&](VertexId x) {
    U.insert(x);
    for (const Arc& a : inst.neighbors(x)) {
      if (!U.contains(a.to)) frontier.push_back(a.to);
    }
  };
  add(static_cast<VertexId>(pick(rng)));
  while (U.size() < target && !frontier.empty()) {
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
    VertexId x = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    if (!U.contains(x)) add(x);
  }
  return U;
}

}  // namespace

bool AxiomReport::all_passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.passed(); });
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  for (const AxiomResult& r : axioms) {
    os << "axiom " << r.axiom << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.checked << " checks";
    if (!r.passed()) os << ", " << r.failures << " failures, first: " << r.witness;
    os << ")\n";
  }
  return os.str();
}

AxiomReport verify_axioms(const CostFunction& fn, const Instance& inst, std::size_t sample_budget,
                          std::uint64_t seed) {
  if (sample_budget == 0) throw std::invalid_argument("sample budget must be positive");
  AxiomReport report;
  Checker check(fn, inst, report);
  const std::size_t n = inst.size();

  if (n <= kExhaustiveAxiomLimit) {
    report.exhaustive = true;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      VertexSet U = from_mask(n, mask);
      const bool connected = is_connected(inst, U);
      for (std::size_t v = 0; v < n; ++v) {
        const auto x = static_cast<VertexId>(v);
        if (!U.contains(x)) {
          check.check_outside(U, x);
        } else if (connected) {
          check.check_at(U, x);
        } else {
          check.check_outside(U, x);
        }
      }
    }
    return report;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < sample_budget; ++i) {
    VertexSet U = random_subtree(inst, rng);
    std::vector<VertexId> members = U.members();
    VertexId v = members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
    check.check_at(U, v);
    VertexId outside = static_cast<VertexId>(pick(rng));
    if (!U.contains(outside)) check.check_outside(U, outside);
  }
  return report;
}

}  // namespace sinkloc
