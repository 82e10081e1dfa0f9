#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "sinkloc/cost.hpp"
#include "sinkloc/instance.hpp"

namespace sinkloc {

struct AxiomResult {
  int axiom = 0;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  // Description of the first failing case.
  std::string witness;

  bool passed() const { return failures == 0; }
};

struct AxiomReport {
  bool exhaustive = false;
  // Axioms 1 (boundary values), 2 (set monotonicity), 3 (path monotonicity)
  // and 4 (max composition).
  std::array<AxiomResult, 4> axioms{};

  bool all_passed() const;
  std::string summary() const;
};

inline constexpr std::size_t kExhaustiveAxiomLimit = 10;

// Checks every connected subset when n <= kExhaustiveAxiomLimit and draws
// `sample_budget` random cases per axiom otherwise.
AxiomReport verify_axioms(const CostFunction& fn, const Instance& inst, std::size_t sample_budget,
                          std::uint64_t seed = 1);

}  // namespace sinkloc
