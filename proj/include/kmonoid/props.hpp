#ifndef KMONOID_PROPS_HPP_
#define KMONOID_PROPS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kmonoid/element.hpp"

namespace kmonoid {

/// Deterministic uniform pick in [0, n); avoids std::uniform_int_distribution
/// so output is identical across standard libraries.
uint64_t rand_below(std::mt19937_64& rng, uint64_t n);

/// Random element with each degree component <= max_component.
Element random_element(const Presentation& p, std::mt19937_64& rng,
                       uint32_t max_component);

struct LawReport {
  uint64_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Randomized algebraic-law suite over one validated presentation: degree
/// additivity, two-sided cancellation, conicality, Levi interpolation round
/// trips, and the join-path equidivisibility check for incomparable splits.
LawReport check_algebraic_laws(const Presentation& p, uint64_t cases,
                               uint64_t seed, uint32_t max_component = 2);

}  // namespace kmonoid

#endif  // KMONOID_PROPS_HPP_
