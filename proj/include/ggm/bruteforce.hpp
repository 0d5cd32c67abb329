#pragma once

// Direct enumeration of X = T(b) / T(b, rho) that never reduces the lattice:
// the class of t is the residue vector A t mod n of the defining congruences.
// Used as an independent check on the Smith-form presentation.

#include <cstdint>
#include <optional>

#include "ggm/cover.hpp"

namespace ggm {

struct BruteforceCount {
  std::uint64_t x_order = 0;
  std::uint64_t orbit_count = 0;
};

/// Walks the box [0, n)^k, which meets every class since n Z^k lies in
/// T(b, rho). Returns nullopt when n^k exceeds the bound.
std::optional<BruteforceCount> bruteforce_count(const CoverSpec& cov, const TypeSpec& ty,
                                                std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace ggm
