#pragma once

// Integer matrices and the two normal forms used to present finite
// abelian quotients of Z^k.

#include <vector>

#include "ggm/coeff.hpp"

namespace ggm {

using IntRow = std::vector<Integer>;
using IntMatrix = std::vector<IntRow>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Row-style Hermite normal form of the row lattice: nonzero rows only,
/// positive pivots, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix rows);

/// Reduces v modulo the row lattice of an HNF basis; zero iff v is in it.
IntRow reduce_mod_hnf(const IntMatrix& hnf, IntRow v);

struct SmithForm {
  IntMatrix u;         // unimodular, rows x rows
  IntMatrix d;         // diagonal, d_1 | d_2 | ..., non-negative
  IntMatrix v;         // unimodular, cols x cols
  IntMatrix v_inverse;
  /// Diagonal entries, length min(rows, cols).
  std::vector<Integer> diagonal() const;
};

/// u * m * v = d.
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace ggm
