#pragma once

// Cover and simple-type parameters, the lattices T(b) = Z^k, T(b, rho) and
// T_0(b) = n0 Z^k, the finite quotient X = T(b) / T(b, rho) with its S_k
// action, orbit enumeration, and the closed-form Whittaker dimensions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ggm/coeff.hpp"
#include "ggm/intmat.hpp"
#include "ggm/symgroup.hpp"

namespace ggm {

enum class CoverKind { kp, savin, generic };

std::string to_string(CoverKind kind);
/// Accepts "kp", "savin", "generic" (case-insensitive).
CoverKind parse_cover_kind(const std::string& s);

/// The cover with cocycle sigma_det^c * sigma_KP^d. Kazhdan-Patterson covers
/// have d = 1; the Savin cover has (c, d) = (-1, 2).
struct CoverSpec {
  std::int64_t n = 1;
  std::int64_t c = 0;
  std::int64_t d = 1;
  CoverKind kind = CoverKind::kp;

  static CoverSpec kp(std::int64_t n, std::int64_t c) { return {n, c, 1, CoverKind::kp}; }
  static CoverSpec savin(std::int64_t n) { return {n, -1, 2, CoverKind::savin}; }
  static CoverSpec generic(std::int64_t n, std::int64_t c, std::int64_t d) { return {n, c, d, CoverKind::generic}; }

  /// Throws InvalidArgument on n < 1 or a kind/(c, d) mismatch.
  void validate() const;
};

/// r = GL rank, k = number of blocks, l0 = twist order, q0 = q^f.
struct TypeSpec {
  std::int64_t r = 1;
  std::int64_t k = 1;
  std::int64_t l0 = 1;
  unsigned f = 1;

  /// Throws InvalidArgument unless k | r and l0 | n.
  void validate(const CoverSpec& cov) const;
};

struct DerivedParams {
  std::int64_t r0 = 1;
  std::int64_t n0 = 1;
  std::int64_t d0 = 1;
};

/// n0 = n / gcd(n, (2c+d) r0 l0, d l0), d0 = n / gcd(n, l0 (2cr + dr - d)).
DerivedParams derive_params(const CoverSpec& cov, const TypeSpec& ty);

/// The k x k integer matrix A with T(b, rho) = {s : A s = 0 mod n}.
IntMatrix congruence_matrix(const CoverSpec& cov, const TypeSpec& ty);
bool in_T_brho(const CoverSpec& cov, const TypeSpec& ty, const LatticeVec& t);

/// s_1 + ... + s_k.
std::int64_t ord(const LatticeVec& t);

/// Coordinates of an element of X in the Smith basis, one per nontrivial
/// invariant factor.
using QuotientElem = std::vector<std::int64_t>;

/// X = Z^k / L for a full-rank S_k-stable lattice L.
class QuotientGroup {
 public:
  /// relation_rows: any generating set of L. Throws InvalidArgument if L is not
  /// of full rank or not S_k-stable.
  QuotientGroup(int k, const IntMatrix& relation_rows);

  int rank() const { return k_; }
  /// HNF basis of L.
  const IntMatrix& relation_lattice() const { return hnf_; }
  /// Nontrivial invariant factors e_1 | e_2 | ...
  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::uint64_t order() const { return order_; }

  QuotientElem project(const LatticeVec& t) const;
  /// An integer vector projecting to x.
  LatticeVec lift(const QuotientElem& x) const;
  bool contains(const LatticeVec& t) const;
  QuotientElem act(const Permutation& w, const QuotientElem& x) const;
  /// s_i . x, using precomputed images of the Smith generators.
  QuotientElem act_simple(int i, const QuotientElem& x) const;

  /// Mixed-radix index; increasing index = lexicographic order on coordinates.
  std::uint64_t index(const QuotientElem& x) const;
  QuotientElem element(std::uint64_t index) const;

  /// Order of the image of e_i - e_{i+1}: the least c > 0 with
  /// c (e_i - e_{i+1}) in L. Throws InternalError if it depends on i.
  std::int64_t coroot_multiplier() const;

 private:
  int k_;
  IntMatrix hnf_;
  std::vector<std::int64_t> factors_;
  std::vector<std::size_t> factor_columns_;  // Smith columns carrying factors_
  IntMatrix v_;
  IntMatrix v_inverse_;
  std::uint64_t order_ = 1;
  std::vector<std::vector<QuotientElem>> simple_images_;  // [i-1][generator]
};

/// X(lambda) = T(b) / T(b, rho). For Kazhdan-Patterson covers checks
/// |X| = n0^{k-1} d0, for the Savin cover |X| = n0^k; a mismatch throws
/// InternalError.
QuotientGroup x_lambda(const CoverSpec& cov, const TypeSpec& ty);

inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

struct OrbitRecord {
  /// Lexicographically smallest element of the orbit (Smith coordinates).
  QuotientElem representative;
  std::uint64_t size = 0;
  /// Composition of a standard Young subgroup that is the point stabilizer of
  /// some orbit element; empty when no orbit element has such a stabilizer.
  std::optional<Composition> stabilizer;
  /// The orbit element whose stabilizer is reported.
  QuotientElem stabilized_element;
};

/// Exhaustive S_k-orbit partition of X. Throws BoundExceeded if |X| > bound.
std::vector<OrbitRecord> orbits(const QuotientGroup& xg, std::uint64_t bound = kDefaultEnumerationBound);

/// binom(k+n0-1, k) d0 / n0 (Kazhdan-Patterson) or binom(k+n0-1, k) (Savin).
/// Throws InvalidArgument for generic covers and InternalError if the value
/// is not an integer.
Integer whittaker_dim_closed(const CoverSpec& cov, const TypeSpec& ty);

/// n0/d0 = gcd(n/l0, 2cr + r - 1) and gcd(n0/d0, k) = 1.
bool verify_kp_lemma(const CoverSpec& cov, const TypeSpec& ty);

/// Nondecreasing tuples in [0, n0-1]^k; for Kazhdan-Patterson covers only
/// those with ord mod n0 < d0.
std::vector<LatticeVec> select_representatives(const CoverSpec& cov, const TypeSpec& ty);

/// For t1 ~ t2 modulo T(b, rho): whether t1 - t2 lies in T_0(b) = n0 Z^k.
/// Throws InvalidArgument when t1, t2 are not equivalent and InternalError
/// when the answer disagrees with ord t1 = ord t2 (mod n0).
bool kp_class_test(const CoverSpec& cov, const TypeSpec& ty, const LatticeVec& t1, const LatticeVec& t2);

}  // namespace ggm
