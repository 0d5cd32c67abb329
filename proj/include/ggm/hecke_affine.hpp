#pragma once

// The affine Hecke algebra C[Y] (x) H(S_k, q0) in Bernstein presentation over
// an S_k-stable lattice Y inside Z^k, and the Gelfand-Graev module built from
// the orbit decomposition of X.
//
// Elements are kept in lattice-left normal form sum c_{t,w} phi_t T_w.
// For alpha = e_i - e_{i+1} and the least multiple a = m (e_i - e_{i+1}) in Y,
//   phi_t T_s - T_s phi_{s.t} = (q0 - 1) (phi_t - phi_{s.t}) / (phi_0 - phi_{-a}).

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ggm/coeff.hpp"
#include "ggm/cover.hpp"
#include "ggm/hecke_finite.hpp"
#include "ggm/intmat.hpp"
#include "ggm/symgroup.hpp"

namespace ggm {

struct LatticeSpec {
  int k = 0;
  /// HNF rows, a Z-basis of Y.
  IntMatrix basis;
  /// Least c > 0 with c (e_i - e_{i+1}) in Y; the same for every i.
  std::int64_t coroot_multiplier = 1;

  bool contains(const LatticeVec& t) const;
};

/// Y = T(b, rho) for the given cover and type.
LatticeSpec lattice_spec(const QuotientGroup& xg);
LatticeSpec lattice_spec(const CoverSpec& cov, const TypeSpec& ty);

class AffineHeckeElement {
 public:
  using Key = std::pair<LatticeVec, Permutation>;

  explicit AffineHeckeElement(int k = 0) : k_(k) {}

  int rank() const { return k_; }
  const std::map<Key, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const LatticeVec& t, const Permutation& w) const;

  void add(const LatticeVec& t, const Permutation& w, const RatFunc& c);

  AffineHeckeElement& operator+=(const AffineHeckeElement& o);
  AffineHeckeElement& operator-=(const AffineHeckeElement& o);
  AffineHeckeElement& operator*=(const RatFunc& c);
  friend AffineHeckeElement operator+(AffineHeckeElement a, const AffineHeckeElement& b) { return a += b; }
  friend AffineHeckeElement operator-(AffineHeckeElement a, const AffineHeckeElement& b) { return a -= b; }
  friend bool operator==(const AffineHeckeElement& a, const AffineHeckeElement& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int k_;
  std::map<Key, RatFunc> terms_;
};

class AffineHeckeAlgebra {
 public:
  AffineHeckeAlgebra(LatticeSpec lattice, unsigned f = 1);

  const LatticeSpec& lattice() const { return lat_; }
  const FiniteHeckeAlgebra& finite() const { return finite_; }
  int rank() const { return lat_.k; }
  const RatFunc& q0() const { return finite_.q0(); }

  /// phi_t; throws InvalidArgument when t is not in Y.
  AffineHeckeElement phi(const LatticeVec& t) const;
  AffineHeckeElement T(const Permutation& w) const;
  AffineHeckeElement one() const;
  AffineHeckeElement from_finite(const FiniteHeckeElement& h) const;

  /// (q0 - 1) (phi_t - phi_{s_i t}) / (phi_0 - phi_{-a}) expanded as a finite
  /// geometric sum. Throws InternalError if t_i - t_{i+1} is not a multiple
  /// of the coroot multiplier.
  AffineHeckeElement bernstein_lattice_part(const LatticeVec& t, int i) const;

  /// T_{s_i} * phi_t rewritten into lattice-left normal form:
  /// phi_{s_i t} T_{s_i} - bernstein_lattice_part(s_i t, i).
  AffineHeckeElement bernstein_cross(const LatticeVec& t, int i) const;

  /// T_{s_i} * a.
  AffineHeckeElement simple_times(int i, const AffineHeckeElement& a) const;
  AffineHeckeElement multiply(const AffineHeckeElement& a, const AffineHeckeElement& b) const;

 private:
  void check(const AffineHeckeElement& a) const;
  LatticeSpec lat_;
  FiniteHeckeAlgebra finite_;
};

AffineHeckeElement ah_multiply(const AffineHeckeAlgebra& h, const AffineHeckeElement& a, const AffineHeckeElement& b);

struct GGBlock {
  OrbitRecord orbit;
  InducedSignModule module;
};

/// V^lambda as a direct sum over S_k-orbits O in X of A (x) (H0 (x)_{H_O} eps_O).
struct GGModule {
  std::vector<GGBlock> blocks;
  LatticeSpec lattice;

  /// Rank over A = C[Y]: the sum of the block dimensions.
  std::uint64_t rank() const;
};

/// Throws InvalidArgument for generic covers.
GGModule gg_module(const CoverSpec& cov, const TypeSpec& ty, std::uint64_t bound = kDefaultEnumerationBound);

/// dim Hom(V^lambda, pi^lambda) for a one-dimensional module on which H0 acts
/// by the sign character: the sum over blocks of hom_to_sign_dim.
std::uint64_t whittaker_dim_hecke(const GGModule& module, unsigned f = 1);
std::uint64_t whittaker_dim_hecke(const CoverSpec& cov, const TypeSpec& ty,
                                  std::uint64_t bound = kDefaultEnumerationBound);
/// Same with every block's Hom dimension computed at q = value.
std::uint64_t whittaker_dim_hecke_at(const GGModule& module, const Rational& q, unsigned f = 1);

/// Cached hom_to_sign_dim of H0 (x)_{H_J} eps_J over Q(q); safe to call
/// from several threads.
std::size_t cached_hom_to_sign_dim(int k, const Composition& J, unsigned f);

struct TwPhiTerm {
  LatticeVec t;  // the term is phi_{-t} T_w
  Permutation w;
  RatFunc coefficient;
};

struct TwPhiReport {
  std::vector<TwPhiTerm> expansion;
  bool length_bound = true;    // l(w') <= l(w)
  bool ord_preserved = true;   // ord t' = ord t
  bool nonnegative = true;     // coefficients in Z_{>=0}[q0 - 1]
  bool support_in_box = true;  // every t' in the box
  std::vector<std::string> violations;

  bool ok() const { return length_bound && ord_preserved && nonnegative && support_in_box; }
};

/// Expands T_w * phi_{-t} in the basis {phi_{-t'} T_{w'}} and checks the
/// expansion properties above; violations are collected, never thrown.
TwPhiReport check_twphi_lemma(const AffineHeckeAlgebra& h, const Permutation& w, const LatticeVec& t,
                              std::int64_t box_lo, std::int64_t box_hi);

}  // namespace ggm
