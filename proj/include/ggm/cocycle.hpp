#pragma once

// Tame arithmetic on a local field with residue field F_q: the n-th Hilbert
// symbol and the determinant / Kazhdan-Patterson 2-cocycles on the diagonal
// torus.
//
// F^x is modeled modulo 1-units as Z x Z/(q-1): an element pi^a g^x, with pi a
// uniformizer and g a fixed generator of the residue units. mu_n is modeled by
// exponents of zeta = g^{(q-1)/n}.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ggm {

class FieldModel {
 public:
  /// Throws InvalidArgument unless q is a prime power and n >= 1 divides q-1.
  FieldModel(std::int64_t q, std::int64_t n);

  std::int64_t q() const { return q_; }
  std::int64_t n() const { return n_; }
  std::int64_t unit_modulus() const { return q_ - 1; }

 private:
  std::int64_t q_;
  std::int64_t n_;
};

struct FieldElem {
  std::int64_t valuation = 0;
  std::int64_t unit_exp = 0;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

struct MuN {
  std::int64_t exp = 0;

  friend bool operator==(const MuN&, const MuN&) = default;
};

/// Reduces unit_exp into [0, q-1).
FieldElem normalize(const FieldModel& fm, FieldElem u);
FieldElem multiply(const FieldModel& fm, const FieldElem& u, const FieldElem& v);
FieldElem power(const FieldModel& fm, const FieldElem& u, std::int64_t e);
FieldElem uniformizer();

MuN mu_mul(const FieldModel& fm, MuN a, MuN b);
MuN mu_pow(const FieldModel& fm, MuN a, std::int64_t e);
MuN mu_inv(const FieldModel& fm, MuN a);
/// Multiplicative order of the element, a divisor of n.
std::int64_t mu_order(const FieldModel& fm, MuN a);

/// With a = val u, b = val v: ((-1)^{ab} u0^b v0^{-a})^{(q-1)/n}, where u0, v0
/// are the unit parts, read as an exponent of zeta.
MuN hilbert(const FieldModel& fm, const FieldElem& u, const FieldElem& v);

using TorusElem = std::vector<FieldElem>;

TorusElem torus_multiply(const FieldModel& fm, const TorusElem& t, const TorusElem& u);

/// (prod t_i, prod t'_j)_n. Throws InvalidArgument on a length mismatch.
MuN sigma_det_torus(const FieldModel& fm, const TorusElem& t, const TorusElem& tp);
/// prod_{i<j} (t_i, t'_j)_n.
MuN sigma_kp_torus(const FieldModel& fm, const TorusElem& t, const TorusElem& tp);
/// sigma_det^c sigma_KP^d.
MuN sigma_cover_torus(const FieldModel& fm, std::int64_t c, std::int64_t d, const TorusElem& t,
                      const TorusElem& tp);
/// sigma(t, t') sigma(t', t)^{-1}.
MuN commutator_torus(const FieldModel& fm, std::int64_t c, std::int64_t d, const TorusElem& t,
                     const TorusElem& tp);

/// Exponent table of the pairing on F^x / F^{x n}, the classes indexed by
/// (valuation mod n, unit_exp mod n) with index a*n + x.
std::vector<std::vector<std::int64_t>> pairing_table(const FieldModel& fm);
/// True when every nontrivial class pairs nontrivially with some class.
bool pairing_nondegenerate(const FieldModel& fm);

}  // namespace ggm
