#pragma once

// The finite Hecke algebra H(S_k, q0) with q0 = q^f, its sign character, and
// the modules H0 (x)_{H_J} eps_J induced from the sign character of a
// parabolic subalgebra.

#include <map>
#include <span>
#include <vector>

#include "ggm/coeff.hpp"
#include "ggm/symgroup.hpp"

namespace ggm {

/// Finitely supported map w -> coefficient in the basis {T_w}.
class FiniteHeckeElement {
 public:
  explicit FiniteHeckeElement(int k = 0) : k_(k) {}

  int rank() const { return k_; }
  const std::map<Permutation, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const Permutation& w) const;

  /// Adds c T_w; zero coefficients are never stored.
  void add(const Permutation& w, const RatFunc& c);

  FiniteHeckeElement& operator+=(const FiniteHeckeElement& o);
  FiniteHeckeElement& operator-=(const FiniteHeckeElement& o);
  FiniteHeckeElement& operator*=(const RatFunc& c);
  friend FiniteHeckeElement operator+(FiniteHeckeElement a, const FiniteHeckeElement& b) { return a += b; }
  friend FiniteHeckeElement operator-(FiniteHeckeElement a, const FiniteHeckeElement& b) { return a -= b; }

  friend bool operator==(const FiniteHeckeElement& a, const FiniteHeckeElement& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int k_;
  std::map<Permutation, RatFunc> terms_;
};

/// Test hook: corrupts one structure constant so that the verification
/// suites can demonstrate they detect it.
enum class StructureFault { none, quadratic_sign };

class FiniteHeckeAlgebra {
 public:
  explicit FiniteHeckeAlgebra(int k, unsigned f = 1, StructureFault fault = StructureFault::none);

  int rank() const { return k_; }
  unsigned q_exponent() const { return f_; }
  /// q0 = q^f.
  const RatFunc& q0() const { return q0_; }

  FiniteHeckeElement basis(const Permutation& w) const;
  FiniteHeckeElement one() const;
  FiniteHeckeElement scalar(const RatFunc& c) const;

  /// a * T_{s_i}.
  FiniteHeckeElement times_simple(const FiniteHeckeElement& a, int i) const;
  /// T_{s_i} * a.
  FiniteHeckeElement simple_times(int i, const FiniteHeckeElement& a) const;
  FiniteHeckeElement multiply(const FiniteHeckeElement& a, const FiniteHeckeElement& b) const;

  /// Linear extension of T_w -> (-1)^{l(w)}.
  RatFunc sign(const FiniteHeckeElement& a) const;

 private:
  void check(const FiniteHeckeElement& a) const;
  int k_;
  unsigned f_;
  RatFunc q0_;
  StructureFault fault_;
};

FiniteHeckeElement h0_multiply(const FiniteHeckeAlgebra& h, const FiniteHeckeElement& a, const FiniteHeckeElement& b);

/// (-1)^{l(w)}.
RatFunc sign_value(const Permutation& w);

/// H0 (x)_{H_J} eps_J with basis {T_x (x) 1 : x minimal in x W_J}.
struct InducedSignModule {
  int k = 0;
  Composition parabolic;
  SimpleSet generators;
  std::vector<Permutation> basis;
  std::map<Permutation, std::size_t> index;

  std::size_t dim() const { return basis.size(); }
};

InducedSignModule induced_sign_module(int k, const Composition& J);

/// Left action of h on the coordinate vector v (indexed like m.basis).
RFVector module_act(const FiniteHeckeAlgebra& h, const FiniteHeckeElement& x, const InducedSignModule& m,
                    std::span<const RatFunc> v);

/// Matrix of T_{s_i}; column j holds the coordinates of T_{s_i} (T_{x_j} (x) 1).
RFMatrix action_matrix(const FiniteHeckeAlgebra& h, const InducedSignModule& m, int i);

/// dim Hom_{H0}(m, eps_0), computed over Q(q).
std::size_t hom_to_sign_dim(const FiniteHeckeAlgebra& h, const InducedSignModule& m);
/// The same dimension with q specialized to a rational value.
std::size_t hom_to_sign_dim_at(const FiniteHeckeAlgebra& h, const InducedSignModule& m, const Rational& q);

}  // namespace ggm
