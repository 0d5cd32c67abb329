#pragma once

// Exact coefficients: integers, rationals, Z[q], the field Q(q), and
// linear algebra over Q(q).

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace ggm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Polynomial in q with integer coefficients; index = degree.
/// Canonical: no trailing zero coefficients, the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit IntPoly(Integer c);
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly monomial(const Integer& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t i) const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& leading() const;

  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;
  IntPoly primitive_part() const;

  Rational eval(const Rational& q) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& scale(const Integer& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Divides by a nonzero integer that is known to divide every coefficient.
IntPoly divide_exact(const IntPoly& a, const Integer& c);
/// Divides by a polynomial that divides a in Z[q]; throws InternalError otherwise.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);
/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// gcd in Z[q], positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Element of Q(q) stored as num/den over Z[q] with gcd(num, den) = +-1 in
/// Z[q] and lc(den) > 0, so that equality is coefficientwise.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(IntPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(IntPoly num, IntPoly den);
  static RatFunc from_rational(const Rational& r);

  /// q^e.
  static RatFunc q_power(unsigned e) { return RatFunc(IntPoly::monomial(1, e)); }

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// Throws PoleError when the denominator vanishes at q.
  Rational eval(const Rational& q) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  /// Throws DivisionByZero.
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "q") const;

 private:
  void normalize();
  IntPoly num_;
  IntPoly den_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);
std::ostream& operator<<(std::ostream& os, const RatFunc& r);

enum class ArithOp { add, sub, mul, div };
RatFunc rf_arith(const RatFunc& a, const RatFunc& b, ArithOp op);
Rational rf_eval(const RatFunc& a, const Rational& q);

/// Dense row-major matrix over Q(q).
class RFMatrix {
 public:
  RFMatrix() = default;
  RFMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RatFunc& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<RatFunc> apply(const std::vector<RatFunc>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFunc> data_;
};

using RFVector = std::vector<RatFunc>;

/// Basis of the right null space {v : m v = 0}; one vector per non-pivot column.
std::vector<RFVector> kernel_basis(const RFMatrix& m);
std::size_t rank(const RFMatrix& m);

/// Dense matrix over Q, used for specializations q -> value.
struct QMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

QMatrix specialize(const RFMatrix& m, const Rational& q);
std::size_t rank(QMatrix m);

}  // namespace ggm
