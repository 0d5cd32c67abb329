#include "ggm/coeff.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "ggm/error.hpp"

namespace ggm {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

IntPoly::IntPoly(Integer c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  IntPoly p;
  if (c != 0) {
    p.coeffs_.assign(degree + 1, Integer(0));
    p.coeffs_[degree] = c;
  }
  return p;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
  static const Integer zero(0);
  return coeffs_.empty() ? zero : coeffs_.back();
}

Integer IntPoly::content() const {
  Integer g(0);
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer c = content();
  if (leading() < 0) c = -c;
  return divide_exact(*this, c);
}

Rational IntPoly::eval(const Rational& q) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q + Rational(*it);
  }
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  *this = *this * o;
  return *this;
}

IntPoly& IntPoly::scale(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

IntPoly divide_exact(const IntPoly& a, const Integer& c) {
  if (c == 0) throw DivisionByZero("polynomial divided by the integer 0");
  std::vector<Integer> out = a.coefficients();
  for (auto& x : out) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw InternalError("inexact integer division of a polynomial");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial divided by 0");
  if (b.is_constant()) return divide_exact(a, b.leading());
  std::vector<Integer> rem = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) {
    if (a.is_zero()) return {};
    throw InternalError("inexact polynomial division");
  }
  std::vector<Integer> quot(static_cast<std::size_t>(da - db + 1), Integer(0));
  const Integer& lb = b.leading();
  for (int i = da; i >= db; --i) {
    Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw InternalError("inexact polynomial division");
    Integer factor;
    mpz_divexact(factor.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    const int shift = i - db;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(shift + j)].get_mpz_t(), factor.get_mpz_t(),
                 b.coefficients()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    quot[static_cast<std::size_t>(shift)] = factor;
  }
  for (const auto& r : rem) {
    if (r != 0) throw InternalError("inexact polynomial division");
  }
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by 0");
  std::vector<Integer> rem = a.coefficients();
  const int db = b.degree();
  const Integer& lb = b.leading();
  int dr = a.degree();
  while (dr >= db && dr >= 0) {
    Integer top = rem[static_cast<std::size_t>(dr)];
    for (auto& x : rem) x *= lb;
    const int shift = dr - db;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(shift + j)].get_mpz_t(), top.get_mpz_t(),
                 b.coefficients()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    rem.resize(static_cast<std::size_t>(dr));
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    dr = static_cast<int>(rem.size()) - 1;
  }
  return IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.primitive_part().scale(b.content());
  if (b.is_zero()) return a.primitive_part().scale(a.content());
  Integer c;
  mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  if (a.is_constant() || b.is_constant()) return IntPoly(c);
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part().scale(c);
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::from_rational(const Rational& r) {
  return RatFunc(IntPoly(Integer(r.get_num())), IntPoly(Integer(r.get_den())));
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  if (!den_.is_one()) {
    IntPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
}

Rational RatFunc::eval(const Rational& q) const {
  Rational d = den_.eval(q);
  if (d == 0) throw PoleError("denominator " + den_.to_string() + " vanishes at q = " + q.get_str());
  return num_.eval(q) / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.is_one()) return num_.to_string(var);
  auto wrap = [&](const IntPoly& p) {
    std::string s = p.to_string(var);
    bool simple = p.is_constant() || (p.coefficients().size() == static_cast<std::size_t>(p.degree() + 1) &&
                                      std::count_if(p.coefficients().begin(), p.coefficients().end(),
                                                    [](const Integer& c) { return c != 0; }) == 1);
    return simple ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

RatFunc rf_arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  throw InvalidArgument("unknown arithmetic operation");
}

Rational rf_eval(const RatFunc& a, const Rational& q) { return a.eval(q); }

// ---------------------------------------------------------------- matrices

std::vector<RatFunc> RFMatrix::apply(const std::vector<RatFunc>& v) const {
  if (v.size() != cols_) throw InvalidArgument("matrix-vector size mismatch");
  std::vector<RatFunc> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const RatFunc& a = (*this)(i, j);
      if (a.is_zero() || v[j].is_zero()) continue;
      out[i] += a * v[j];
    }
  }
  return out;
}

namespace {

std::size_t pivot_cost(const RatFunc& x) {
  return static_cast<std::size_t>(x.numerator().degree() + x.denominator().degree()) * 4 +
         (x.numerator().is_constant() && abs(x.numerator().leading()) == 1 ? 0 : 1);
}

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(std::vector<std::vector<RatFunc>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t best = rows.size();
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      std::size_t cost = pivot_cost(rows[r][c]);
      if (cost < best_cost) {
        best = r;
        best_cost = cost;
        if (cost == 0) break;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[next], rows[best]);
    auto& prow = rows[next];
    if (!(prow[c] == RatFunc(1))) {
      RatFunc inv = RatFunc(1) / prow[c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!prow[j].is_zero()) prow[j] *= inv;
      }
    }
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < cols; ++j) {
      if (!prow[j].is_zero()) support.push_back(j);
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][c].is_zero()) continue;
      RatFunc factor = rows[r][c];
      for (std::size_t j : support) rows[r][j] -= factor * prow[j];
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

std::vector<std::vector<RatFunc>> to_rows(const RFMatrix& m) {
  std::vector<std::vector<RatFunc>> rows(m.rows(), std::vector<RatFunc>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

}  // namespace

std::vector<RFVector> kernel_basis(const RFMatrix& m) {
  auto rows = to_rows(m);
  const auto pivots = rref(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RFVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RFVector v(m.cols());
    v[free] = RatFunc(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!rows[r][free].is_zero()) v[pivots[r]] = -rows[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RFMatrix& m) {
  auto rows = to_rows(m);
  return rref(rows, m.cols()).size();
}

QMatrix specialize(const RFMatrix& m, const Rational& q) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) out(i, j) = m(i, j).eval(q);
    }
  }
  return out;
}

std::size_t rank(QMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    }
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace ggm
