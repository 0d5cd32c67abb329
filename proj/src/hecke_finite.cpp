#include "ggm/hecke_finite.hpp"

#include <sstream>

#include "ggm/error.hpp"

namespace ggm {

RatFunc FiniteHeckeElement::coefficient(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

void FiniteHeckeElement::add(const Permutation& w, const RatFunc& c) {
  if (c.is_zero()) return;
  if (w.size() != k_) throw InvalidArgument("Hecke basis element of the wrong rank");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FiniteHeckeElement& FiniteHeckeElement::operator+=(const FiniteHeckeElement& o) {
  if (o.k_ != k_) throw InvalidArgument("Hecke element rank mismatch");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FiniteHeckeElement& FiniteHeckeElement::operator-=(const FiniteHeckeElement& o) {
  if (o.k_ != k_) throw InvalidArgument("Hecke element rank mismatch");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FiniteHeckeElement& FiniteHeckeElement::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

std::string FiniteHeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")*T" << w.to_string();
  }
  return os.str();
}

FiniteHeckeAlgebra::FiniteHeckeAlgebra(int k, unsigned f, StructureFault fault)
    : k_(k), f_(f), q0_(RatFunc::q_power(f)), fault_(fault) {
  if (k < 1) throw InvalidArgument("Hecke algebra rank must be positive");
  if (f < 1) throw InvalidArgument("q0 = q^f needs f >= 1");
}

void FiniteHeckeAlgebra::check(const FiniteHeckeElement& a) const {
  if (a.rank() != k_) throw InvalidArgument("Hecke element rank mismatch");
}

FiniteHeckeElement FiniteHeckeAlgebra::basis(const Permutation& w) const {
  FiniteHeckeElement e(k_);
  e.add(w, RatFunc(1));
  return e;
}

FiniteHeckeElement FiniteHeckeAlgebra::one() const { return basis(Permutation::identity(k_)); }

FiniteHeckeElement FiniteHeckeAlgebra::scalar(const RatFunc& c) const {
  FiniteHeckeElement e(k_);
  e.add(Permutation::identity(k_), c);
  return e;
}

FiniteHeckeElement FiniteHeckeAlgebra::times_simple(const FiniteHeckeElement& a, int i) const {
  check(a);
  const RatFunc q0m1 = (fault_ == StructureFault::quadratic_sign && i == 1) ? RatFunc(1) - q0_ : q0_ - RatFunc(1);
  FiniteHeckeElement out(k_);
  for (const auto& [w, c] : a.terms()) {
    Permutation ws = w.times_simple(i);
    if (!is_right_descent(w, i)) {
      out.add(ws, c);
    } else {
      // T_w T_s = q0 T_{ws} + (q0 - 1) T_w when l(ws) < l(w).
      out.add(ws, c * q0_);
      out.add(w, c * q0m1);
    }
  }
  return out;
}

FiniteHeckeElement FiniteHeckeAlgebra::simple_times(int i, const FiniteHeckeElement& a) const {
  check(a);
  const RatFunc q0m1 = (fault_ == StructureFault::quadratic_sign && i == 1) ? RatFunc(1) - q0_ : q0_ - RatFunc(1);
  FiniteHeckeElement out(k_);
  for (const auto& [w, c] : a.terms()) {
    Permutation sw = w.simple_times(i);
    if (!is_left_descent(w, i)) {
      out.add(sw, c);
    } else {
      out.add(sw, c * q0_);
      out.add(w, c * q0m1);
    }
  }
  return out;
}

FiniteHeckeElement FiniteHeckeAlgebra::multiply(const FiniteHeckeElement& a, const FiniteHeckeElement& b) const {
  check(a);
  check(b);
  FiniteHeckeElement out(k_);
  for (const auto& [v, c] : b.terms()) {
    FiniteHeckeElement partial = a;
    for (int i : reduced_word(v)) partial = times_simple(partial, i);
    partial *= c;
    out += partial;
  }
  return out;
}

RatFunc FiniteHeckeAlgebra::sign(const FiniteHeckeElement& a) const {
  check(a);
  RatFunc s;
  for (const auto& [w, c] : a.terms()) s += c * sign_value(w);
  return s;
}

FiniteHeckeElement h0_multiply(const FiniteHeckeAlgebra& h, const FiniteHeckeElement& a, const FiniteHeckeElement& b) {
  return h.multiply(a, b);
}

RatFunc sign_value(const Permutation& w) { return RatFunc(length(w) % 2 == 0 ? 1 : -1); }

InducedSignModule induced_sign_module(int k, const Composition& J) {
  if (J.total() != k) throw InvalidArgument("composition " + J.to_string() + " does not sum to " + std::to_string(k));
  InducedSignModule m;
  m.k = k;
  m.parabolic = J;
  m.generators = young_subgroup(J);
  m.basis = min_coset_reps(k, m.generators);
  for (std::size_t i = 0; i < m.basis.size(); ++i) m.index.emplace(m.basis[i], i);
  return m;
}

namespace {

// Rewrites an element of H0 as an element of the induced module:
// T_w (x) 1 = (-1)^{l(u)} T_x (x) 1 for w = x u.
void accumulate_induced(const FiniteHeckeElement& e, const InducedSignModule& m, const RatFunc& scale, RFVector& out) {
  for (const auto& [w, c] : e.terms()) {
    auto [x, u] = parabolic_decompose(w, m.generators);
    RatFunc coeff = c * scale;
    if (length(u) % 2) coeff = -coeff;
    out[m.index.at(x)] += coeff;
  }
}

}  // namespace

RFVector module_act(const FiniteHeckeAlgebra& h, const FiniteHeckeElement& x, const InducedSignModule& m,
                    std::span<const RatFunc> v) {
  if (v.size() != m.dim()) throw InvalidArgument("coordinate vector does not match the module dimension");
  if (h.rank() != m.k) throw InvalidArgument("algebra and module ranks differ");
  RFVector out(m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (v[j].is_zero()) continue;
    accumulate_induced(h.multiply(x, h.basis(m.basis[j])), m, v[j], out);
  }
  return out;
}

RFMatrix action_matrix(const FiniteHeckeAlgebra& h, const InducedSignModule& m, int i) {
  if (h.rank() != m.k) throw InvalidArgument("algebra and module ranks differ");
  RFMatrix a(m.dim(), m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    RFVector col(m.dim());
    accumulate_induced(h.simple_times(i, h.basis(m.basis[j])), m, RatFunc(1), col);
    for (std::size_t r = 0; r < m.dim(); ++r) a(r, j) = col[r];
  }
  return a;
}

namespace {

// Functionals f with f(T_s v) = -f(v): rows (A_s + I)^T for every simple s.
RFMatrix sign_functional_system(const FiniteHeckeAlgebra& h, const InducedSignModule& m) {
  const std::size_t d = m.dim();
  const int gens = m.k - 1;
  RFMatrix sys(static_cast<std::size_t>(gens) * d, d);
  for (int i = 1; i <= gens; ++i) {
    RFMatrix a = action_matrix(h, m, i);
    const std::size_t base = static_cast<std::size_t>(i - 1) * d;
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t y = 0; y < d; ++y) {
        RatFunc e = a(y, x);
        if (x == y) e += RatFunc(1);
        sys(base + x, y) = std::move(e);
      }
    }
  }
  return sys;
}

}  // namespace

std::size_t hom_to_sign_dim(const FiniteHeckeAlgebra& h, const InducedSignModule& m) {
  if (m.k == 1) return m.dim();
  return kernel_basis(sign_functional_system(h, m)).size();
}

std::size_t hom_to_sign_dim_at(const FiniteHeckeAlgebra& h, const InducedSignModule& m, const Rational& q) {
  if (m.k == 1) return m.dim();
  return m.dim() - rank(specialize(sign_functional_system(h, m), q));
}

}  // namespace ggm
