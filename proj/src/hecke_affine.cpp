#include "ggm/hecke_affine.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

#include "ggm/error.hpp"

namespace ggm {

bool LatticeSpec::contains(const LatticeVec& t) const {
  if (static_cast<int>(t.size()) != k) throw InvalidArgument("lattice vector has the wrong length");
  IntRow v(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) v[j] = Integer(static_cast<long>(t[j]));
  for (const auto& x : reduce_mod_hnf(basis, std::move(v))) {
    if (x != 0) return false;
  }
  return true;
}

LatticeSpec lattice_spec(const QuotientGroup& xg) {
  return LatticeSpec{xg.rank(), xg.relation_lattice(), xg.coroot_multiplier()};
}

LatticeSpec lattice_spec(const CoverSpec& cov, const TypeSpec& ty) { return lattice_spec(x_lambda(cov, ty)); }

// ------------------------------------------------------------ elements

RatFunc AffineHeckeElement::coefficient(const LatticeVec& t, const Permutation& w) const {
  auto it = terms_.find(Key{t, w});
  return it == terms_.end() ? RatFunc() : it->second;
}

void AffineHeckeElement::add(const LatticeVec& t, const Permutation& w, const RatFunc& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(t.size()) != k_ || w.size() != k_) throw InvalidArgument("affine Hecke term of the wrong rank");
  auto [it, inserted] = terms_.try_emplace(Key{t, w}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AffineHeckeElement& AffineHeckeElement::operator+=(const AffineHeckeElement& o) {
  if (o.k_ != k_) throw InvalidArgument("affine Hecke rank mismatch");
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

AffineHeckeElement& AffineHeckeElement::operator-=(const AffineHeckeElement& o) {
  if (o.k_ != k_) throw InvalidArgument("affine Hecke rank mismatch");
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, -c);
  return *this;
}

AffineHeckeElement& AffineHeckeElement::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, x] : terms_) x *= c;
  return *this;
}

std::string AffineHeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")*phi(";
    for (std::size_t j = 0; j < key.first.size(); ++j) os << (j ? "," : "") << key.first[j];
    os << ")*T" << key.second.to_string();
  }
  return os.str();
}

// ------------------------------------------------------------ algebra

AffineHeckeAlgebra::AffineHeckeAlgebra(LatticeSpec lattice, unsigned f)
    : lat_(std::move(lattice)), finite_(lat_.k, f) {
  if (lat_.coroot_multiplier < 1) throw InvalidArgument("coroot multiplier must be positive");
  for (int i = 1; i < lat_.k; ++i) {
    LatticeVec a(static_cast<std::size_t>(lat_.k), 0);
    a[static_cast<std::size_t>(i - 1)] = lat_.coroot_multiplier;
    a[static_cast<std::size_t>(i)] = -lat_.coroot_multiplier;
    if (!lat_.contains(a)) throw InvalidArgument("coroot multiple is not in the lattice");
  }
}

void AffineHeckeAlgebra::check(const AffineHeckeElement& a) const {
  if (a.rank() != lat_.k) throw InvalidArgument("affine Hecke element of the wrong rank");
}

AffineHeckeElement AffineHeckeAlgebra::phi(const LatticeVec& t) const {
  if (!lat_.contains(t)) throw InvalidArgument("lattice vector is not in Y");
  AffineHeckeElement e(lat_.k);
  e.add(t, Permutation::identity(lat_.k), RatFunc(1));
  return e;
}

AffineHeckeElement AffineHeckeAlgebra::T(const Permutation& w) const {
  AffineHeckeElement e(lat_.k);
  e.add(LatticeVec(static_cast<std::size_t>(lat_.k), 0), w, RatFunc(1));
  return e;
}

AffineHeckeElement AffineHeckeAlgebra::one() const { return T(Permutation::identity(lat_.k)); }

AffineHeckeElement AffineHeckeAlgebra::from_finite(const FiniteHeckeElement& h) const {
  AffineHeckeElement e(lat_.k);
  const LatticeVec zero(static_cast<std::size_t>(lat_.k), 0);
  for (const auto& [w, c] : h.terms()) e.add(zero, w, c);
  return e;
}

AffineHeckeElement AffineHeckeAlgebra::bernstein_lattice_part(const LatticeVec& t, int i) const {
  if (i < 1 || i >= lat_.k) throw InvalidArgument("simple reflection index out of range");
  const auto a = static_cast<std::size_t>(i - 1);
  const std::int64_t diff = t[a] - t[a + 1];
  const std::int64_t mult = lat_.coroot_multiplier;
  if (diff % mult != 0) throw InternalError("t_i - t_{i+1} is not a multiple of the coroot multiplier");
  const std::int64_t m = diff / mult;
  const RatFunc q0m1 = q0() - RatFunc(1);
  const Permutation e = Permutation::identity(lat_.k);
  AffineHeckeElement out(lat_.k);
  LatticeVec u = t;
  if (m > 0) {
    for (std::int64_t j = 0; j < m; ++j) {
      out.add(u, e, q0m1);
      u[a] -= mult;
      u[a + 1] += mult;
    }
  } else {
    for (std::int64_t j = 1; j <= -m; ++j) {
      u[a] += mult;
      u[a + 1] -= mult;
      out.add(u, e, -q0m1);
    }
  }
  return out;
}

AffineHeckeElement AffineHeckeAlgebra::bernstein_cross(const LatticeVec& t, int i) const {
  if (!lat_.contains(t)) throw InvalidArgument("lattice vector is not in Y");
  const LatticeVec st = act(Permutation::simple(lat_.k, i), t);
  AffineHeckeElement out(lat_.k);
  out.add(st, Permutation::simple(lat_.k, i), RatFunc(1));
  out -= bernstein_lattice_part(st, i);
  return out;
}

AffineHeckeElement AffineHeckeAlgebra::simple_times(int i, const AffineHeckeElement& a) const {
  check(a);
  AffineHeckeElement out(lat_.k);
  for (const auto& [key, c] : a.terms()) {
    const auto& [u, x] = key;
    // T_s phi_u = phi_{su} T_s - LP(su), then multiply by T_x on the right.
    const LatticeVec su = act(Permutation::simple(lat_.k, i), u);
    const FiniteHeckeElement sx = finite_.simple_times(i, finite_.basis(x));
    for (const auto& [y, cy] : sx.terms()) out.add(su, y, c * cy);
    const AffineHeckeElement lattice_part = bernstein_lattice_part(su, i);
    for (const auto& [lkey, lc] : lattice_part.terms()) out.add(lkey.first, x, -(c * lc));
  }
  return out;
}

AffineHeckeElement AffineHeckeAlgebra::multiply(const AffineHeckeElement& a, const AffineHeckeElement& b) const {
  check(a);
  check(b);
  AffineHeckeElement out(lat_.k);
  for (const auto& [akey, ac] : a.terms()) {
    const auto& [t, v] = akey;
    const std::vector<int> word = reduced_word(v);
    for (const auto& [bkey, bc] : b.terms()) {
      const auto& [u, w] = bkey;
      // T_v phi_u in normal form.
      AffineHeckeElement mid = phi(u);
      for (auto it = word.rbegin(); it != word.rend(); ++it) mid = simple_times(*it, mid);
      const RatFunc scale = ac * bc;
      const FiniteHeckeElement tw = finite_.basis(w);
      for (const auto& [mkey, mc] : mid.terms()) {
        LatticeVec shifted = mkey.first;
        for (std::size_t j = 0; j < shifted.size(); ++j) shifted[j] += t[j];
        const FiniteHeckeElement prod = finite_.multiply(finite_.basis(mkey.second), tw);
        for (const auto& [y, cy] : prod.terms()) out.add(shifted, y, scale * mc * cy);
      }
    }
  }
  return out;
}

AffineHeckeElement ah_multiply(const AffineHeckeAlgebra& h, const AffineHeckeElement& a, const AffineHeckeElement& b) {
  return h.multiply(a, b);
}

// ------------------------------------------------------------ Gelfand-Graev module

std::uint64_t GGModule::rank() const {
  std::uint64_t r = 0;
  for (const auto& b : blocks) r += b.module.dim();
  return r;
}

GGModule gg_module(const CoverSpec& cov, const TypeSpec& ty, std::uint64_t bound) {
  if (cov.kind == CoverKind::generic)
    throw InvalidArgument("the Gelfand-Graev decomposition is only established for KP and Savin covers");
  const QuotientGroup xg = x_lambda(cov, ty);
  GGModule m;
  m.lattice = lattice_spec(xg);
  for (auto& orbit : orbits(xg, bound)) {
    if (!orbit.stabilizer) throw InternalError("orbit without a Young stabilizer in a KP/Savin quotient");
    InducedSignModule block = induced_sign_module(xg.rank(), *orbit.stabilizer);
    m.blocks.push_back(GGBlock{std::move(orbit), std::move(block)});
  }
  return m;
}

std::size_t cached_hom_to_sign_dim(int k, const Composition& J, unsigned f) {
  static std::mutex mutex;
  static std::map<std::tuple<int, unsigned, Composition>, std::size_t> cache;
  const auto key = std::make_tuple(k, f, J);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const FiniteHeckeAlgebra h(k, f);
  const std::size_t dim = hom_to_sign_dim(h, induced_sign_module(k, J));
  std::lock_guard lock(mutex);
  cache.emplace(key, dim);
  return dim;
}

std::uint64_t whittaker_dim_hecke(const GGModule& module, unsigned f) {
  std::uint64_t total = 0;
  for (const auto& b : module.blocks) total += cached_hom_to_sign_dim(b.module.k, b.module.parabolic, f);
  return total;
}

std::uint64_t whittaker_dim_hecke(const CoverSpec& cov, const TypeSpec& ty, std::uint64_t bound) {
  return whittaker_dim_hecke(gg_module(cov, ty, bound), ty.f);
}

std::uint64_t whittaker_dim_hecke_at(const GGModule& module, const Rational& q, unsigned f) {
  std::map<Composition, std::size_t> local;
  std::uint64_t total = 0;
  for (const auto& b : module.blocks) {
    auto it = local.find(b.module.parabolic);
    if (it == local.end()) {
      const FiniteHeckeAlgebra h(b.module.k, f);
      it = local.emplace(b.module.parabolic, hom_to_sign_dim_at(h, b.module, q)).first;
    }
    total += it->second;
  }
  return total;
}

// ------------------------------------------------------------ expansion lemma

namespace {

// Whether c is a polynomial in q0 = q^f whose expansion in powers of q0 - 1
// has non-negative integer coefficients.
bool nonnegative_in_q0_minus_one(const RatFunc& c, unsigned f) {
  if (!c.is_polynomial()) return false;
  const auto& coeffs = c.numerator().coefficients();
  std::vector<Integer> p;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (d % f != 0) {
      if (coeffs[d] != 0) return false;
      continue;
    }
    p.push_back(coeffs[d]);
  }
  // Taylor shift p(x) -> p(x + 1) by repeated synthetic division.
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    for (std::size_t j = p.size() - 1; j > i; --j) p[j - 1] += p[j];
  }
  return std::all_of(p.begin(), p.end(), [](const Integer& x) { return x >= 0; });
}

}  // namespace

TwPhiReport check_twphi_lemma(const AffineHeckeAlgebra& h, const Permutation& w, const LatticeVec& t,
                              std::int64_t box_lo, std::int64_t box_hi) {
  TwPhiReport rep;
  LatticeVec neg(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) neg[j] = -t[j];
  AffineHeckeElement e = h.phi(neg);
  const std::vector<int> word = reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) e = h.simple_times(*it, e);

  const int lw = length(w);
  const std::int64_t ord_t = ord(t);
  const unsigned f = h.finite().q_exponent();
  for (const auto& [key, c] : e.terms()) {
    TwPhiTerm term{LatticeVec(key.first.size()), key.second, c};
    for (std::size_t j = 0; j < key.first.size(); ++j) term.t[j] = -key.first[j];
    const std::string where = "term phi_{-t'} T" + term.w.to_string() + " with coefficient " + c.to_string();
    if (length(term.w) > lw) {
      rep.length_bound = false;
      rep.violations.push_back("length bound: " + where);
    }
    if (ord(term.t) != ord_t) {
      rep.ord_preserved = false;
      rep.violations.push_back("ord: " + where);
    }
    const bool nonneg = nonnegative_in_q0_minus_one(c, f);
    if (!nonneg) {
      rep.nonnegative = false;
      rep.violations.push_back("coefficient sign: " + where);
    }
    if (std::any_of(term.t.begin(), term.t.end(), [&](std::int64_t x) { return x < box_lo || x > box_hi; })) {
      rep.support_in_box = false;
      rep.violations.push_back("box: " + where);
    }
    rep.expansion.push_back(std::move(term));
  }
  return rep;
}

}  // namespace ggm
