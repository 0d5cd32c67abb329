#include "ggm/cover.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <numeric>

#include "ggm/error.hpp"

namespace ggm {

std::string to_string(CoverKind kind) {
  switch (kind) {
    case CoverKind::kp:
      return "kp";
    case CoverKind::savin:
      return "savin";
    case CoverKind::generic:
      return "generic";
  }
  return "?";
}

CoverKind parse_cover_kind(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (t == "kp") return CoverKind::kp;
  if (t == "savin") return CoverKind::savin;
  if (t == "generic") return CoverKind::generic;
  throw InvalidArgument("unknown cover kind '" + s + "' (expected kp, savin or generic)");
}

void CoverSpec::validate() const {
  if (n < 1) throw InvalidArgument("cover degree n must be >= 1");
  if (kind == CoverKind::kp && d != 1) throw InvalidArgument("Kazhdan-Patterson covers have d = 1");
  if (kind == CoverKind::savin && (c != -1 || d != 2)) throw InvalidArgument("the Savin cover has c = -1, d = 2");
}

void TypeSpec::validate(const CoverSpec& cov) const {
  if (r < 1 || k < 1 || l0 < 1) throw InvalidArgument("r, k and l0 must be positive");
  if (f < 1) throw InvalidArgument("f must be positive");
  if (r % k != 0) throw InvalidArgument("k = " + std::to_string(k) + " does not divide r = " + std::to_string(r));
  if (cov.n % l0 != 0)
    throw InvalidArgument("l0 = " + std::to_string(l0) + " does not divide n = " + std::to_string(cov.n));
}

DerivedParams derive_params(const CoverSpec& cov, const TypeSpec& ty) {
  cov.validate();
  ty.validate(cov);
  DerivedParams p;
  p.r0 = ty.r / ty.k;
  const std::int64_t g0 = std::gcd(std::gcd(cov.n, (2 * cov.c + cov.d) * p.r0 * ty.l0), cov.d * ty.l0);
  p.n0 = cov.n / g0;
  const std::int64_t g1 = std::gcd(cov.n, ty.l0 * (2 * cov.c * ty.r + cov.d * ty.r - cov.d));
  p.d0 = cov.n / g1;
  return p;
}

IntMatrix congruence_matrix(const CoverSpec& cov, const TypeSpec& ty) {
  const DerivedParams p = derive_params(cov, ty);
  const auto k = static_cast<std::size_t>(ty.k);
  IntMatrix a(k, IntRow(k, Integer(0)));
  const Integer common = Integer(ty.l0) * Integer(2 * cov.c + cov.d) * Integer(p.r0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = common;
    a[i][i] -= Integer(ty.l0) * Integer(cov.d);
  }
  return a;
}

bool in_T_brho(const CoverSpec& cov, const TypeSpec& ty, const LatticeVec& t) {
  if (static_cast<std::int64_t>(t.size()) != ty.k) throw InvalidArgument("torus element has the wrong length");
  const IntMatrix a = congruence_matrix(cov, ty);
  const Integer n(cov.n);
  for (const auto& row : a) {
    Integer acc(0);
    for (std::size_t j = 0; j < t.size(); ++j) acc += row[j] * Integer(static_cast<long>(t[j]));
    if (!mpz_divisible_p(acc.get_mpz_t(), n.get_mpz_t())) return false;
  }
  return true;
}

std::int64_t ord(const LatticeVec& t) { return std::accumulate(t.begin(), t.end(), std::int64_t{0}); }

namespace {

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw InvalidArgument("value exceeds 64-bit range: " + x.get_str());
  return x.get_si();
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

QuotientGroup::QuotientGroup(int k, const IntMatrix& relation_rows) : k_(k) {
  if (k < 1) throw InvalidArgument("rank must be positive");
  for (const auto& row : relation_rows) {
    if (static_cast<int>(row.size()) != k) throw InvalidArgument("relation row of the wrong length");
  }
  hnf_ = hermite_normal_form(relation_rows);
  if (static_cast<int>(hnf_.size()) != k) throw InvalidArgument("relation lattice is not of full rank");

  SmithForm snf = smith_normal_form(hnf_);
  v_ = std::move(snf.v);
  v_inverse_ = std::move(snf.v_inverse);
  Integer order(1);
  const auto diag = snf.diagonal();
  for (std::size_t j = 0; j < diag.size(); ++j) {
    if (diag[j] == 1) continue;
    factors_.push_back(to_int64(diag[j]));
    factor_columns_.push_back(j);
    order *= diag[j];
  }
  if (order > Integer(std::numeric_limits<std::int64_t>::max()))
    throw InvalidArgument("quotient group order " + order.get_str() + " is too large");
  order_ = static_cast<std::uint64_t>(to_int64(order));

  for (const auto& row : hnf_) {
    LatticeVec t(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) t[j] = to_int64(row[j]);
    for (int i = 1; i < k_; ++i) {
      if (!contains(ggm::act(Permutation::simple(k_, i), t)))
        throw InvalidArgument("relation lattice is not stable under S_k");
    }
  }

  simple_images_.resize(static_cast<std::size_t>(std::max(0, k_ - 1)));
  for (int i = 1; i < k_; ++i) {
    const Permutation s = Permutation::simple(k_, i);
    for (std::size_t g = 0; g < factors_.size(); ++g) {
      QuotientElem unit(factors_.size(), 0);
      unit[g] = 1;
      simple_images_[static_cast<std::size_t>(i - 1)].push_back(act(s, unit));
    }
  }
}

QuotientElem QuotientGroup::project(const LatticeVec& t) const {
  if (static_cast<int>(t.size()) != k_) throw InvalidArgument("torus element has the wrong length");
  QuotientElem x(factors_.size());
  for (std::size_t g = 0; g < factors_.size(); ++g) {
    const std::size_t col = factor_columns_[g];
    Integer acc(0);
    for (int i = 0; i < k_; ++i) acc += Integer(static_cast<long>(t[static_cast<std::size_t>(i)])) * v_[static_cast<std::size_t>(i)][col];
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(factors_[g]));
    x[g] = r.get_si();
  }
  return x;
}

LatticeVec QuotientGroup::lift(const QuotientElem& x) const {
  if (x.size() != factors_.size()) throw InvalidArgument("quotient element has the wrong length");
  LatticeVec t(static_cast<std::size_t>(k_), 0);
  for (int j = 0; j < k_; ++j) {
    Integer acc(0);
    for (std::size_t g = 0; g < factors_.size(); ++g) acc += Integer(static_cast<long>(x[g])) * v_inverse_[factor_columns_[g]][static_cast<std::size_t>(j)];
    t[static_cast<std::size_t>(j)] = to_int64(acc);
  }
  return t;
}

bool QuotientGroup::contains(const LatticeVec& t) const {
  if (static_cast<int>(t.size()) != k_) throw InvalidArgument("torus element has the wrong length");
  IntRow v(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) v[j] = Integer(static_cast<long>(t[j]));
  for (const auto& x : reduce_mod_hnf(hnf_, std::move(v))) {
    if (x != 0) return false;
  }
  return true;
}

QuotientElem QuotientGroup::act(const Permutation& w, const QuotientElem& x) const {
  return project(ggm::act(w, lift(x)));
}

QuotientElem QuotientGroup::act_simple(int i, const QuotientElem& x) const {
  if (i < 1 || i >= k_) throw InvalidArgument("simple reflection index out of range");
  const auto& images = simple_images_[static_cast<std::size_t>(i - 1)];
  QuotientElem out(factors_.size(), 0);
  for (std::size_t g = 0; g < factors_.size(); ++g) {
    if (x[g] == 0) continue;
    for (std::size_t h = 0; h < factors_.size(); ++h) {
      // images are reduced, so the products stay far below 2^63 for |X| <= 2^31.
      out[h] = mod_floor(out[h] + x[g] * images[g][h], factors_[h]);
    }
  }
  return out;
}

std::uint64_t QuotientGroup::index(const QuotientElem& x) const {
  std::uint64_t idx = 0;
  for (std::size_t g = 0; g < factors_.size(); ++g) idx = idx * static_cast<std::uint64_t>(factors_[g]) + static_cast<std::uint64_t>(x[g]);
  return idx;
}

QuotientElem QuotientGroup::element(std::uint64_t idx) const {
  QuotientElem x(factors_.size());
  for (std::size_t g = factors_.size(); g-- > 0;) {
    const auto e = static_cast<std::uint64_t>(factors_[g]);
    x[g] = static_cast<std::int64_t>(idx % e);
    idx /= e;
  }
  return x;
}

std::int64_t QuotientGroup::coroot_multiplier() const {
  std::int64_t result = 1;
  for (int i = 1; i < k_; ++i) {
    LatticeVec a(static_cast<std::size_t>(k_), 0);
    a[static_cast<std::size_t>(i - 1)] = 1;
    a[static_cast<std::size_t>(i)] = -1;
    const QuotientElem x = project(a);
    std::int64_t m = 1;
    for (std::size_t g = 0; g < factors_.size(); ++g) {
      const std::int64_t part = factors_[g] / std::gcd(factors_[g], x[g]);
      m = std::lcm(m, part);
    }
    if (i == 1) {
      result = m;
    } else if (m != result) {
      throw InternalError("coroot multiplier depends on the simple reflection");
    }
  }
  return result;
}

QuotientGroup x_lambda(const CoverSpec& cov, const TypeSpec& ty) {
  const DerivedParams p = derive_params(cov, ty);
  const int k = static_cast<int>(ty.k);
  // A s = 0 (mod n)  <=>  D y = 0 (mod n) with s = V y and U A V = D.
  const SmithForm snf = smith_normal_form(congruence_matrix(cov, ty));
  const auto diag = snf.diagonal();
  const Integer n(cov.n);
  IntMatrix rows;
  for (int j = 0; j < k; ++j) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), diag[static_cast<std::size_t>(j)].get_mpz_t());
    const Integer m = n / g;
    IntRow row(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) row[static_cast<std::size_t>(i)] = m * snf.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    rows.push_back(std::move(row));
  }
  QuotientGroup xg(k, rows);

  auto ipow = [](std::int64_t b, std::int64_t e) {
    Integer r(1);
    for (std::int64_t i = 0; i < e; ++i) r *= Integer(static_cast<long>(b));
    return r;
  };
  const Integer order(static_cast<unsigned long>(xg.order()));
  if (cov.kind == CoverKind::kp) {
    const Integer expect = ipow(p.n0, ty.k - 1) * Integer(static_cast<long>(p.d0));
    if (order != expect)
      throw InternalError("|X| = " + order.get_str() + " but n0^(k-1) d0 = " + expect.get_str());
  } else if (cov.kind == CoverKind::savin) {
    const Integer expect = ipow(p.n0, ty.k);
    if (order != expect) throw InternalError("|X| = " + order.get_str() + " but n0^k = " + expect.get_str());
  }
  return xg;
}

std::vector<OrbitRecord> orbits(const QuotientGroup& xg, std::uint64_t bound) {
  if (xg.order() > bound)
    throw BoundExceeded("|X| = " + std::to_string(xg.order()) + " exceeds the enumeration bound " + std::to_string(bound));
  const int k = xg.rank();
  const std::uint64_t group_order = factorial(k);
  std::vector<bool> seen(xg.order(), false);
  std::vector<OrbitRecord> out;
  std::vector<std::uint64_t> members;
  for (std::uint64_t start = 0; start < xg.order(); ++start) {
    if (seen[start]) continue;
    members.clear();
    members.push_back(start);
    seen[start] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const QuotientElem x = xg.element(members[head]);
      for (int i = 1; i < k; ++i) {
        const std::uint64_t y = xg.index(xg.act_simple(i, x));
        if (!seen[y]) {
          seen[y] = true;
          members.push_back(y);
        }
      }
    }
    OrbitRecord rec;
    rec.representative = xg.element(start);
    rec.size = members.size();
    if (group_order % rec.size != 0) throw InternalError("orbit size does not divide k!");
    const std::uint64_t stab_order = group_order / rec.size;
    std::sort(members.begin(), members.end());
    for (std::uint64_t m : members) {
      const QuotientElem x = xg.element(m);
      SimpleSet J;
      for (int i = 1; i < k; ++i) {
        if (xg.act_simple(i, x) == x) J.insert(i);
      }
      if (parabolic_order(k, J) == stab_order) {
        rec.stabilizer = composition_of(k, J);
        rec.stabilized_element = x;
        break;
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

Integer whittaker_dim_closed(const CoverSpec& cov, const TypeSpec& ty) {
  if (cov.kind == CoverKind::generic)
    throw InvalidArgument("no closed-form Whittaker dimension is known for generic covers");
  const DerivedParams p = derive_params(cov, ty);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(ty.k + p.n0 - 1), static_cast<unsigned long>(ty.k));
  if (cov.kind == CoverKind::savin) return b;
  Integer num = b * Integer(static_cast<long>(p.d0));
  const Integer den(static_cast<long>(p.n0));
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw InternalError("closed-form Whittaker dimension is not an integer");
  return num / den;
}

bool verify_kp_lemma(const CoverSpec& cov, const TypeSpec& ty) {
  const DerivedParams p = derive_params(cov, ty);
  if (p.n0 % p.d0 != 0) return false;
  const std::int64_t ratio = p.n0 / p.d0;
  const std::int64_t rhs = std::gcd(cov.n / ty.l0, 2 * cov.c * ty.r + ty.r - 1);
  return ratio == rhs && std::gcd(ratio, ty.k) == 1;
}

std::vector<LatticeVec> select_representatives(const CoverSpec& cov, const TypeSpec& ty) {
  if (cov.kind == CoverKind::generic) throw InvalidArgument("representative selection needs a KP or Savin cover");
  const DerivedParams p = derive_params(cov, ty);
  const auto k = static_cast<std::size_t>(ty.k);
  std::vector<LatticeVec> out;
  LatticeVec cur(k, 0);
  // Odometer over nondecreasing tuples.
  while (true) {
    if (cov.kind == CoverKind::savin || mod_floor(ord(cur), p.n0) < p.d0) out.push_back(cur);
    std::size_t pos = k;
    while (pos > 0 && cur[pos - 1] == p.n0 - 1) --pos;
    if (pos == 0) break;
    const std::int64_t v = cur[pos - 1] + 1;
    for (std::size_t j = pos - 1; j < k; ++j) cur[j] = v;
  }
  return out;
}

bool kp_class_test(const CoverSpec& cov, const TypeSpec& ty, const LatticeVec& t1, const LatticeVec& t2) {
  if (cov.kind != CoverKind::kp) throw InvalidArgument("the ord class test applies to Kazhdan-Patterson covers");
  if (t1.size() != t2.size()) throw InvalidArgument("torus elements of different lengths");
  LatticeVec diff(t1.size());
  for (std::size_t i = 0; i < t1.size(); ++i) diff[i] = t1[i] - t2[i];
  if (!in_T_brho(cov, ty, diff)) throw InvalidArgument("t1 and t2 are not equivalent modulo T(b, rho)");
  const DerivedParams p = derive_params(cov, ty);
  const bool in_t0 = std::all_of(diff.begin(), diff.end(), [&](std::int64_t x) { return x % p.n0 == 0; });
  const bool ord_congruent = mod_floor(ord(t1) - ord(t2), p.n0) == 0;
  if (in_t0 != ord_congruent) throw InternalError("T_0 membership disagrees with the ord congruence");
  return in_t0;
}

}  // namespace ggm
