#include "ggm/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "ggm/cocycle.hpp"
#include "ggm/cover.hpp"
#include "ggm/error.hpp"
#include "ggm/hecke_affine.hpp"
#include "ggm/report.hpp"

namespace ggm {

namespace {

// Collects failures of one named invariant over many instances.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::string& where) {
    ++runs_;
    if (ok) return;
    if (failures_++ == 0) first_ = where;
  }

  CheckResult result() const {
    CheckResult r{name_, failures_ == 0, ""};
    std::ostringstream os;
    if (failures_ == 0)
      os << runs_ << " cases";
    else
      os << failures_ << " of " << runs_ << " cases failed, first: " << first_;
    r.detail = os.str();
    return r;
  }

 private:
  std::string name_;
  std::size_t runs_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

RatFunc random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 2), val(-2, 2);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = val(rng);
  if (c.back() == 0) c.back() = 1;
  return RatFunc(IntPoly(std::move(c)));
}

Permutation random_permutation(std::mt19937_64& rng, int k) {
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

FiniteHeckeElement random_finite(std::mt19937_64& rng, int k) {
  FiniteHeckeElement e(k);
  std::uniform_int_distribution<int> terms(1, 3);
  for (int i = terms(rng); i > 0; --i) e.add(random_permutation(rng, k), random_coefficient(rng));
  return e;
}

std::string tag(const std::string& base, int k) { return base + " k=" + std::to_string(k); }

std::string instance_name(const CoverSpec& c, const TypeSpec& t) {
  std::ostringstream os;
  os << to_string(c.kind) << "(n=" << c.n << ",c=" << c.c << ",d=" << c.d << ",r=" << t.r << ",k=" << t.k
     << ",l0=" << t.l0 << ")";
  return os.str();
}

std::string vec_string(const LatticeVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"hecke-finite", "hecke-affine", "cover", "cocycle"};
  return names;
}

// ------------------------------------------------------------ finite Hecke

std::vector<CheckResult> verify_hecke_finite(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(opt.seed);
  for (int k = 1; k <= opt.relations_max_k; ++k) {
    const FiniteHeckeAlgebra h(k, 1, opt.fault);
    const RatFunc q0 = h.q0();

    Tally quad(tag("hecke-finite/quadratic", k));
    for (int i = 1; i < k; ++i) {
      const auto ts = h.basis(Permutation::simple(k, i));
      const auto prod = h.multiply(ts + h.one(), ts - h.scalar(q0));
      quad.check(prod.is_zero(), "s_" + std::to_string(i));
    }
    out.push_back(quad.result());

    Tally braid(tag("hecke-finite/braid", k));
    for (int i = 1; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        const auto a = h.basis(Permutation::simple(k, i));
        const auto b = h.basis(Permutation::simple(k, j));
        if (j == i + 1) {
          braid.check(h.multiply(h.multiply(a, b), a) == h.multiply(h.multiply(b, a), b),
                      "s_" + std::to_string(i) + " s_" + std::to_string(j));
        } else {
          braid.check(h.multiply(a, b) == h.multiply(b, a), "s_" + std::to_string(i) + " s_" + std::to_string(j));
        }
      }
    }
    out.push_back(braid.result());

    // T_w equals the product of T_s along a reduced word; the T_w are k! distinct basis vectors.
    Tally basis(tag("hecke-finite/basis", k));
    const auto perms = all_permutations(k);
    basis.check(perms.size() == factorial(k), "size");
    for (const auto& w : perms) {
      FiniteHeckeElement e = h.one();
      for (int s : reduced_word(w)) e = h.times_simple(e, s);
      basis.check(e == h.basis(w), w.to_string());
    }
    out.push_back(basis.result());

    if (k >= 2) {
      Tally assoc(tag("hecke-finite/associativity", k));
      for (int i = 0; i < opt.finite_triples; ++i) {
        const auto a = random_finite(rng, k), b = random_finite(rng, k), c = random_finite(rng, k);
        assoc.check(h.multiply(h.multiply(a, b), c) == h.multiply(a, h.multiply(b, c)),
                    "triple " + std::to_string(i));
      }
      out.push_back(assoc.result());
    }
  }

  for (int k = 1; k <= opt.modules_max_k; ++k) {
    const FiniteHeckeAlgebra h(k, 1, opt.fault);
    Tally dims(tag("hecke-finite/induced-dimension", k));
    Tally homs(tag("hecke-finite/hom-to-sign", k));
    for (const auto& comp : compositions(k)) {
      const InducedSignModule m = induced_sign_module(k, comp);
      std::uint64_t expect = factorial(k);
      for (int p : comp.parts()) expect /= factorial(p);
      dims.check(m.dim() == expect, comp.to_string());
      homs.check(hom_to_sign_dim(h, m) == 1, comp.to_string());
    }
    out.push_back(dims.result());
    out.push_back(homs.result());
  }
  return out;
}

// ------------------------------------------------------------ affine Hecke

namespace {

std::vector<LatticeVec> window_points(const LatticeSpec& lat, std::int64_t lo, std::int64_t hi) {
  std::vector<LatticeVec> pts;
  LatticeVec t(static_cast<std::size_t>(lat.k), lo);
  while (true) {
    if (lat.contains(t)) pts.push_back(t);
    std::size_t pos = t.size();
    while (pos > 0 && t[pos - 1] == hi) t[--pos] = lo;
    if (pos == 0) break;
    ++t[pos - 1];
  }
  return pts;
}

AffineHeckeElement random_affine(std::mt19937_64& rng, const AffineHeckeAlgebra& h,
                                 const std::vector<LatticeVec>& pts) {
  AffineHeckeElement e(h.rank());
  std::uniform_int_distribution<int> terms(1, 2);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (int i = terms(rng); i > 0; --i) e.add(pts[pick(rng)], random_permutation(rng, h.rank()), random_coefficient(rng));
  return e;
}

}  // namespace

std::vector<CheckResult> verify_hecke_affine(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(opt.seed + 1);
  for (int k : opt.affine_ranks) {
    const std::vector<std::pair<CoverSpec, TypeSpec>> instances{
        {CoverSpec::kp(4, 0), TypeSpec{k, k, 1, 1}},
        {CoverSpec::kp(6, 1), TypeSpec{k, k, 1, 1}},
        {CoverSpec::savin(4), TypeSpec{k, k, 1, 1}},
        {CoverSpec::savin(6), TypeSpec{2 * k, k, 1, 1}},
    };
    for (const auto& [cov, ty] : instances) {
      const std::string name = instance_name(cov, ty);
      const DerivedParams p = derive_params(cov, ty);
      const LatticeSpec lat = lattice_spec(cov, ty);
      const AffineHeckeAlgebra h(lat, ty.f);
      const RatFunc q0m1 = h.q0() - RatFunc(1);
      const std::int64_t w = 2 * p.n0;
      const auto pts = window_points(lat, -w, w);
      const LatticeVec zero(static_cast<std::size_t>(k), 0);

      Tally mult("hecke-affine/coroot-multiplier " + name);
      mult.check(lat.coroot_multiplier == p.n0, "multiplier " + std::to_string(lat.coroot_multiplier));
      out.push_back(mult.result());

      // (phi_0 - phi_{-a}) (phi_t T_s - T_s phi_{st}) = (q0 - 1)(phi_t - phi_{st})
      Tally bern("hecke-affine/bernstein " + name);
      Tally central("hecke-affine/central " + name);
      for (const auto& t : pts) {
        for (int i = 1; i < k; ++i) {
          const auto s = Permutation::simple(k, i);
          const LatticeVec st = act(s, t);
          LatticeVec neg_a = zero;
          neg_a[static_cast<std::size_t>(i - 1)] = -lat.coroot_multiplier;
          neg_a[static_cast<std::size_t>(i)] = lat.coroot_multiplier;
          const auto lhs = h.multiply(h.phi(zero) - h.phi(neg_a),
                                      h.multiply(h.phi(t), h.T(s)) - h.multiply(h.T(s), h.phi(st)));
          auto rhs = h.phi(t) - h.phi(st);
          rhs *= q0m1;
          bern.check(lhs == rhs, "t=" + vec_string(t) + " i=" + std::to_string(i));
          if (std::adjacent_find(t.begin(), t.end(), std::not_equal_to<>()) == t.end()) {
            central.check(h.multiply(h.phi(t), h.T(s)) == h.multiply(h.T(s), h.phi(t)), "t=" + vec_string(t));
          }
        }
      }
      out.push_back(bern.result());
      out.push_back(central.result());

      Tally quad("hecke-affine/quadratic " + name);
      for (int i = 1; i < k; ++i) {
        const auto ts = h.T(Permutation::simple(k, i));
        auto q0one = h.one();
        q0one *= h.q0();
        quad.check(h.multiply(ts + h.one(), ts - q0one).is_zero(), "s_" + std::to_string(i));
      }
      out.push_back(quad.result());

      Tally lattice_mult("hecke-affine/lattice-subalgebra " + name);
      for (std::size_t a = 0; a < pts.size(); a += 7) {
        for (std::size_t b = 0; b < pts.size(); b += 11) {
          LatticeVec sum(pts[a].size());
          for (std::size_t j = 0; j < sum.size(); ++j) sum[j] = pts[a][j] + pts[b][j];
          lattice_mult.check(h.multiply(h.phi(pts[a]), h.phi(pts[b])) == h.phi(sum),
                             vec_string(pts[a]) + "*" + vec_string(pts[b]));
        }
      }
      out.push_back(lattice_mult.result());

      Tally assoc("hecke-affine/associativity " + name);
      std::vector<LatticeVec> small;
      for (const auto& t : pts) {
        if (std::all_of(t.begin(), t.end(), [&](std::int64_t x) { return x >= -p.n0 && x <= p.n0; }))
          small.push_back(t);
      }
      for (int i = 0; i < opt.affine_triples; ++i) {
        const auto a = random_affine(rng, h, small), b = random_affine(rng, h, small), c = random_affine(rng, h, small);
        assoc.check(h.multiply(h.multiply(a, b), c) == h.multiply(a, h.multiply(b, c)), "triple " + std::to_string(i));
      }
      out.push_back(assoc.result());

      // The expansion lemma: support bounds on the whole window, positivity on
      // the nondecreasing part of it.
      Tally tw_len("hecke-affine/twphi-length " + name);
      Tally tw_ord("hecke-affine/twphi-ord " + name);
      Tally tw_box("hecke-affine/twphi-box " + name);
      Tally tw_pos("hecke-affine/twphi-nonnegative " + name);
      for (const auto& perm : all_permutations(k)) {
        for (const auto& t : pts) {
          const TwPhiReport rep = check_twphi_lemma(h, perm, t, -w, w);
          const std::string where = "w=" + perm.to_string() + " t=" + vec_string(t);
          tw_len.check(rep.length_bound, where);
          tw_ord.check(rep.ord_preserved, where);
          tw_box.check(rep.support_in_box, where);
          if (std::is_sorted(t.begin(), t.end())) tw_pos.check(rep.nonnegative, where);
        }
      }
      for (const auto* tl : {&tw_len, &tw_ord, &tw_box, &tw_pos}) out.push_back(tl->result());

      Tally rank("hecke-affine/module-rank " + name);
      const GGModule m = gg_module(cov, ty);
      rank.check(m.rank() == x_lambda(cov, ty).order(), "rank " + std::to_string(m.rank()));
      out.push_back(rank.result());
    }
  }
  return out;
}

// ------------------------------------------------------------ cover

std::vector<CheckResult> verify_cover(const VerifyOptions& opt) {
  SweepSpec kp;
  kp.kinds = {CoverKind::kp};
  kp.n = parse_int_range("1.." + std::to_string(opt.sweep_max_n));
  kp.k = parse_int_range("1.." + std::to_string(opt.sweep_max_k));
  kp.r_mult = {1, 2, 3, 4};
  SweepSpec savin = kp;
  savin.kinds = {CoverKind::savin};
  savin.r_mult = {1, 2};
  std::vector<RunConfig> pts = sweep_points(kp);
  for (auto& p : sweep_points(savin)) pts.push_back(std::move(p));

  Tally order("cover/x-order"), lemma("cover/kp-lemma"), multiplier("cover/coroot-multiplier");
  Tally orbit_stab("cover/orbit-stabilizer"), closed("cover/closed-form"), reps("cover/representatives");
  Tally invariants("cover/derived-divisibility");
  for (const auto& cfg : pts) {
    const auto& cov = cfg.cover;
    const auto& ty = cfg.type;
    const std::string name = instance_name(cov, ty);
    const DerivedParams p = derive_params(cov, ty);
    invariants.check(p.n0 % p.d0 == 0 && cov.n % p.n0 == 0 && cov.n % p.d0 == 0, name);
    if (cov.kind == CoverKind::kp) lemma.check(verify_kp_lemma(cov, ty), name);

    std::optional<QuotientGroup> xg;
    try {
      xg = x_lambda(cov, ty);
    } catch (const InternalError&) {
    }
    Integer expect(1);
    for (std::int64_t i = 0; i < ty.k; ++i) expect *= static_cast<long>(p.n0);
    if (cov.kind == CoverKind::kp) expect = expect / static_cast<long>(p.n0) * static_cast<long>(p.d0);
    order.check(xg && Integer(static_cast<unsigned long>(xg->order())) == expect, name);
    if (!xg) continue;
    if (ty.k > 1) multiplier.check(xg->coroot_multiplier() == p.n0, name);

    const auto orbs = orbits(*xg);
    const std::uint64_t kfact = factorial(static_cast<int>(ty.k));
    std::uint64_t sizes = 0, indices = 0;
    bool stab_ok = true;
    for (const auto& o : orbs) {
      sizes += o.size;
      if (!o.stabilizer) {
        stab_ok = false;
        continue;
      }
      std::uint64_t w = 1;
      for (int part : o.stabilizer->parts()) w *= factorial(part);
      stab_ok = stab_ok && o.size * w == kfact;
      indices += kfact / w;
    }
    orbit_stab.check(stab_ok && sizes == xg->order() && indices == xg->order(), name);
    closed.check(whittaker_dim_closed(cov, ty) == static_cast<unsigned long>(orbs.size()), name);

    // Selected representatives meet every orbit once, with the Young
    // stabilizer of the sorted tuple as point stabilizer in X.
    std::map<std::uint64_t, std::size_t> orbit_of;
    for (std::size_t i = 0; i < orbs.size(); ++i) {
      std::vector<QuotientElem> stack{orbs[i].representative};
      orbit_of[xg->index(orbs[i].representative)] = i;
      while (!stack.empty()) {
        const QuotientElem x = stack.back();
        stack.pop_back();
        for (int s = 1; s < ty.k; ++s) {
          const QuotientElem y = xg->act_simple(s, x);
          if (orbit_of.emplace(xg->index(y), i).second) stack.push_back(y);
        }
      }
    }
    const auto sel = select_representatives(cov, ty);
    std::vector<bool> hit(orbs.size(), false);
    bool reps_ok = sel.size() == orbs.size();
    const auto perms = all_permutations(static_cast<int>(ty.k));
    for (const auto& t : sel) {
      const QuotientElem x = xg->project(t);
      const std::size_t o = orbit_of.at(xg->index(x));
      reps_ok = reps_ok && !hit[o];
      hit[o] = true;
      std::uint64_t fixers = 0, young = 1, run = 1;
      for (const auto& w : perms) fixers += xg->act(w, x) == x;
      for (std::size_t j = 1; j <= t.size(); ++j) {
        if (j < t.size() && t[j] == t[j - 1]) {
          ++run;
        } else {
          young *= factorial(static_cast<int>(run));
          run = 1;
        }
      }
      reps_ok = reps_ok && fixers == young;
    }
    reps.check(reps_ok, name);
  }

  Tally classes("cover/kp-class-test");
  for (std::int64_t n = 1; n <= opt.class_test_max_n; ++n) {
    for (std::int64_t k = 1; k <= opt.class_test_max_k; ++k) {
      for (std::int64_t c = 0; c < n; ++c) {
        const CoverSpec cov = CoverSpec::kp(n, c);
        const TypeSpec ty{k, k, 1, 1};
        const DerivedParams p = derive_params(cov, ty);
        const QuotientGroup xg = x_lambda(cov, ty);
        std::map<std::uint64_t, std::vector<LatticeVec>> by_class;
        LatticeVec t(static_cast<std::size_t>(k), 0);
        while (true) {
          by_class[xg.index(xg.project(t))].push_back(t);
          std::size_t pos = t.size();
          while (pos > 0 && t[pos - 1] == 2 * p.n0 - 1) t[--pos] = 0;
          if (pos == 0) break;
          ++t[pos - 1];
        }
        bool ok = true;
        try {
          for (const auto& [cls, members] : by_class) {
            for (const auto& a : members)
              for (const auto& b : members) kp_class_test(cov, ty, a, b);
          }
        } catch (const Error&) {
          ok = false;
        }
        classes.check(ok, instance_name(cov, ty));
      }
    }
  }

  std::vector<CheckResult> out;
  for (const auto* t : {&invariants, &order, &lemma, &multiplier, &orbit_stab, &closed, &reps, &classes})
    out.push_back(t->result());
  return out;
}

// ------------------------------------------------------------ cocycle

namespace {

FieldElem random_elem(std::mt19937_64& rng, const FieldModel& fm) {
  std::uniform_int_distribution<std::int64_t> val(-3, 3), ex(0, fm.unit_modulus() - 1);
  return {val(rng), ex(rng)};
}

TorusElem random_torus(std::mt19937_64& rng, const FieldModel& fm, std::size_t r) {
  TorusElem t(r);
  for (auto& x : t) x = random_elem(rng, fm);
  return t;
}

}  // namespace

std::vector<CheckResult> verify_cocycle(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(opt.seed + 2);
  const std::vector<std::int64_t> qs = opt.q ? std::vector<std::int64_t>{*opt.q} : std::vector<std::int64_t>{5, 7, 13};
  const std::vector<std::pair<std::int64_t, std::int64_t>> cds{{0, 1}, {1, 1}, {-1, 2}};
  for (std::int64_t q : qs) {
    std::vector<std::int64_t> ns;
    if (opt.n) {
      ns.push_back(*opt.n);
    } else {
      for (std::int64_t n = 1; n <= q - 1; ++n)
        if ((q - 1) % n == 0) ns.push_back(n);
    }
    for (std::int64_t n : ns) {
      const FieldModel fm(q, n);
      const std::string at = " q=" + std::to_string(q) + " n=" + std::to_string(n);
      std::vector<FieldElem> sample;
      for (std::int64_t a = -1; a <= 2; ++a)
        for (std::int64_t x = 0; x < fm.unit_modulus(); ++x) sample.push_back({a, x});

      Tally bimult("cocycle/bimultiplicative" + at), anti("cocycle/antisymmetric" + at);
      Tally units("cocycle/unit-trivial" + at), nondeg("cocycle/nondegenerate" + at);
      for (const auto& u : sample) {
        for (const auto& v : sample) {
          const MuN uv = hilbert(fm, u, v);
          anti.check(mu_mul(fm, uv, hilbert(fm, v, u)).exp == 0, "");
          if (u.valuation == 0 && v.valuation == 0) units.check(uv.exp == 0, "");
        }
      }
      for (const auto& u : sample) {
        for (const auto& v : sample) {
          for (std::size_t i = 0; i < sample.size(); i += 5) {
            const auto& w = sample[i];
            bimult.check(hilbert(fm, multiply(fm, u, v), w) == mu_mul(fm, hilbert(fm, u, w), hilbert(fm, v, w)) &&
                             hilbert(fm, w, multiply(fm, u, v)) ==
                                 mu_mul(fm, hilbert(fm, w, u), hilbert(fm, w, v)),
                         "");
          }
        }
      }
      nondeg.check(pairing_nondegenerate(fm), "pairing table");
      for (const auto* t : {&bimult, &anti, &units, &nondeg}) out.push_back(t->result());

      for (auto [c, d] : cds) {
        const std::string cd = at + " c=" + std::to_string(c) + " d=" + std::to_string(d);
        Tally cocycle("cocycle/2-cocycle" + cd), comm("cocycle/commutator" + cd);
        auto check_triple = [&](const TorusElem& g1, const TorusElem& g2, const TorusElem& g3) {
          const MuN lhs = mu_mul(fm, sigma_cover_torus(fm, c, d, g1, g2),
                                 sigma_cover_torus(fm, c, d, torus_multiply(fm, g1, g2), g3));
          const MuN rhs = mu_mul(fm, sigma_cover_torus(fm, c, d, g1, torus_multiply(fm, g2, g3)),
                                 sigma_cover_torus(fm, c, d, g2, g3));
          cocycle.check(lhs == rhs, "");
        };
        // Exhaustive over rank-2 tori with entries pi^a g^x, a, x in {0, 1}.
        std::vector<TorusElem> small;
        for (int m = 0; m < 16; ++m) small.push_back({{m & 1, (m >> 1) & 1}, {(m >> 2) & 1, (m >> 3) & 1}});
        for (const auto& g1 : small)
          for (const auto& g2 : small)
            for (const auto& g3 : small) check_triple(g1, g2, g3);
        std::uniform_int_distribution<std::size_t> rank(1, 4);
        for (int i = 0; i < opt.cocycle_triples; ++i) {
          const std::size_t r = rank(rng);
          const auto g1 = random_torus(rng, fm, r), g2 = random_torus(rng, fm, r), g3 = random_torus(rng, fm, r);
          check_triple(g1, g2, g3);

          const MuN c12 = commutator_torus(fm, c, d, g1, g2);
          bool ok = commutator_torus(fm, c, d, g1, g1).exp == 0 &&
                    mu_mul(fm, c12, commutator_torus(fm, c, d, g2, g1)).exp == 0 &&
                    commutator_torus(fm, c, d, torus_multiply(fm, g1, g3), g2) ==
                        mu_mul(fm, c12, commutator_torus(fm, c, d, g3, g2));
          // Only the classes modulo n-th powers matter.
          TorusElem shifted = g1;
          for (auto& x : shifted) x = multiply(fm, x, power(fm, random_elem(rng, fm), n));
          ok = ok && commutator_torus(fm, c, d, shifted, g2) == c12;
          comm.check(ok, "triple " + std::to_string(i));
        }
        out.push_back(cocycle.result());
        out.push_back(comm.result());
      }
    }
  }
  return out;
}

std::vector<CheckResult> run_verify_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "hecke-finite") return verify_hecke_finite(opt);
  if (name == "hecke-affine") return verify_hecke_affine(opt);
  if (name == "cover") return verify_cover(opt);
  if (name == "cocycle") return verify_cocycle(opt);
  throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace ggm
