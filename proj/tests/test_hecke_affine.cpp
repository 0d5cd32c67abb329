#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ggm/error.hpp"
#include "ggm/hecke_affine.hpp"

using namespace ggm;

namespace {

const CoverSpec kp40 = CoverSpec::kp(4, 0);
const TypeSpec r2k2{2, 2, 1, 1};

AffineHeckeAlgebra savin_algebra() { return AffineHeckeAlgebra(lattice_spec(CoverSpec::savin(4), r2k2)); }

}  // namespace

TEST_CASE("lattice of the Savin cover") {
  auto lat = lattice_spec(CoverSpec::savin(4), r2k2);
  CHECK(lat.coroot_multiplier == 2);
  CHECK(lat.contains({2, 0}));
  CHECK(lat.contains({-2, 4}));
  CHECK(!lat.contains({1, 1}));
  AffineHeckeAlgebra h(lat);
  CHECK_THROWS_AS(h.phi({1, 0}), InvalidArgument);
}

TEST_CASE("Bernstein relation on the Savin lattice") {
  auto h = savin_algebra();
  const Permutation s = Permutation::simple(2, 1);
  AffineHeckeElement rhs = h.bernstein_cross({0, 2}, 1);
  AffineHeckeElement corr = h.phi({2, 0});
  corr *= h.q0() - 1;
  rhs += corr;
  CHECK(h.multiply(h.phi({2, 0}), h.T(s)) == rhs);

  AffineHeckeElement part = h.phi({4, 0}) + h.phi({2, 2});
  part *= h.q0() - 1;
  CHECK(h.bernstein_lattice_part({4, 0}, 1) == part);
  CHECK(h.bernstein_lattice_part({2, 2}, 1).is_zero());
}

TEST_CASE("constant vectors commute with T_s") {
  auto h = savin_algebra();
  const Permutation s = Permutation::simple(2, 1);
  for (std::int64_t a : {-4, -2, 0, 2, 6}) {
    LatticeVec t{a, a};
    CHECK(h.multiply(h.phi(t), h.T(s)) == h.multiply(h.T(s), h.phi(t)));
  }
}

TEST_CASE("lattice subalgebra and quadratic relation") {
  auto h = savin_algebra();
  CHECK(h.multiply(h.phi({2, 0}), h.phi({-4, 2})) == h.phi({-2, 2}));
  const Permutation s = Permutation::simple(2, 1);
  AffineHeckeElement a = h.T(s) + h.one();
  AffineHeckeElement b = h.T(s);
  AffineHeckeElement q0 = h.one();
  q0 *= h.q0();
  b -= q0;
  CHECK(h.multiply(a, b).is_zero());
}

TEST_CASE("associativity on random triples") {
  for (const auto& [cov, ty] : {std::pair{kp40, TypeSpec{3, 3, 1, 1}}, std::pair{CoverSpec::savin(4), r2k2}}) {
    AffineHeckeAlgebra h(lattice_spec(cov, ty));
    const int k = h.rank();
    const std::int64_t m = h.lattice().coroot_multiplier;
    auto perms = all_permutations(k);
    std::mt19937_64 rng(0x5eed);
    auto random_element = [&] {
      AffineHeckeElement a(k);
      for (int j = 0; j < 2; ++j) {
        LatticeVec t(static_cast<std::size_t>(k));
        for (auto& x : t) x = m * (static_cast<std::int64_t>(rng() % 3) - 1);
        a.add(t, perms[rng() % perms.size()], RatFunc(static_cast<long>(rng() % 5) - 2));
      }
      return a;
    };
    for (int it = 0; it < 20; ++it) {
      auto a = random_element(), b = random_element(), c = random_element();
      CHECK(h.multiply(h.multiply(a, b), c) == h.multiply(a, h.multiply(b, c)));
    }
  }
}

TEST_CASE("T_w phi expansion") {
  auto h = savin_algebra();
  const Permutation e = Permutation::identity(2), s = Permutation::simple(2, 1);

  auto id = check_twphi_lemma(h, e, {2, 0}, -4, 4);
  REQUIRE(id.expansion.size() == 1);
  CHECK(id.expansion[0].t == LatticeVec{2, 0});
  CHECK(id.expansion[0].w == e);
  CHECK(id.expansion[0].coefficient == RatFunc(1));

  auto flat = check_twphi_lemma(h, s, {2, 2}, -4, 4);
  REQUIRE(flat.expansion.size() == 1);
  CHECK(flat.expansion[0].t == LatticeVec{2, 2});
  CHECK(flat.expansion[0].w == s);

  auto rep = check_twphi_lemma(h, s, {0, 2}, 0, 2);
  CHECK(rep.ok());
  bool saw_e = false, saw_s = false;
  for (const auto& term : rep.expansion) {
    CHECK(ord(term.t) == 2);
    CHECK((term.coefficient == RatFunc(1) || term.coefficient == h.q0() - 1));
    saw_e = saw_e || term.w == e;
    saw_s = saw_s || term.w == s;
  }
  CHECK(saw_e);
  CHECK(saw_s);

  // t = (2, 0) produces the coefficient -(q0 - 1).
  auto other = check_twphi_lemma(h, s, {2, 0}, 0, 2);
  CHECK(other.length_bound);
  CHECK(other.ord_preserved);
  CHECK(!other.nonnegative);
}

TEST_CASE("Gelfand-Graev module") {
  auto m = gg_module(kp40, r2k2);
  CHECK(m.blocks.size() == 10);
  CHECK(m.rank() == 16);

  auto sv = gg_module(CoverSpec::savin(4), r2k2);
  CHECK(sv.rank() == 4);
  std::vector<std::size_t> dims;
  for (const auto& b : sv.blocks) dims.push_back(b.module.dim());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{1, 1, 2});

  auto triv = gg_module(CoverSpec::kp(1, 0), TypeSpec{4, 4, 1, 1});
  REQUIRE(triv.blocks.size() == 1);
  CHECK(triv.blocks[0].module.dim() == 1);
  CHECK(triv.rank() == 1);

  CHECK_THROWS_AS(gg_module(CoverSpec::generic(4, 1, 3), r2k2), InvalidArgument);
}

TEST_CASE("Hecke Hom dimension") {
  CHECK(whittaker_dim_hecke(kp40, r2k2) == 10);
  CHECK(whittaker_dim_hecke(kp40, TypeSpec{3, 3, 1, 1}) == 10);
  CHECK(whittaker_dim_hecke(CoverSpec::savin(4), r2k2) == 3);
  for (std::int64_t k = 1; k <= 6; ++k) CHECK(whittaker_dim_hecke(CoverSpec::kp(1, 0), TypeSpec{k, k, 1, 1}) == 1);
  CHECK(whittaker_dim_hecke_at(gg_module(kp40, r2k2), 9) == 10);
}
