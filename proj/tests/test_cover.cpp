#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "ggm/bruteforce.hpp"
#include "ggm/cover.hpp"
#include "ggm/error.hpp"

using namespace ggm;

namespace {

const CoverSpec kp40 = CoverSpec::kp(4, 0);
const TypeSpec r2k2{2, 2, 1, 1};
const TypeSpec r3k3{3, 3, 1, 1};

std::vector<LatticeVec> orbit_elements(const QuotientGroup& xg, const OrbitRecord& o) {
  std::vector<LatticeVec> out;
  for (std::uint64_t i = 0; i < xg.order(); ++i) {
    auto x = xg.element(i);
    for (const auto& w : all_permutations(xg.rank()))
      if (xg.act(w, x) == o.representative) {
        out.push_back(xg.lift(x));
        break;
      }
  }
  return out;
}

}  // namespace

TEST_CASE("derived parameters") {
  auto p = derive_params(kp40, r2k2);
  CHECK(p.r0 == 1);
  CHECK(p.n0 == 4);
  CHECK(p.d0 == 4);
  for (std::int64_t r : {2, 4, 6}) CHECK(derive_params(CoverSpec::savin(4), TypeSpec{r, 2, 1, 1}).n0 == 2);
  auto one = derive_params(CoverSpec::kp(1, 0), TypeSpec{5, 5, 1, 1});
  CHECK(one.n0 == 1);
  CHECK(one.d0 == 1);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(TypeSpec({3, 2, 1, 1}).validate(kp40), InvalidArgument);
  CHECK_THROWS_AS(TypeSpec({2, 2, 3, 1}).validate(kp40), InvalidArgument);
  CHECK_THROWS_AS(CoverSpec::kp(0, 0).validate(), InvalidArgument);
  CHECK_THROWS_AS((CoverSpec{4, 0, 2, CoverKind::kp}).validate(), InvalidArgument);
  CHECK(parse_cover_kind("Savin") == CoverKind::savin);
  CHECK_THROWS_AS(parse_cover_kind("metaplectic"), InvalidArgument);
}

TEST_CASE("membership in T(b, rho)") {
  auto p = derive_params(kp40, r3k3);
  CHECK(in_T_brho(kp40, r3k3, {p.n0, 0, 0}));
  CHECK(in_T_brho(kp40, r3k3, {p.d0, p.d0, p.d0}));
  CHECK(!in_T_brho(kp40, r2k2, {1, 0}));
  auto ps = derive_params(CoverSpec::savin(4), r2k2);
  CHECK(in_T_brho(CoverSpec::savin(4), r2k2, {ps.n0, 0}));
  CHECK(!in_T_brho(CoverSpec::savin(4), r2k2, {1, 0}));
}

TEST_CASE("order of X") {
  CHECK(x_lambda(kp40, r2k2).order() == 16);
  CHECK(x_lambda(kp40, r3k3).order() == 32);
  CHECK(x_lambda(CoverSpec::savin(4), r2k2).order() == 4);
  CHECK(x_lambda(CoverSpec::kp(1, 0), TypeSpec{4, 4, 1, 1}).order() == 1);
  CHECK(x_lambda(CoverSpec::savin(4), r2k2).invariant_factors() == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("Savin orbits and stabilizers") {
  auto xg = x_lambda(CoverSpec::savin(4), r2k2);
  auto os = orbits(xg);
  REQUIRE(os.size() == 3);
  std::vector<std::vector<LatticeVec>> members;
  for (const auto& o : os) {
    auto m = orbit_elements(xg, o);
    for (auto& t : m)
      for (auto& x : t) x = ((x % 2) + 2) % 2;
    std::sort(m.begin(), m.end());
    members.push_back(m);
    REQUIRE(o.stabilizer.has_value());
    CHECK(o.size * parabolic_order(2, young_subgroup(*o.stabilizer)) == 2);
  }
  std::sort(members.begin(), members.end());
  CHECK(members == std::vector<std::vector<LatticeVec>>{{{0, 0}}, {{0, 1}, {1, 0}}, {{1, 1}}});
  int twos = 0;
  for (const auto& o : os) twos += *o.stabilizer == Composition({2});
  CHECK(twos == 2);
}

TEST_CASE("orbit counts") {
  CHECK(orbits(x_lambda(kp40, r2k2)).size() == 10);
  CHECK(orbits(x_lambda(kp40, r3k3)).size() == 10);
  for (std::int64_t k = 1; k <= 5; ++k) {
    auto os = orbits(x_lambda(CoverSpec::kp(1, 0), TypeSpec{k, k, 1, 1}));
    REQUIRE(os.size() == 1);
    CHECK(*os[0].stabilizer == Composition({static_cast<int>(k)}));
  }
  CHECK_THROWS_AS(orbits(x_lambda(kp40, r2k2), 10), BoundExceeded);
}

TEST_CASE("closed form") {
  CHECK(whittaker_dim_closed(kp40, r2k2) == 10);
  CHECK(whittaker_dim_closed(kp40, r3k3) == 10);
  CHECK(whittaker_dim_closed(CoverSpec::savin(4), r2k2) == 3);
  CHECK(whittaker_dim_closed(CoverSpec::kp(1, 0), TypeSpec{6, 6, 1, 1}) == 1);
  CHECK_THROWS_AS(whittaker_dim_closed(CoverSpec::generic(4, 1, 3), r2k2), InvalidArgument);
}

TEST_CASE("gcd lemma") {
  auto p = derive_params(kp40, r3k3);
  CHECK(p.n0 / p.d0 == 2);
  CHECK(verify_kp_lemma(kp40, r3k3));
  CHECK(verify_kp_lemma(kp40, r2k2));
  for (std::int64_t n = 1; n <= 10; ++n)
    for (std::int64_t c = 0; c < n; ++c)
      for (std::int64_t k = 1; k <= 4; ++k)
        for (std::int64_t m = 1; m <= 4; ++m)
          for (std::int64_t l0 = 1; l0 <= n; ++l0)
            if (n % l0 == 0) CHECK(verify_kp_lemma(CoverSpec::kp(n, c), TypeSpec{m * k, k, l0, 1}));
}

TEST_CASE("ord") {
  CHECK(ord({0, 0, 0}) == 0);
  CHECK(ord({1, 2, 3}) == 6);
  std::mt19937_64 rng(9);
  auto perms = all_permutations(4);
  for (int it = 0; it < 100; ++it) {
    LatticeVec t{static_cast<std::int64_t>(rng() % 19) - 9, static_cast<std::int64_t>(rng() % 19) - 9,
                 static_cast<std::int64_t>(rng() % 19) - 9, static_cast<std::int64_t>(rng() % 19) - 9};
    CHECK(ord(act(perms[rng() % perms.size()], t)) == ord(t));
  }
}

TEST_CASE("representatives") {
  CHECK(select_representatives(CoverSpec::savin(4), r2k2) == std::vector<LatticeVec>{{0, 0}, {0, 1}, {1, 1}});
  auto reps = select_representatives(kp40, r3k3);
  CHECK(reps.size() == 10);
  for (const auto& t : reps) CHECK(ord(t) % 4 < 2);
  CHECK(select_representatives(CoverSpec::kp(1, 0), r3k3) == std::vector<LatticeVec>{{0, 0, 0}});
}

TEST_CASE("class test") {
  CHECK(kp_class_test(kp40, r3k3, {1, 2, 3}, {1, 2, 3}));
  auto p = derive_params(kp40, r3k3);
  LatticeVec t{1, 0, 2};
  LatticeVec shifted{1 + p.d0, p.d0, 2 + p.d0};
  CHECK(kp_class_test(kp40, r3k3, t, shifted) == ((3 * p.d0) % p.n0 == 0));
  CHECK_THROWS_AS(kp_class_test(kp40, r2k2, {1, 0}, {0, 0}), InvalidArgument);
  for (std::int64_t n = 1; n <= 4; ++n)
    for (std::int64_t c = 0; c < n; ++c)
      for (std::int64_t k = 2; k <= 3; ++k) {
        CoverSpec cov = CoverSpec::kp(n, c);
        TypeSpec ty{k, k, 1, 1};
        auto xg = x_lambda(cov, ty);
        const std::int64_t n0 = derive_params(cov, ty).n0;
        std::map<QuotientElem, std::vector<LatticeVec>> classes;
        LatticeVec t(static_cast<std::size_t>(k), 0);
        for (;;) {
          classes[xg.project(t)].push_back(t);
          std::size_t i = 0;
          while (i < t.size() && ++t[i] == 2 * n0) t[i++] = 0;
          if (i == t.size()) break;
        }
        for (const auto& [x, members] : classes)
          for (const auto& a : members)
            for (const auto& b : members) {
              bool in_t0 = true;
              for (std::size_t i = 0; i < a.size(); ++i) in_t0 = in_t0 && (a[i] - b[i]) % n0 == 0;
              CHECK(kp_class_test(cov, ty, a, b) == in_t0);
            }
      }
}

TEST_CASE("brute-force count agrees on worked instances") {
  auto b = bruteforce_count(kp40, r2k2);
  REQUIRE(b);
  CHECK(b->x_order == 16);
  CHECK(b->orbit_count == 10);
  auto s = bruteforce_count(CoverSpec::savin(4), r2k2);
  REQUIRE(s);
  CHECK(s->orbit_count == 3);
  CHECK(!bruteforce_count(CoverSpec::kp(10, 0), TypeSpec{4, 4, 1, 1}, 100));
}

TEST_CASE("frozen oracle table") {
  std::ifstream in(GGM_ORACLE_DIR "/oracle_sweep.csv");
  REQUIRE(in);
  std::string line;
  std::getline(in, line);
  CHECK(line == "kind,n,c,d,r,k,l0,r0,n0,d0,x_order,orbit_count");
  std::size_t rows = 0, mismatches = 0;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string kind, field;
    std::getline(ss, kind, ',');
    std::vector<std::int64_t> v;
    while (std::getline(ss, field, ',')) v.push_back(std::stoll(field));
    REQUIRE(v.size() == 11);
    CoverSpec cov{v[0], v[1], v[2], parse_cover_kind(kind)};
    TypeSpec ty{v[3], v[4], v[5], 1};
    auto p = derive_params(cov, ty);
    auto xg = x_lambda(cov, ty);
    bool ok = p.r0 == v[6] && p.n0 == v[7] && p.d0 == v[8] && xg.order() == static_cast<std::uint64_t>(v[9]) &&
              orbits(xg).size() == static_cast<std::size_t>(v[10]);
    if (!ok) {
      ++mismatches;
      MESSAGE("mismatch: " << line);
    }
    ++rows;
  }
  CHECK(rows == 2936);
  CHECK(mismatches == 0);
}
