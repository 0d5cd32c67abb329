#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ggm/cocycle.hpp"
#include "ggm/error.hpp"

using namespace ggm;

namespace {

FieldElem random_elem(std::mt19937_64& rng, const FieldModel& fm) {
  return {static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(fm.unit_modulus()))};
}

TorusElem random_torus(std::mt19937_64& rng, const FieldModel& fm, int r) {
  TorusElem t;
  for (int i = 0; i < r; ++i) t.push_back(random_elem(rng, fm));
  return t;
}

const FieldElem one{0, 0};
const FieldElem pi = uniformizer();

}  // namespace

TEST_CASE("field model validation") {
  CHECK_THROWS_AS(FieldModel(6, 1), InvalidArgument);
  CHECK_THROWS_AS(FieldModel(5, 3), InvalidArgument);
  CHECK_NOTHROW(FieldModel(9, 8));
  CHECK_NOTHROW(FieldModel(13, 4));
}

TEST_CASE("Hilbert symbol examples") {
  FieldModel fm(5, 4);
  CHECK(hilbert(fm, {0, 1}, {0, 3}) == MuN{0});
  MuN pp = hilbert(fm, pi, pi);
  CHECK(pp == MuN{2});
  CHECK(mu_order(fm, pp) == 2);
}

TEST_CASE("Hilbert symbol axioms") {
  std::mt19937_64 rng(41);
  for (auto [q, n] : {std::pair{5, 4}, std::pair{7, 6}, std::pair{13, 12}, std::pair{9, 4}}) {
    FieldModel fm(q, n);
    for (int it = 0; it < 200; ++it) {
      FieldElem a = random_elem(rng, fm), b = random_elem(rng, fm), c = random_elem(rng, fm);
      CHECK(mu_mul(fm, hilbert(fm, a, b), hilbert(fm, b, a)) == MuN{0});
      CHECK(hilbert(fm, multiply(fm, a, b), c) == mu_mul(fm, hilbert(fm, a, c), hilbert(fm, b, c)));
      CHECK(hilbert(fm, a, multiply(fm, b, c)) == mu_mul(fm, hilbert(fm, a, b), hilbert(fm, a, c)));
      CHECK(hilbert(fm, {0, a.unit_exp}, {0, b.unit_exp}) == MuN{0});
      CHECK(hilbert(fm, a, power(fm, b, n)) == MuN{0});
    }
    CHECK(pairing_nondegenerate(fm));
  }
}

TEST_CASE("pairing table for q = 13, n = 4") {
  FieldModel fm(13, 4);
  auto table = pairing_table(fm);
  REQUIRE(table.size() == 16);
  for (const auto& row : table) CHECK(row.size() == 16);
  CHECK(table[0][5] == 0);
  CHECK(pairing_nondegenerate(fm));
}

TEST_CASE("determinant cocycle") {
  FieldModel fm(5, 4);
  CHECK(sigma_det_torus(fm, {{0, 1}, {0, 2}}, {{0, 3}, {0, 1}}) == MuN{0});
  CHECK(sigma_det_torus(fm, {pi}, {pi}) == hilbert(fm, pi, pi));
  CHECK_THROWS_AS(sigma_det_torus(fm, {pi}, {pi, one}), InvalidArgument);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 100; ++it) {
    auto a = random_torus(rng, fm, 3), b = random_torus(rng, fm, 3), c = random_torus(rng, fm, 3);
    CHECK(sigma_det_torus(fm, torus_multiply(fm, a, b), c) ==
          mu_mul(fm, sigma_det_torus(fm, a, c), sigma_det_torus(fm, b, c)));
  }
}

TEST_CASE("Kazhdan-Patterson cocycle") {
  FieldModel fm(5, 4);
  CHECK(sigma_kp_torus(fm, {pi}, {pi}) == MuN{0});
  CHECK(sigma_kp_torus(fm, {pi, one}, {one, pi}) == MuN{2});
  CHECK(sigma_kp_torus(fm, {{0, 1}, {0, 3}}, {{0, 2}, {0, 2}}) == MuN{0});
}

TEST_CASE("cover cocycles") {
  std::mt19937_64 rng(0x5eed);
  for (auto [q, n] : {std::pair{5, 4}, std::pair{7, 3}, std::pair{13, 6}}) {
    FieldModel fm(q, n);
    for (int it = 0; it < 50; ++it) {
      auto a = random_torus(rng, fm, 3), b = random_torus(rng, fm, 3);
      CHECK(sigma_cover_torus(fm, 0, 0, a, b) == MuN{0});
    }
    TorusElem u1{{0, 1}, {0, 2}}, u2{{0, 3}, {0, 1}};
    CHECK(sigma_cover_torus(fm, -1, 2, u1, u2) == MuN{0});
    for (auto [c, d] : {std::pair{0, 1}, std::pair{1, 1}, std::pair{-1, 2}}) {
      for (int it = 0; it < 200; ++it) {
        auto g1 = random_torus(rng, fm, 3), g2 = random_torus(rng, fm, 3), g3 = random_torus(rng, fm, 3);
        MuN lhs = mu_mul(fm, sigma_cover_torus(fm, c, d, g1, g2),
                         sigma_cover_torus(fm, c, d, torus_multiply(fm, g1, g2), g3));
        MuN rhs = mu_mul(fm, sigma_cover_torus(fm, c, d, g1, torus_multiply(fm, g2, g3)),
                         sigma_cover_torus(fm, c, d, g2, g3));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("commutator") {
  std::mt19937_64 rng(3);
  FieldModel fm(13, 4);
  for (auto [c, d] : {std::pair{0, 1}, std::pair{1, 1}, std::pair{-1, 2}}) {
    for (int it = 0; it < 100; ++it) {
      auto a = random_torus(rng, fm, 2), b = random_torus(rng, fm, 2), e = random_torus(rng, fm, 2);
      CHECK(commutator_torus(fm, c, d, a, a) == MuN{0});
      CHECK(mu_mul(fm, commutator_torus(fm, c, d, a, b), commutator_torus(fm, c, d, b, a)) == MuN{0});
      CHECK(commutator_torus(fm, c, d, torus_multiply(fm, a, e), b) ==
            mu_mul(fm, commutator_torus(fm, c, d, a, b), commutator_torus(fm, c, d, e, b)));
    }
  }
}
