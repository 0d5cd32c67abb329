#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ggm/hecke_finite.hpp"

using namespace ggm;

namespace {

IntPoly poly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}

FiniteHeckeElement random_element(const FiniteHeckeAlgebra& h, std::mt19937_64& rng) {
  auto perms = all_permutations(h.rank());
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  FiniteHeckeElement a(h.rank());
  for (int j = 0; j < 3; ++j) a.add(perms[pick(rng)], RatFunc(poly({coef(rng), coef(rng)})));
  return a;
}

}  // namespace

TEST_CASE("quadratic relation") {
  for (unsigned f : {1u, 2u}) {
    FiniteHeckeAlgebra h(3, f);
    for (int i = 1; i < 3; ++i) {
      auto ts = h.basis(Permutation::simple(3, i));
      FiniteHeckeElement expect = ts;
      expect *= h.q0() - 1;
      expect += h.scalar(h.q0());
      CHECK(h.multiply(ts, ts) == expect);
      auto plus = ts + h.one();
      auto minus = ts - h.scalar(h.q0());
      CHECK(h.multiply(plus, minus).is_zero());
    }
  }
}

TEST_CASE("length-additive products") {
  FiniteHeckeAlgebra h(3);
  Permutation s1 = Permutation::simple(3, 1), s2 = Permutation::simple(3, 2);
  CHECK(h.multiply(h.basis(s1), h.basis(s2)) == h.basis(s1 * s2));
  for (const auto& w : all_permutations(4)) {
    FiniteHeckeAlgebra h4(4);
    FiniteHeckeElement prod = h4.one();
    for (int i : reduced_word(w)) prod = h4.times_simple(prod, i);
    CHECK(prod == h4.basis(w));
  }
}

TEST_CASE("braid relations") {
  for (int k = 3; k <= 4; ++k) {
    FiniteHeckeAlgebra h(k);
    for (int i = 1; i + 1 < k; ++i) {
      auto a = h.basis(Permutation::simple(k, i)), b = h.basis(Permutation::simple(k, i + 1));
      CHECK(h.multiply(h.multiply(a, b), a) == h.multiply(h.multiply(b, a), b));
    }
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(0x5eed);
  FiniteHeckeAlgebra h(4);
  for (int it = 0; it < 200; ++it) {
    auto a = random_element(h, rng), b = random_element(h, rng), c = random_element(h, rng);
    CHECK(h.multiply(h.multiply(a, b), c) == h.multiply(a, h.multiply(b, c)));
  }
}

TEST_CASE("sign character") {
  CHECK(sign_value(Permutation::identity(3)) == RatFunc(1));
  CHECK(sign_value(Permutation::simple(3, 2)) == RatFunc(-1));
  CHECK(sign_value(Permutation::simple(3, 1) * Permutation::simple(3, 2)) == RatFunc(1));
  FiniteHeckeAlgebra h(3);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    auto a = random_element(h, rng), b = random_element(h, rng);
    CHECK(h.sign(h.multiply(a, b)) == h.sign(a) * h.sign(b));
  }
}

TEST_CASE("induced module dimensions") {
  CHECK(induced_sign_module(3, Composition({2, 1})).dim() == 3);
  CHECK(induced_sign_module(3, Composition({3})).dim() == 1);
  CHECK(induced_sign_module(3, Composition({1, 1, 1})).dim() == 6);
}

TEST_CASE("module action") {
  FiniteHeckeAlgebra h2(2);
  auto m2 = induced_sign_module(2, Composition({2}));
  RFVector e{RatFunc(1)};
  CHECK(module_act(h2, h2.basis(Permutation::simple(2, 1)), m2, e) == RFVector{RatFunc(-1)});

  FiniteHeckeAlgebra h3(3);
  auto m3 = induced_sign_module(3, Composition({2, 1}));
  Permutation s1 = Permutation::simple(3, 1), s2 = Permutation::simple(3, 2);
  RFVector v(m3.dim());
  v[m3.index.at(s2)] = 1;
  RFVector expect(m3.dim());
  expect[m3.index.at(s1 * s2)] = 1;
  CHECK(module_act(h3, h3.basis(s1), m3, v) == expect);
}

TEST_CASE("action matrices satisfy the quadratic relation") {
  for (int k = 2; k <= 4; ++k) {
    FiniteHeckeAlgebra h(k);
    for (const auto& c : compositions(k)) {
      auto m = induced_sign_module(k, c);
      for (int i = 1; i < k; ++i) {
        RFMatrix a = action_matrix(h, m, i);
        for (std::size_t j = 0; j < m.dim(); ++j) {
          RFVector col(m.dim());
          for (std::size_t r = 0; r < m.dim(); ++r) col[r] = a(r, j);
          RFVector acol = a.apply(col);
          // A^2 = (q0 - 1) A + q0
          for (std::size_t r = 0; r < m.dim(); ++r) {
            RatFunc expect = (h.q0() - 1) * col[r] + (r == j ? h.q0() : RatFunc(0));
            CHECK(acol[r] == expect);
          }
        }
      }
    }
  }
}

TEST_CASE("hom to the sign character is one-dimensional") {
  CHECK(hom_to_sign_dim(FiniteHeckeAlgebra(3), induced_sign_module(3, Composition({2, 1}))) == 1);
  CHECK(hom_to_sign_dim(FiniteHeckeAlgebra(2), induced_sign_module(2, Composition({1, 1}))) == 1);
  for (int k = 1; k <= 4; ++k) {
    FiniteHeckeAlgebra h(k);
    for (const auto& c : compositions(k)) {
      auto m = induced_sign_module(k, c);
      CHECK(hom_to_sign_dim(h, m) == 1);
      CHECK(hom_to_sign_dim_at(h, m, 7) == 1);
    }
  }
}

TEST_CASE("fault hook breaks the quadratic relation") {
  FiniteHeckeAlgebra good(2), bad(2, 1, StructureFault::quadratic_sign);
  auto s = Permutation::simple(2, 1);
  CHECK(good.multiply(good.basis(s), good.basis(s)) != bad.multiply(bad.basis(s), bad.basis(s)));
}
