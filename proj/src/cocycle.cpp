#include "ggm/cocycle.hpp"

#include <numeric>

#include "ggm/error.hpp"

namespace ggm {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

void check_lengths(const TorusElem& t, const TorusElem& tp) {
  if (t.size() != tp.size()) throw InvalidArgument("torus elements of different rank");
}

}  // namespace

FieldModel::FieldModel(std::int64_t q, std::int64_t n) : q_(q), n_(n) {
  if (!is_prime_power(q)) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  if (n < 1 || (q - 1) % n != 0)
    throw InvalidArgument("n = " + std::to_string(n) + " does not divide q - 1 = " + std::to_string(q - 1));
}

FieldElem normalize(const FieldModel& fm, FieldElem u) {
  u.unit_exp = mod(u.unit_exp, fm.unit_modulus());
  return u;
}

FieldElem multiply(const FieldModel& fm, const FieldElem& u, const FieldElem& v) {
  return normalize(fm, {u.valuation + v.valuation, u.unit_exp + v.unit_exp});
}

FieldElem power(const FieldModel& fm, const FieldElem& u, std::int64_t e) {
  return normalize(fm, {u.valuation * e, mod(u.unit_exp, fm.unit_modulus()) * mod(e, fm.unit_modulus())});
}

FieldElem uniformizer() { return {1, 0}; }

MuN mu_mul(const FieldModel& fm, MuN a, MuN b) { return {mod(a.exp + b.exp, fm.n())}; }
MuN mu_pow(const FieldModel& fm, MuN a, std::int64_t e) { return {mod(mod(a.exp, fm.n()) * mod(e, fm.n()), fm.n())}; }
MuN mu_inv(const FieldModel& fm, MuN a) { return {mod(-a.exp, fm.n())}; }

std::int64_t mu_order(const FieldModel& fm, MuN a) { return fm.n() / std::gcd(fm.n(), mod(a.exp, fm.n())); }

MuN hilbert(const FieldModel& fm, const FieldElem& u, const FieldElem& v) {
  const std::int64_t n = fm.n();
  const std::int64_t a = mod(u.valuation, n);
  const std::int64_t b = mod(v.valuation, n);
  // -1 = g^{(q-1)/2} for odd q; in characteristic 2, -1 = 1.
  const std::int64_t minus_one = fm.q() % 2 == 1 ? mod(fm.unit_modulus() / 2, n) : 0;
  const std::int64_t x = mod(u.unit_exp, n);
  const std::int64_t y = mod(v.unit_exp, n);
  // g^{E (q-1)/n} = zeta^E, so only E mod n matters.
  return {mod(a * b % n * minus_one + b * x - a * y, n)};
}

TorusElem torus_multiply(const FieldModel& fm, const TorusElem& t, const TorusElem& u) {
  check_lengths(t, u);
  TorusElem out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = multiply(fm, t[i], u[i]);
  return out;
}

MuN sigma_det_torus(const FieldModel& fm, const TorusElem& t, const TorusElem& tp) {
  check_lengths(t, tp);
  FieldElem a, b;
  for (std::size_t i = 0; i < t.size(); ++i) {
    a = multiply(fm, a, t[i]);
    b = multiply(fm, b, tp[i]);
  }
  return hilbert(fm, a, b);
}

MuN sigma_kp_torus(const FieldModel& fm, const TorusElem& t, const TorusElem& tp) {
  check_lengths(t, tp);
  MuN out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) out = mu_mul(fm, out, hilbert(fm, t[i], tp[j]));
  }
  return out;
}

MuN sigma_cover_torus(const FieldModel& fm, std::int64_t c, std::int64_t d, const TorusElem& t,
                      const TorusElem& tp) {
  return mu_mul(fm, mu_pow(fm, sigma_det_torus(fm, t, tp), c), mu_pow(fm, sigma_kp_torus(fm, t, tp), d));
}

MuN commutator_torus(const FieldModel& fm, std::int64_t c, std::int64_t d, const TorusElem& t,
                     const TorusElem& tp) {
  return mu_mul(fm, sigma_cover_torus(fm, c, d, t, tp), mu_inv(fm, sigma_cover_torus(fm, c, d, tp, t)));
}

std::vector<std::vector<std::int64_t>> pairing_table(const FieldModel& fm) {
  const std::int64_t n = fm.n();
  std::vector<std::vector<std::int64_t>> table(static_cast<std::size_t>(n * n),
                                               std::vector<std::int64_t>(static_cast<std::size_t>(n * n)));
  for (std::int64_t i = 0; i < n * n; ++i) {
    for (std::int64_t j = 0; j < n * n; ++j) {
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          hilbert(fm, {i / n, i % n}, {j / n, j % n}).exp;
    }
  }
  return table;
}

bool pairing_nondegenerate(const FieldModel& fm) {
  const auto table = pairing_table(fm);
  for (std::size_t i = 1; i < table.size(); ++i) {
    bool hit = false;
    for (auto e : table[i]) hit = hit || e != 0;
    if (!hit) return false;
  }
  return true;
}

}  // namespace ggm
