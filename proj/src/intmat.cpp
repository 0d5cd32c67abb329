#include "ggm/intmat.hpp"

#include <algorithm>
#include <utility>

#include "ggm/error.hpp"

namespace ggm {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntRow(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = a[0].size();
  if (inner != b.size()) throw InvalidArgument("integer matrix shape mismatch");
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(a.size(), IntRow(cols, Integer(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t l = 0; l < inner; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void axpy_row(IntRow& dst, const IntRow& src, const Integer& f) {
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= f * src[j];
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclid down column c over rows r.. until a single nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer f = floor_div(rows[i][c], rows[r][c]);
        axpy_row(rows[i], rows[r], f);
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0) {
      for (auto& x : rows[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer f = floor_div(rows[i][c], rows[r][c]);
      if (f != 0) axpy_row(rows[i], rows[r], f);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

IntRow reduce_mod_hnf(const IntMatrix& hnf, IntRow v) {
  for (const auto& row : hnf) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    Integer f = floor_div(v[c], row[c]);
    if (f != 0) axpy_row(v, row, f);
  }
  return v;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < d.size() && i < (d.empty() ? 0 : d[0].size()); ++i) out.push_back(d[i][i]);
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  SmithForm s{identity_matrix(rows), m, identity_matrix(cols), identity_matrix(cols)};
  IntMatrix& a = s.d;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : s.v) std::swap(row[i], row[j]);
    std::swap(s.v_inverse[i], s.v_inverse[j]);
  };
  // row_i -= f * row_j
  auto sub_row = [&](std::size_t i, std::size_t j, const Integer& f) {
    axpy_row(a[i], a[j], f);
    axpy_row(s.u[i], s.u[j], f);
  };
  // col_i -= f * col_j
  auto sub_col = [&](std::size_t i, std::size_t j, const Integer& f) {
    for (auto& row : a) row[i] -= f * row[j];
    for (auto& row : s.v) row[i] -= f * row[j];
    for (std::size_t c = 0; c < cols; ++c) s.v_inverse[j][c] += f * s.v_inverse[i][c];
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) break;
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        sub_row(i, t, floor_div(a[i][t], a[t][t]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        sub_col(j, t, floor_div(a[t][j], a[t][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the remaining block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      sub_row(t, bad, Integer(-1));
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : s.u[t]) x = -x;
    }
  }
  return s;
}

}  // namespace ggm
