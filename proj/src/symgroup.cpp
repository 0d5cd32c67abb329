#include "ggm/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ggm/error.hpp"

namespace ggm {

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  const int k = size();
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 1 || v > k || seen[static_cast<std::size_t>(v - 1)])
      throw InvalidArgument("not a permutation of 1.." + std::to_string(k));
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int k) {
  if (k < 0) throw InvalidArgument("negative rank");
  Permutation p;
  p.img_.resize(static_cast<std::size_t>(k));
  std::iota(p.img_.begin(), p.img_.end(), 1);
  return p;
}

Permutation Permutation::simple(int k, int i) {
  if (i < 1 || i >= k) throw InvalidArgument("simple reflection index out of range");
  Permutation p = identity(k);
  std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::longest(int k) {
  Permutation p = identity(k);
  std::reverse(p.img_.begin(), p.img_.end());
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) p.img_[static_cast<std::size_t>(img_[i] - 1)] = static_cast<int>(i) + 1;
  return p;
}

Permutation operator*(const Permutation& w, const Permutation& v) {
  if (w.size() != v.size()) throw InvalidArgument("permutation rank mismatch");
  Permutation p;
  p.img_.resize(v.img_.size());
  for (std::size_t i = 0; i < v.img_.size(); ++i) p.img_[i] = w.img_[static_cast<std::size_t>(v.img_[i] - 1)];
  return p;
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= size()) throw InvalidArgument("simple reflection index out of range");
  Permutation p = *this;
  std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::simple_times(int i) const {
  if (i < 1 || i >= size()) throw InvalidArgument("simple reflection index out of range");
  Permutation p = *this;
  for (int& v : p.img_) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return p;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < img_.size(); ++i) os << (i ? "," : "") << img_[i];
  os << "]";
  return os.str();
}

int length(const Permutation& w) {
  const auto& a = w.one_line();
  int inv = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) inv += a[i] > a[j];
  }
  return inv;
}

bool is_right_descent(const Permutation& w, int i) { return w(i) > w(i + 1); }

bool is_left_descent(const Permutation& w, int i) {
  // i+1 occurs to the left of i in the one-line notation.
  const auto& a = w.one_line();
  for (int v : a) {
    if (v == i) return false;
    if (v == i + 1) return true;
  }
  return false;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation cur = w;
  const int k = w.size();
  while (!cur.is_identity()) {
    for (int i = 1; i < k; ++i) {
      if (is_left_descent(cur, i)) {
        word.push_back(i);
        cur = cur.simple_times(i);
        break;
      }
    }
  }
  return word;
}

Permutation from_word(int k, std::span<const int> word) {
  Permutation p = Permutation::identity(k);
  for (int i : word) p = p.times_simple(i);
  return p;
}

std::vector<Permutation> all_permutations(int k) {
  std::vector<Permutation> out;
  std::vector<int> a(static_cast<std::size_t>(k));
  std::iota(a.begin(), a.end(), 1);
  do {
    out.emplace_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

std::size_t permutation_index(const Permutation& w) {
  const auto& a = w.one_line();
  const int k = w.size();
  std::size_t idx = 0;
  for (int i = 0; i < k; ++i) {
    std::size_t smaller = 0;
    for (int j = i + 1; j < k; ++j) smaller += a[static_cast<std::size_t>(j)] < a[static_cast<std::size_t>(i)];
    idx += smaller * factorial(k - 1 - i);
  }
  return idx;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("empty composition");
  for (int p : parts_) {
    if (p < 1) throw InvalidArgument("composition parts must be positive");
  }
}

int Composition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

std::vector<Composition> compositions(int k) {
  std::vector<Composition> out;
  if (k < 1) return out;
  // Bit i-1 of mask set <=> i is a partial sum.
  const unsigned n = 1u << (k - 1);
  std::vector<std::vector<int>> all;
  for (unsigned mask = 0; mask < n; ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 1; i < k; ++i) {
      if (mask & (1u << (i - 1))) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    all.push_back(std::move(parts));
  }
  std::sort(all.begin(), all.end());
  for (auto& p : all) out.emplace_back(std::move(p));
  return out;
}

SimpleSet young_subgroup(const Composition& c) {
  SimpleSet J;
  int pos = 0;
  for (int part : c.parts()) {
    for (int j = 1; j < part; ++j) J.insert(pos + j);
    pos += part;
  }
  return J;
}

Composition composition_of(int k, const SimpleSet& J) {
  std::vector<int> parts;
  int run = 1;
  for (int i = 1; i < k; ++i) {
    if (J.count(i)) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

std::uint64_t parabolic_order(int k, const SimpleSet& J) {
  std::uint64_t order = 1;
  const Composition c = composition_of(k, J);
  for (int p : c.parts()) order *= factorial(p);
  return order;
}

bool is_min_coset_rep(const Permutation& x, const SimpleSet& J) {
  for (int j : J) {
    if (is_right_descent(x, j)) return false;
  }
  return true;
}

std::vector<Permutation> min_coset_reps(int k, const SimpleSet& J) {
  for (int j : J) {
    if (j < 1 || j >= k) throw InvalidArgument("simple reflection index out of range");
  }
  std::vector<Permutation> out;
  for (auto& w : all_permutations(k)) {
    if (is_min_coset_rep(w, J)) out.push_back(std::move(w));
  }
  return out;
}

ParabolicFactor parabolic_decompose(const Permutation& w, const SimpleSet& J) {
  const int k = w.size();
  std::vector<int> xs = w.one_line();
  int start = 0;
  for (int i = 1; i <= k; ++i) {
    if (i == k || !J.count(i)) {
      std::sort(xs.begin() + start, xs.begin() + i);
      start = i;
    }
  }
  Permutation x(std::move(xs));
  Permutation u = x.inverse() * w;
  return {std::move(x), std::move(u)};
}

LatticeVec act(const Permutation& w, std::span<const std::int64_t> v) {
  if (static_cast<int>(v.size()) != w.size()) throw InvalidArgument("vector length does not match permutation rank");
  LatticeVec out(v.size());
  // out_{w(j)} = v_j
  for (int j = 1; j <= w.size(); ++j) out[static_cast<std::size_t>(w(j) - 1)] = v[static_cast<std::size_t>(j - 1)];
  return out;
}

}  // namespace ggm
