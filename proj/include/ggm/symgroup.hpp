#pragma once

// The symmetric group S_k as the Weyl group of type A_{k-1}.
//
// Conventions shared by every module:
//   * a permutation is stored in one-line notation, w(i) at index i-1;
//   * w * v means "apply v first", (w * v)(i) = w(v(i));
//   * s_i (1 <= i < k) swaps i and i+1;
//   * a word (a_1, ..., a_l) denotes s_{a_1} * ... * s_{a_l};
//   * w acts on Z^k by (w . v)_i = v_{w^{-1}(i)}.

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace ggm {

using LatticeVec = std::vector<std::int64_t>;

class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless one_line is a bijection of {1..k}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int k);
  /// s_i for 1 <= i < k.
  static Permutation simple(int k, int i);
  /// w_0, the longest element.
  static Permutation longest(int k);

  int size() const { return static_cast<int>(img_.size()); }
  /// Image of i, 1-based.
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return img_; }
  bool is_identity() const;

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& w, const Permutation& v);

  /// w * s_i, i.e. swap positions i and i+1 of the one-line notation.
  Permutation times_simple(int i) const;
  /// s_i * w, i.e. swap the values i and i+1.
  Permutation simple_times(int i) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  std::string to_string() const;

 private:
  std::vector<int> img_;
};

/// Number of inversions.
int length(const Permutation& w);
/// True when l(w s_i) < l(w).
bool is_right_descent(const Permutation& w, int i);
/// True when l(s_i w) < l(w).
bool is_left_descent(const Permutation& w, int i);

/// Lexicographically smallest reduced word.
std::vector<int> reduced_word(const Permutation& w);
Permutation from_word(int k, std::span<const int> word);

/// All k! permutations in lexicographic order of their one-line notation.
std::vector<Permutation> all_permutations(int k);
/// Lexicographic rank in all_permutations(k).
std::size_t permutation_index(const Permutation& w);

std::uint64_t factorial(int k);

/// An ordered sequence of positive integers; its total is the rank k.
class Composition {
 public:
  Composition() = default;
  /// Throws InvalidArgument if empty or some part is < 1.
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// All compositions of k, in lexicographic order of parts.
std::vector<Composition> compositions(int k);

using SimpleSet = std::set<int>;

/// Generators of S_{k_1} x ... x S_{k_l}: every i < k that is not a partial sum.
SimpleSet young_subgroup(const Composition& c);
/// Inverse of young_subgroup for a rank-k group.
Composition composition_of(int k, const SimpleSet& J);
/// |W_J|.
std::uint64_t parabolic_order(int k, const SimpleSet& J);

/// Minimal-length representatives of the left cosets x W_J, lexicographic order.
std::vector<Permutation> min_coset_reps(int k, const SimpleSet& J);
bool is_min_coset_rep(const Permutation& x, const SimpleSet& J);

struct ParabolicFactor {
  Permutation x;  // minimal in x W_J
  Permutation u;  // in W_J
};

/// w = x * u with l(w) = l(x) + l(u).
ParabolicFactor parabolic_decompose(const Permutation& w, const SimpleSet& J);

LatticeVec act(const Permutation& w, std::span<const std::int64_t> v);

}  // namespace ggm
