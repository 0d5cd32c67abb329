#include "ggm/bruteforce.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace ggm {

namespace {

std::uint64_t encode(const std::vector<std::int64_t>& residues, std::int64_t n) {
  std::uint64_t code = 0;
  for (auto r : residues) code = code * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(r);
  return code;
}

}  // namespace

std::optional<BruteforceCount> bruteforce_count(const CoverSpec& cov, const TypeSpec& ty, std::uint64_t bound) {
  const DerivedParams p = derive_params(cov, ty);
  const auto k = static_cast<std::size_t>(ty.k);
  const std::int64_t n = cov.n;
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (box > bound / static_cast<std::uint64_t>(n)) return std::nullopt;
    box *= static_cast<std::uint64_t>(n);
  }

  // Residue of l0 ((sum s)(2c+d) r0 - s_i d) modulo n.
  const std::int64_t common = (ty.l0 * (2 * cov.c + cov.d) * p.r0) % n;
  const std::int64_t diag = (ty.l0 * cov.d) % n;
  auto residues = [&](const std::vector<std::int64_t>& t) {
    std::int64_t total = 0;
    for (auto x : t) total = (total + x) % n;
    std::vector<std::int64_t> out(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t v = (total * common - t[i] * diag) % n;
      out[i] = v < 0 ? v + n : v;
    }
    return out;
  };

  std::unordered_set<std::uint64_t> classes;
  std::set<std::uint64_t> orbit_keys;
  std::vector<std::int64_t> t(k, 0);
  std::vector<std::size_t> perm(k);
  std::vector<std::int64_t> moved(k);
  for (std::uint64_t idx = 0; idx < box; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = k; i-- > 0;) {
      t[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(n));
      rest /= static_cast<std::uint64_t>(n);
    }
    if (!classes.insert(encode(residues(t), n)).second) continue;
    // New class: its orbit key is the least residue code over all permutations.
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::uint64_t key = UINT64_MAX;
    do {
      for (std::size_t i = 0; i < k; ++i) moved[i] = t[perm[i]];
      key = std::min(key, encode(residues(moved), n));
    } while (std::next_permutation(perm.begin(), perm.end()));
    orbit_keys.insert(key);
  }
  return BruteforceCount{classes.size(), orbit_keys.size()};
}

}  // namespace ggm
