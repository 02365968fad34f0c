#pragma once

// Test-only oracles, deliberately independent of the library code paths they
// check: counting recurrences, brute-force enumerations over S_n, and dense
// polynomial arithmetic in finitely many variables.

#include "kerov/partition.hpp"
#include "kerov/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

// p(n) by the "parts of size <= k" recurrence (no partition objects involved)
inline long partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::vector<long>> memo(static_cast<std::size_t>(n + 1),
                                      std::vector<long>(static_cast<std::size_t>(n + 1), -1));
  auto ways = [&](auto&& self, int rest, int maxpart) -> long {
    if (rest == 0) return 1;
    if (maxpart == 0) return 0;
    long& m = memo[static_cast<std::size_t>(rest)][static_cast<std::size_t>(maxpart)];
    if (m >= 0) return m;
    long total = self(self, rest, maxpart - 1);
    if (rest >= maxpart) total += self(self, rest - maxpart, maxpart);
    return m = total;
  };
  return ways(ways, n, n);
}

// cycle type of a permutation given as 0-indexed images
inline std::vector<int> cycle_type_of(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> cycles;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(perm[j]);
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return cycles;
}

// class sizes by walking all of S_n (n small)
inline std::map<std::vector<int>, long> class_sizes_bruteforce(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::map<std::vector<int>, long> out;
  do {
    out[cycle_type_of(perm)] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ---- dense symmetric polynomials in k variables ---------------------------
// exponent vector (size k, unsorted) -> coefficient
using Poly = std::map<std::vector<int>, kerov::Rational>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

inline Poly power_sum_poly(int r, int k) {
  Poly p;
  for (int i = 0; i < k; ++i) {
    std::vector<int> e(static_cast<std::size_t>(k), 0);
    e[static_cast<std::size_t>(i)] = r;
    p[e] = kerov::Rational(1);
  }
  return p;
}

inline Poly monomial_poly(const kerov::Partition& lam, int k) {
  // sum over distinct permutations of the exponent multiset
  std::vector<int> e(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < lam.rows(); ++i) e[static_cast<std::size_t>(i)] = lam.part(i + 1);
  std::sort(e.begin(), e.end());
  Poly p;
  do {
    p[e] = kerov::Rational(1);
  } while (std::next_permutation(e.begin(), e.end()));
  return p;
}

inline Poly power_prod_poly(const kerov::Partition& mu, int k) {
  Poly p;
  p[std::vector<int>(static_cast<std::size_t>(k), 0)] = kerov::Rational(1);
  for (int i = 1; i <= mu.rows(); ++i) p = poly_mul(p, power_sum_poly(mu.part(i), k));
  return p;
}

// coefficient of the monomial symmetric function m_lam inside poly (poly must
// be symmetric); reads off the coefficient of the sorted exponent vector
inline kerov::Rational monomial_coeff(const Poly& p, const kerov::Partition& lam, int k) {
  std::vector<int> e(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < lam.rows(); ++i) e[static_cast<std::size_t>(i)] = lam.part(i + 1);
  std::sort(e.begin(), e.end());
  auto it = p.find(e);
  return it == p.end() ? kerov::Rational(0) : it->second;
}

}  // namespace oracle
