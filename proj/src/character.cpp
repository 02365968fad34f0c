#include "kerov/character.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "kerov/measures.hpp"

namespace kerov {

namespace {

constexpr int kMaxCharacterN = 8;

// partition -> beta-set with L slots: beta_i = lambda_i + (L - i), 1-indexed
// rows; strictly decreasing.  The inverse drops zero parts.
std::vector<int> beta_set(const Partition& lam) {
  const int L = lam.rows();
  std::vector<int> beta(static_cast<size_t>(L));
  for (int i = 1; i <= L; ++i)
    beta[static_cast<size_t>(i - 1)] = lam.part(i) + (L - i);
  return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int L = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 1; i <= L; ++i) {
    int v = beta[static_cast<size_t>(i - 1)] - (L - i);
    if (v > 0) parts.push_back(v);
  }
  return Partition(std::move(parts));
}

// chi^lam evaluated on the class whose parts from position k onward remain.
// A border strip of length r corresponds to replacing some beta value b by
// b - r (with b - r fresh); its height parity is the number of beta values
// strictly between the two.
mpz_class chi_rec(const Partition& lam, const std::vector<int>& mu, size_t k,
                  std::map<std::pair<std::vector<int>, size_t>, mpz_class>& memo) {
  if (lam.n() == 0) return 1;
  auto key = std::make_pair(lam.parts(), k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const int r = mu[k];
  std::vector<int> beta = beta_set(lam);
  mpz_class total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    if (b < r) continue;
    const int target = b - r;
    bool clash = false;
    int between = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
      if (beta[j] == target) clash = true;
      if (beta[j] > target && beta[j] < b) ++between;
    }
    if (clash) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    mpz_class sub = chi_rec(partition_from_beta(std::move(nb)), mu, k + 1, memo);
    if (between % 2 == 1) sub = -sub;
    total += sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

CharacterTable::CharacterTable(int n) : n_(n) {
  if (n < 1) throw std::domain_error("character table needs n >= 1");
  if (n > kMaxCharacterN)
    throw resource_error("character table size above configured bound");
  index_ = partitions_of(n);
  const size_t m = index_.size();
  values_.assign(m, std::vector<mpz_class>(m));
  for (size_t c = 0; c < m; ++c) {
    std::map<std::pair<std::vector<int>, size_t>, mpz_class> memo;
    const std::vector<int>& mu = index_[c].parts();
    for (size_t l = 0; l < m; ++l)
      values_[l][c] = chi_rec(index_[l], mu, 0, memo);
  }
}

const CharacterTable& CharacterTable::get(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::unique_ptr<CharacterTable>(new CharacterTable(n)))
             .first;
  return *it->second;
}

int CharacterTable::position(const Partition& p) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), p);
  if (it == index_.end() || *it != p)
    throw std::domain_error("partition not indexed by this character table");
  return static_cast<int>(it - index_.begin());
}

const mpz_class& CharacterTable::value(const Partition& lam,
                                       const Partition& mu) const {
  return values_[static_cast<size_t>(position(lam))]
                [static_cast<size_t>(position(mu))];
}

const mpz_class& CharacterTable::value_at(int lam_idx, int mu_idx) const {
  return values_[static_cast<size_t>(lam_idx)][static_cast<size_t>(mu_idx)];
}

const mpz_class& CharacterTable::dim(const Partition& lam) const {
  return values_[static_cast<size_t>(position(lam))].back();
}

Rational frobenius_ratio(const Partition& lam) {
  const int n = lam.n();
  if (n < 2) throw std::domain_error("frobenius_ratio needs n >= 2");
  return Rational(lam.conjugate().n_stat() - lam.n_stat()) /
         Rational(binomial_int(n, 2));
}

}  // namespace kerov
