#include "kerov/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kerov/measures.hpp"

namespace kerov {

SymFunc SymFunc::unit(Basis basis) {
  SymFunc one(0, basis);
  one.add_term(Partition(), Rational(1));
  return one;
}

Rational SymFunc::coeff(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& mu, const Rational& c) {
  if (mu.n() != degree_)
    throw std::domain_error("SymFunc: index partition of wrong degree");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(mu, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  if (degree_ != other.degree_ || basis_ != other.basis_)
    throw std::domain_error("SymFunc: mixed degree or basis in addition");
  for (const auto& [mu, c] : other.terms_) add_term(mu, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
  if (degree_ != other.degree_ || basis_ != other.basis_)
    throw std::domain_error("SymFunc: mixed degree or basis in subtraction");
  for (const auto& [mu, c] : other.terms_) add_term(mu, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, v] : terms_) v *= c;
  return *this;
}

bool SymFunc::operator==(const SymFunc& other) const {
  return degree_ == other.degree_ && basis_ == other.basis_ &&
         terms_ == other.terms_;
}

SymFunc multiply_power_sum(const SymFunc& f, int r) {
  if (f.basis() != Basis::monomial)
    throw std::domain_error("multiply_power_sum expects the monomial basis");
  if (r < 1) throw std::domain_error("multiply_power_sum needs r >= 1");
  SymFunc out(f.degree() + r, Basis::monomial);
  for (const auto& [nu, c] : f.terms()) {
    std::vector<int> base(nu.parts().begin(), nu.parts().end());
    // distinct part values of nu, plus 0 for "start a new part"
    std::vector<int> values{0};
    for (int v : base)
      if (values.back() != v) values.push_back(v);
    for (int a : values) {
      std::vector<int> parts = base;
      if (a == 0) {
        parts.push_back(r);
      } else {
        // bump one copy of a to a+r
        for (int& v : parts)
          if (v == a) {
            v += r;
            break;
          }
      }
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      Partition mu(std::move(parts));
      out.add_term(mu, c * Rational(mu.multiplicity(a + r)));
    }
  }
  return out;
}

namespace {

std::mutex basis_mutex;
std::vector<std::pair<RationalMatrix, RationalMatrix>> basis_cache;  // [n]

void ensure_basis_matrices(int n) {
  if (n < 0) throw std::domain_error("basis matrices need n >= 0");
  if (n > kMaxBasisDegree)
    throw resource_error("symmetric function degree above configured bound");
  std::lock_guard<std::mutex> lock(basis_mutex);
  if (static_cast<int>(basis_cache.size()) > n) return;
  for (int d = static_cast<int>(basis_cache.size()); d <= n; ++d) {
    auto parts = partitions_of(d);
    const int m = static_cast<int>(parts.size());
    std::map<Partition, int> index;
    for (int i = 0; i < m; ++i) index.emplace(parts[i], i);
    RationalMatrix p2m = RationalMatrix::Zero(m, m);
    for (int j = 0; j < m; ++j) {
      SymFunc e = SymFunc::unit(Basis::monomial);
      for (int r : parts[j].parts()) e = multiply_power_sum(e, r);
      for (const auto& [mu, c] : e.terms()) p2m(index.at(mu), j) = c;
    }
    RationalMatrix m2p =
        p2m.fullPivLu().solve(RationalMatrix::Identity(m, m));
    basis_cache.emplace_back(std::move(p2m), std::move(m2p));
  }
}

}  // namespace

const RationalMatrix& power_to_monomial(int n) {
  ensure_basis_matrices(n);
  return basis_cache[static_cast<size_t>(n)].first;
}

const RationalMatrix& monomial_to_power(int n) {
  ensure_basis_matrices(n);
  return basis_cache[static_cast<size_t>(n)].second;
}

SymFunc to_basis(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  const int n = f.degree();
  const RationalMatrix& mat =
      target == Basis::monomial ? power_to_monomial(n) : monomial_to_power(n);
  auto parts = partitions_of(n);
  const int m = static_cast<int>(parts.size());
  std::map<Partition, int> index;
  for (int i = 0; i < m; ++i) index.emplace(parts[i], i);
  RationalVector in = RationalVector::Zero(m);
  for (const auto& [mu, c] : f.terms()) in(index.at(mu)) = c;
  RationalVector out = mat * in;
  SymFunc g(n, target);
  for (int i = 0; i < m; ++i) g.add_term(parts[i], out(i));
  return g;
}

Rational inner_product_alpha(const SymFunc& f, const SymFunc& g,
                             const Rational& alpha) {
  if (f.degree() != g.degree())
    throw std::domain_error("inner product needs equal degrees");
  SymFunc fp = to_basis(f, Basis::power);
  SymFunc gp = to_basis(g, Basis::power);
  Rational total(0);
  for (const auto& [mu, a] : fp.terms()) {
    Rational b = gp.coeff(mu);
    if (b.is_zero()) continue;
    total += a * b * Rational(z_stat(mu)) * pow(alpha, mu.rows());
  }
  return total;
}

}  // namespace kerov
