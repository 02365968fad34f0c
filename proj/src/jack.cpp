#include "kerov/jack.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "kerov/eigen.hpp"
#include "kerov/measures.hpp"

namespace kerov {

namespace {

// diagonal inner product in power coordinates: sum a_i b_i z_i alpha^{l_i}
Rational diag_inner(const RationalVector& a, const RationalVector& b,
                    const std::vector<Rational>& w) {
  Rational out(0);
  for (int i = 0; i < a.size(); ++i) {
    if (a(i).is_zero() || b(i).is_zero()) continue;
    out += a(i) * b(i) * w[static_cast<size_t>(i)];
  }
  return out;
}

}  // namespace

JackTable::JackTable(int n, Rational alpha) : n_(n), alpha_(std::move(alpha)) {
  if (n < 0) throw std::domain_error("jack table needs n >= 0");
  if (n > kMaxBasisDegree)
    throw resource_error("jack table degree above configured bound");
  if (alpha_.sign() <= 0) throw std::domain_error("jack table needs alpha > 0");

  index_ = partitions_of(n);
  const int m = static_cast<int>(index_.size());
  std::vector<Rational> w(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Partition& mu = index_[static_cast<size_t>(i)];
    w[static_cast<size_t>(i)] = Rational(z_stat(mu)) * pow(alpha_, mu.rows());
  }

  const RationalMatrix& m2p = monomial_to_power(n);
  const RationalMatrix& p2m = power_to_monomial(n);

  // Gram-Schmidt in ascending dominance order, which is the reverse of the
  // enumeration order; each finished vector is rescaled on the spot so that
  // the m_(1^n) coefficient is n!.
  std::vector<RationalVector> jp(static_cast<size_t>(m));
  std::vector<int> built;
  const Rational nfact{factorial_int(n)};
  for (int pos = m - 1; pos >= 0; --pos) {
    RationalVector v = m2p.col(pos);
    for (int prev : built) {
      const RationalVector& u = jp[static_cast<size_t>(prev)];
      Rational num = diag_inner(v, u, w);
      if (num.is_zero()) continue;
      v -= (num / diag_inner(u, u, w)) * u;
    }
    RationalVector vm = p2m * v;
    const Rational& lead = vm(m - 1);  // m_(1^n) is last in the enumeration
    if (lead.is_zero())
      throw std::logic_error("degenerate pivot in jack Gram-Schmidt");
    v *= nfact / lead;
    jp[static_cast<size_t>(pos)] = std::move(v);
    built.push_back(pos);
  }

  mono_.reserve(static_cast<size_t>(m));
  power_.reserve(static_cast<size_t>(m));
  norms_.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const RationalVector& pv = jp[static_cast<size_t>(i)];
    RationalVector mv = p2m * pv;
    SymFunc fp(n, Basis::power);
    SymFunc fm(n, Basis::monomial);
    for (int j = 0; j < m; ++j) {
      fp.add_term(index_[static_cast<size_t>(j)], pv(j));
      fm.add_term(index_[static_cast<size_t>(j)], mv(j));
    }
    power_.push_back(std::move(fp));
    mono_.push_back(std::move(fm));
    norms_.push_back(diag_inner(pv, pv, w));
  }
}

int JackTable::position(const Partition& lam) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), lam);
  if (it == index_.end() || *it != lam)
    throw std::domain_error("partition not in this jack table");
  return static_cast<int>(it - index_.begin());
}

const JackTable& JackTable::get(int n, const Rational& alpha) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::string>, std::unique_ptr<JackTable>>
      cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(n, alpha.str());
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache
             .emplace(key, std::unique_ptr<JackTable>(new JackTable(n, alpha)))
             .first;
  }
  return *it->second;
}

const SymFunc& JackTable::jack_monomial(const Partition& lam) const {
  return mono_[static_cast<size_t>(position(lam))];
}

const SymFunc& JackTable::jack_power(const Partition& lam) const {
  return power_[static_cast<size_t>(position(lam))];
}

Rational JackTable::theta(const Partition& lam, const Partition& mu) const {
  return power_[static_cast<size_t>(position(lam))].coeff(mu);
}

const Rational& JackTable::norm(const Partition& lam) const {
  return norms_[static_cast<size_t>(position(lam))];
}

SymFunc jack_J(const Partition& lam, const Rational& alpha) {
  return JackTable::get(lam.n(), alpha).jack_monomial(lam);
}

Rational theta(const Partition& lam, const Partition& mu,
               const Rational& alpha) {
  return JackTable::get(lam.n(), alpha).theta(lam, mu);
}

Rational theta_transposition(const Partition& lam, const Rational& alpha) {
  return alpha * Rational(lam.conjugate().n_stat()) - Rational(lam.n_stat());
}

Rational psi_prime(const Partition& lam, const Partition& tau,
                   const Rational& alpha) {
  if (lam.n() != tau.n() + 1)
    throw std::domain_error("psi_prime needs a cover pair");
  Box added{0, 0};
  for (int r = 1; r <= lam.rows(); ++r) {
    if (lam.part(r) == tau.part(r)) continue;
    if (added.row != 0 || lam.part(r) != tau.part(r) + 1)
      throw std::domain_error("psi_prime needs a cover pair");
    added = Box{r, lam.part(r)};
  }
  // boxes of lambda in the new box's column but not its row; all of them lie
  // in tau as well since only the new box's row changed
  Rational out(1);
  for (int i = 1; i < added.row; ++i) {
    Box s{i, added.col};
    Rational al = alpha * lam.arm(s) + lam.leg(s);
    Rational at = alpha * tau.arm(s) + tau.leg(s);
    out *= (al + 1) / (al + alpha) * (at + alpha) / (at + 1);
  }
  return out;
}

namespace {

std::string describe(const Partition& lam) { return lam.str(); }

// p_1 * f in the power basis: append a part of size 1 to every index
SymFunc times_p1(const SymFunc& f) {
  SymFunc out(f.degree() + 1, Basis::power);
  for (const auto& [mu, c] : f.terms()) {
    std::vector<int> parts = mu.parts();
    parts.push_back(1);
    out.add_term(Partition(std::move(parts)), c);
  }
  return out;
}

// p_1-perp = alpha * d/dp_1 in the power basis
SymFunc p1_perp(const SymFunc& f, const Rational& alpha) {
  if (f.degree() == 0) return SymFunc(0, Basis::power);
  SymFunc out(f.degree() - 1, Basis::power);
  for (const auto& [mu, c] : f.terms()) {
    int k = mu.multiplicity(1);
    if (k == 0) continue;
    std::vector<int> parts = mu.parts();
    parts.pop_back();  // parts of size 1 sit at the end
    out.add_term(Partition(std::move(parts)), alpha * k * c);
  }
  return out;
}

Partition drop_one_part_1(const Partition& mu) {
  std::vector<int> parts = mu.parts();
  parts.pop_back();
  return Partition(std::move(parts));
}

}  // namespace

CheckResult verify_jack_orthogonality(int n, const Rational& alpha) {
  const JackTable& t = JackTable::get(n, alpha);
  auto parts = partitions_of(n);
  std::vector<Rational> inv_norm;
  for (const auto& rho : parts)
    inv_norm.push_back(Rational(1) /
                       (c_poly(rho, alpha) * c_prime_poly(rho, alpha)));
  for (const auto& mu : parts) {
    for (const auto& eta : parts) {
      Rational sum(0);
      for (size_t i = 0; i < parts.size(); ++i)
        sum += t.theta(parts[i], mu) * t.theta(parts[i], eta) * inv_norm[i];
      Rational expect =
          mu == eta
              ? Rational(1) / (Rational(z_stat(mu)) * pow(alpha, mu.rows()))
              : Rational(0);
      if (sum != expect) {
        std::ostringstream os;
        os << "orthogonality fails at mu=" << describe(mu)
           << " eta=" << describe(eta);
        return {false, os.str()};
      }
    }
  }
  return {};
}

CheckResult verify_pieri_up(int n, const Rational& alpha) {
  const JackTable& low = JackTable::get(n, alpha);
  const JackTable& high = JackTable::get(n + 1, alpha);
  for (const auto& lam : partitions_of(n)) {
    SymFunc lhs = times_p1(low.jack_power(lam));
    SymFunc rhs(n + 1, Basis::power);
    Rational c_lam = c_poly(lam, alpha);
    for (const Box& b : lam.addable_corners()) {
      Partition big = lam.with_box(b);
      rhs += high.jack_power(big) *
             (c_lam / c_poly(big, alpha) * psi_prime(big, lam, alpha));
    }
    if (!(lhs == rhs))
      return {false, "p_1 J expansion fails at lambda=" + describe(lam)};
  }
  return {};
}

CheckResult verify_pieri_down(int n, const Rational& alpha) {
  const JackTable& high = JackTable::get(n, alpha);
  const JackTable& low = JackTable::get(n - 1, alpha);
  for (const auto& lam : partitions_of(n)) {
    SymFunc lhs = p1_perp(high.jack_power(lam), alpha);
    SymFunc rhs(n - 1, Basis::power);
    Rational cp_lam = c_prime_poly(lam, alpha);
    for (const Box& b : lam.removable_corners()) {
      Partition small = lam.without_box(b);
      rhs += low.jack_power(small) * (cp_lam / c_prime_poly(small, alpha) *
                                      psi_prime(lam, small, alpha));
    }
    if (!(lhs == rhs))
      return {false, "p_1-perp J expansion fails at lambda=" + describe(lam)};
  }
  return {};
}

CheckResult verify_theta_up(int n, const Partition& mu, const Rational& alpha) {
  if (mu.n() != n + 1)
    throw std::domain_error("verify_theta_up needs |mu| = n + 1");
  const JackTable& low = JackTable::get(n, alpha);
  const JackTable& high = JackTable::get(n + 1, alpha);
  for (const auto& lam : partitions_of(n)) {
    Rational lhs = mu.multiplicity(1) > 0
                       ? low.theta(lam, drop_one_part_1(mu))
                       : Rational(0);
    Rational rhs(0);
    Rational c_lam = c_poly(lam, alpha);
    for (const Box& b : lam.addable_corners()) {
      Partition big = lam.with_box(b);
      rhs += c_lam / c_poly(big, alpha) * psi_prime(big, lam, alpha) *
             high.theta(big, mu);
    }
    if (lhs != rhs)
      return {false, "theta up recursion fails at lambda=" + describe(lam) +
                         " mu=" + describe(mu)};
  }
  return {};
}

CheckResult verify_theta_down(int n, const Partition& mu,
                              const Rational& alpha) {
  if (mu.n() != n)
    throw std::domain_error("verify_theta_down needs |mu| = n");
  const JackTable& high = JackTable::get(n, alpha);
  const JackTable& low = JackTable::get(n - 1, alpha);
  const int m1 = mu.multiplicity(1);
  for (const auto& lam : partitions_of(n)) {
    Rational lhs = alpha * m1 * high.theta(lam, mu);
    Rational rhs(0);
    if (m1 > 0) {
      Partition mu_less = drop_one_part_1(mu);
      Rational cp_lam = c_prime_poly(lam, alpha);
      for (const Box& b : lam.removable_corners()) {
        Partition small = lam.without_box(b);
        rhs += cp_lam / c_prime_poly(small, alpha) *
               psi_prime(lam, small, alpha) * low.theta(small, mu_less);
      }
    }
    if (lhs != rhs)
      return {false, "theta down recursion fails at lambda=" + describe(lam) +
                         " mu=" + describe(mu)};
  }
  return {};
}

}  // namespace kerov
