#include "kerov/measures.hpp"

#include <stdexcept>

namespace kerov {

namespace {

void require_positive(const Rational& alpha) {
  if (alpha.sign() <= 0) throw std::domain_error("alpha must be positive");
}

}  // namespace

Rational plancherel_weight(const Partition& lam) {
  mpz_class hooks = 1;
  for (int r = 1; r <= lam.rows(); ++r)
    for (int c = 1; c <= lam.part(r); ++c) hooks *= lam.hook({r, c});
  return Rational(factorial_int(lam.n()), hooks * hooks);
}

Rational c_poly(const Partition& lam, const Rational& alpha) {
  Rational prod(1);
  std::vector<int> conj = lam.conjugate().parts();
  for (int r = 1; r <= lam.rows(); ++r) {
    for (int c = 1; c <= lam.part(r); ++c) {
      int a = lam.part(r) - c;
      int l = conj[static_cast<std::size_t>(c - 1)] - r;
      prod *= alpha * Rational(a) + Rational(l + 1);
    }
  }
  return prod;
}

Rational c_prime_poly(const Partition& lam, const Rational& alpha) {
  Rational prod(1);
  std::vector<int> conj = lam.conjugate().parts();
  for (int r = 1; r <= lam.rows(); ++r) {
    for (int c = 1; c <= lam.part(r); ++c) {
      int a = lam.part(r) - c;
      int l = conj[static_cast<std::size_t>(c - 1)] - r;
      prod *= alpha * Rational(a + 1) + Rational(l);
    }
  }
  return prod;
}

Rational jack_weight(const Partition& lam, const Rational& alpha) {
  require_positive(alpha);
  Rational denom = c_poly(lam, alpha) * c_prime_poly(lam, alpha);
  return pow(alpha, lam.n()) * Rational(factorial_int(lam.n())) / denom;
}

Rational dim_alpha(const Partition& lam, const Rational& alpha) {
  require_positive(alpha);
  return Rational(factorial_int(lam.n())) * pow(alpha, lam.n()) / c_prime_poly(lam, alpha);
}

mpz_class z_stat(const Partition& cycle_type) {
  mpz_class z = 1;
  int prev = -1;
  for (int v : cycle_type.parts()) {
    if (v == prev) continue;
    int m = cycle_type.multiplicity(v);
    mpz_class vp;
    mpz_ui_pow_ui(vp.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(m));
    z *= vp * factorial_int(m);
    prev = v;
  }
  return z;
}

mpz_class class_size(const Partition& cycle_type) {
  mpz_class z = z_stat(cycle_type);
  mpz_class q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), factorial_int(cycle_type.n()).get_mpz_t(), z.get_mpz_t());
  if (rem != 0) throw std::logic_error("z_mu does not divide n!");
  return q;
}

Rational jack_total_mass(int n, const Rational& alpha) {
  require_positive(alpha);
  Rational total(0);
  for (const Partition& lam : partitions_of(n)) total += jack_weight(lam, alpha);
  return total;
}

}  // namespace kerov
