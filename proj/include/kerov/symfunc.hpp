#pragma once

#include <map>

#include "kerov/eigen.hpp"
#include "kerov/partition.hpp"
#include "kerov/rational.hpp"

namespace kerov {

// Dense exact linear algebra stays pleasant up to degree 10 (42 partitions);
// beyond that the tables grow fast and nothing downstream needs them.
inline constexpr int kMaxBasisDegree = 10;

enum class Basis { monomial, power };

// A homogeneous symmetric function of fixed degree, stored sparsely in either
// the monomial or the power-sum basis. Zero coefficients are never stored.
class SymFunc {
public:
  SymFunc() = default;
  SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {}

  static SymFunc unit(Basis basis);  // the constant 1 (degree 0)

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Partition& mu) const;
  void add_term(const Partition& mu, const Rational& c);

  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Rational& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
  friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
  bool operator==(const SymFunc& other) const;

private:
  int degree_ = 0;
  Basis basis_ = Basis::monomial;
  std::map<Partition, Rational> terms_;
};

// Multiply a monomial-basis function by the power sum p_r. The product
// p_r * m_nu is a sum of m_mu where mu is nu with one part a (possibly a=0,
// meaning a fresh part) bumped to a+r; the coefficient is the multiplicity
// of a+r in mu. Distinct values of a give distinct mu, so each target is
// touched once per source term.
SymFunc multiply_power_sum(const SymFunc& f, int r);

// Basis change matrices in the partitions_of(n) coordinate order.
// Column j of power_to_monomial(n) is the monomial expansion of p_{mu_j},
// so vec_m = P2M * vec_p; monomial_to_power(n) is its exact inverse.
// Results are cached; degree above kMaxBasisDegree raises resource_error.
const RationalMatrix& power_to_monomial(int n);
const RationalMatrix& monomial_to_power(int n);

SymFunc to_basis(const SymFunc& f, Basis target);

// <p_nu, p_mu>_alpha = delta z_mu alpha^{l(mu)}, extended bilinearly.
Rational inner_product_alpha(const SymFunc& f, const SymFunc& g,
                             const Rational& alpha);

}  // namespace kerov
