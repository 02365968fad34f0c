#pragma once

#include <string>
#include <vector>

#include "kerov/partition.hpp"
#include "kerov/rational.hpp"
#include "kerov/symfunc.hpp"

namespace kerov {

// Jack polynomials J_lambda in the J normalization: the coefficient of
// m_(1^n) is n!, equivalently the coefficient of p_(1^n) is 1.  Computed by
// Gram-Schmidt over the monomial basis in a dominance-compatible order under
// the alpha inner product, with exact arithmetic throughout.  Tables are
// cached per (n, alpha) and immutable once built.
class JackTable {
public:
  static const JackTable& get(int n, const Rational& alpha);

  int n() const { return n_; }
  const Rational& alpha() const { return alpha_; }
  const std::vector<Partition>& index() const { return index_; }

  const SymFunc& jack_monomial(const Partition& lam) const;
  const SymFunc& jack_power(const Partition& lam) const;
  // theta^lambda_mu: coefficient of p_mu in J_lambda
  Rational theta(const Partition& lam, const Partition& mu) const;
  // <J_lambda, J_lambda>_alpha
  const Rational& norm(const Partition& lam) const;

private:
  JackTable(int n, Rational alpha);
  int position(const Partition& lam) const;

  int n_;
  Rational alpha_;
  std::vector<Partition> index_;
  std::vector<SymFunc> mono_;
  std::vector<SymFunc> power_;
  std::vector<Rational> norms_;
};

SymFunc jack_J(const Partition& lam, const Rational& alpha);
Rational theta(const Partition& lam, const Partition& mu, const Rational& alpha);

// theta for mu = (2, 1^{n-2}) has a closed form: the sum of the
// alpha-contents of the boxes, alpha*n(lambda') - n(lambda).
Rational theta_transposition(const Partition& lam, const Rational& alpha);

// Branching weight psi'_{lambda/tau} for a cover pair tau < lambda (one box
// added).  Product over boxes of lambda lying in the new box's column but not
// its row of
//   (alpha*a_l + l_l + 1)/(alpha*a_l + l_l + alpha)
//     * (alpha*a_t + l_t + alpha)/(alpha*a_t + l_t + 1)
// with arms and legs taken in lambda and tau respectively; 1 if the set is
// empty.  Throws domain_error if tau is not lambda minus one box.
Rational psi_prime(const Partition& lam, const Partition& tau,
                   const Rational& alpha);

// Exact verification of the structural identities the theta tables rest on.
// ok=false carries a human-readable first counterexample in detail.
struct CheckResult {
  bool ok = true;
  std::string detail;
};

// 1. sum_rho theta^rho_mu theta^rho_eta / (c_rho c'_rho) = delta / (z_mu alpha^l(mu))
// 2. p_1 J_lambda  = sum_Lambda (c_lambda/c_Lambda) psi' J_Lambda
// 3. p_1-perp J_lambda = sum_tau (c'_lambda/c'_tau) psi' J_tau
// checked for every lambda (and mu, eta) of size n
CheckResult verify_jack_orthogonality(int n, const Rational& alpha);
CheckResult verify_pieri_up(int n, const Rational& alpha);
CheckResult verify_pieri_down(int n, const Rational& alpha);

// theta recursions: up, theta^lambda_{mu-1} = sum (c/c) psi' theta^Lambda_mu
// with |mu| = n+1 and |lambda| = n; down, alpha m_1(mu) theta^lambda_mu =
// sum (c'/c') psi' theta^tau_{mu-1} with |mu| = |lambda| = n.  theta_{mu-1}
// is 0 by convention when mu has no part of size 1.
CheckResult verify_theta_up(int n, const Partition& mu, const Rational& alpha);
CheckResult verify_theta_down(int n, const Partition& mu, const Rational& alpha);

}  // namespace kerov
