#pragma once

#include <string>
#include <vector>

#include "kerov/character.hpp"
#include "kerov/eigen.hpp"
#include "kerov/jack.hpp"
#include "kerov/partition.hpp"
#include "kerov/rational.hpp"

namespace kerov {

// A real-valued class function on S_n, stored by class in the
// partitions_of(n) order shared with CharacterTable.
struct ClassFunction {
  int n = 0;
  std::vector<Rational> values;
};

ClassFunction permutation_character(int n);  // eta(C) = number of fixed points
ClassFunction standard_character(int n);     // fixed points - 1
ClassFunction regular_character(int n);      // n! at the identity, 0 elsewhere
ClassFunction irreducible_character(int n, const Partition& lam);
// sum of mult[i] copies of the irreducible indexed by partitions_of(n)[i]
ClassFunction character_from_multiplicities(int n,
                                            const std::vector<long>& mult);

// <eta, chi^lam> for every irreducible, via the class-size weighted sum
std::vector<Rational> irreducible_multiplicities(const ClassFunction& eta);

// Markov chain on the irreducibles of S_n driven by tensoring with eta:
//   L(lam, rho) = dim(rho) / (dim(eta) dim(lam)) <chi^rho, eta chi^lam>.
// Construction validates that eta is a genuine character (nonnegative
// integer multiplicities, eta(1) > 0); that makes every entry a probability.
class IrrChain {
public:
  static IrrChain from_character(const ClassFunction& eta);

  int n() const { return n_; }
  const std::vector<Partition>& states() const;
  const RationalMatrix& transition() const { return transition_; }
  const ClassFunction& eta() const { return eta_; }
  Rational eta_at_identity() const;
  // Plancherel stationary law pi(lam) = dim(lam)^2 / n!
  RationalVector stationary() const;
  // eigenvalue attached to class C: eta(C) / eta(1)
  Rational eigenvalue(int class_idx) const;
  int distinct_eta_values() const;  // the m of the Burnside-Brauer bound

private:
  IrrChain(ClassFunction eta, RationalMatrix transition);

  int n_;
  ClassFunction eta_;
  RationalMatrix transition_;
};

// Exact spectral dictionary: rows sum to 1, entries >= 0, reversibility
// pi(lam) L(lam,rho) = pi(rho) L(rho,lam), the eigenvector equation
// L v_C = (eta(C)/eta(1)) v_C with v_C(rho) = chi^rho(C)/dim(rho), and
// column orthogonality sum_rho chi^rho(C) chi^rho(C') = delta n!/|C|
// (the squared, root-free form of the eigenvector orthonormality).
CheckResult verify_chain_dictionary(const IrrChain& chain);

// j-step probability from the trivial representation to rho, computed two
// ways that must agree: powering the transition matrix, and the character
// sum dim(rho)/(eta(1)^j n!) sum_C |C| eta(C)^j chi^rho(C).
Rational step_probability_matrix(const IrrChain& chain, const Partition& rho,
                                 int j);
Rational step_probability_charsum(const IrrChain& chain, const Partition& rho,
                                  int j);

struct BurnsideBrauerReport {
  bool faithful = false;
  std::vector<Partition> kernel_classes;  // classes with eta(C) = eta(1)
  int m = 0;                              // distinct eta values
  std::vector<int> least_power;  // per irreducible; -1 if none below bound
  bool all_covered_below_m = false;
};

// For faithful eta: every irreducible occurs in some eta^j with j < m.
BurnsideBrauerReport burnside_brauer_check(const IrrChain& chain);

struct DiameterReport {
  int diameter = 0;
  int distinct_eigenvalues = 0;
  int m = 0;
  bool connected = false;
  bool bounds_hold = false;  // diameter <= m-1 and eigenvalues >= diameter+1
};

DiameterReport weighted_graph_diameter(const IrrChain& chain);

}  // namespace kerov
