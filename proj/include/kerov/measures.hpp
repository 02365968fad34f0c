#pragma once

// Weights and normalizations on partitions: the hook-product measure at
// alpha = 1 and its one-parameter deformation, plus the symmetric-group
// class bookkeeping (z_mu, class sizes) the character side needs.

#include "kerov/partition.hpp"
#include "kerov/rational.hpp"

namespace kerov {

// n! / prod_x hook(x)^2 = dim(lambda)^2 / n!
Rational plancherel_weight(const Partition& lam);

// c(lambda)  = prod_x (alpha*arm + leg + 1)
// c'(lambda) = prod_x (alpha*arm + leg + alpha)
Rational c_poly(const Partition& lam, const Rational& alpha);
Rational c_prime_poly(const Partition& lam, const Rational& alpha);

// alpha^n n! / (c * c'); requires alpha > 0
Rational jack_weight(const Partition& lam, const Rational& alpha);

// deformed dimension n! alpha^n / c'(lambda); dim_alpha at alpha=1 is dim
Rational dim_alpha(const Partition& lam, const Rational& alpha);

// z_mu = prod_i i^{m_i} m_i!  for a cycle type mu
mpz_class z_stat(const Partition& cycle_type);
// |C_mu| = n! / z_mu
mpz_class class_size(const Partition& cycle_type);

// sum of jack_weight over all partitions of n (used by normalization checks)
Rational jack_total_mass(int n, const Rational& alpha);

}  // namespace kerov
