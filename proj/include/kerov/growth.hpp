#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kerov/jack.hpp"
#include "kerov/partition.hpp"
#include "kerov/rational.hpp"

namespace kerov {

// One step of the growth (or shrink) process: exact probabilities on the
// covers of the source shape, listed in the corner enumeration order of the
// source.  Construction verifies the weights are positive and sum to
// exactly 1.
struct TransitionDistribution {
  Partition source;
  std::vector<std::pair<Partition, Rational>> targets;
};

// up: p(lambda -> Lambda) = (c_lambda / c_Lambda) psi'_{Lambda/lambda};
// at alpha = 1 this is the Plancherel growth rule dim(Lambda)/((n+1) dim).
TransitionDistribution up_distribution(const Partition& lam,
                                       const Rational& alpha);
// down: p(lambda -> tau) = psi'_{lambda/tau} c'_lambda / (alpha n c'_tau);
// summing to 1 is the branching-sum identity for dim_alpha.
TransitionDistribution down_distribution(const Partition& lam,
                                         const Rational& alpha);

// Iterated up steps from the empty shape; the endpoint is Jack_alpha
// distributed.  Deterministic for a given seed.
GrowthPath sample_path(int n, const Rational& alpha, std::uint64_t seed);

// Exact matrix identities: Jack_n * Up = Jack_{n+1}, Jack_n * Down = Jack_{n-1}.
CheckResult stationarity_check(int n, const Rational& alpha);

// Y_j attached to the cycle type mu of size n, evaluated at a shape of size
// j <= n: theta^{lambda}_{mu - 1^{n-j}}, zero when mu has fewer than n-j
// parts of size 1.
Rational y_value(const Partition& lam_j, const Partition& mu,
                 const Rational& alpha);
// same number at alpha = 1 through the character table:
// |C_j| chi^{lambda}(C_j) / dim(lambda) for the class mu - 1^{n-j} of S_j
Rational y_value_class(const Partition& lam_j, const Partition& mu);

struct MartingaleTrace {
  GrowthPath path;
  Partition mu;
  Rational alpha;
  std::vector<Rational> values;  // Y_1 .. Y_n
};

MartingaleTrace y_trace(const GrowthPath& path, const Partition& mu,
                        const Rational& alpha);
MartingaleTrace y_trace_class(const GrowthPath& path, const Partition& mu);

// The martingale property, pointwise: for every lambda of size j,
// sum_Lambda p(lambda -> Lambda) Y_{j+1}(Lambda) = Y_j(lambda), exact.
CheckResult martingale_check(int j, const Partition& mu, const Rational& alpha);

// E((Y_{j+1} - Y_j)^2 | rho(j) = lam), j = |lam|, exact over the covers.
Rational conditional_increment_second_moment(const Partition& lam,
                                             const Partition& mu,
                                             const Rational& alpha);

// E(Y_j | lambda(n) = lam) two ways: exhaustive path enumeration with exact
// up-weights, and the closed form Y_n * m_1(mu)_(falling n-j) / n_(falling n-j).
Rational conditional_expectation_given_top(const Partition& lam, int j,
                                           const Partition& mu,
                                           const Rational& alpha);
Rational conditional_expectation_closed_form(const Partition& lam, int j,
                                             const Partition& mu,
                                             const Rational& alpha);

// Unconditional E((Y_j - Y_{j-1})^2) and E(Y_j^2) under the growth process,
// by summing the stationary law against the exact conditionals (Y_0 = 0).
Rational increment_second_moment_bruteforce(int j, const Partition& mu,
                                            const Rational& alpha);
Rational second_moment_bruteforce(int j, const Partition& mu,
                                  const Rational& alpha);
// Closed forms: zero when m_1(mu) < n-j, otherwise
//   E(Y_j^2)           = alpha^(n-l(mu)) j! / z_{mu-1^{n-j}}        (j >= 1)
//   E((Y_j-Y_{j-1})^2) = alpha^(n-l(mu)) (j-1)!/z_{mu-1^{n-j}} (n - m_1(mu))
// The increment form needs j >= 2: at j = 1 its derivation telescopes
// against a Y_0 term that does not exist.
Rational increment_second_moment_closed(int j, const Partition& mu,
                                        const Rational& alpha);
Rational second_moment_closed(int j, const Partition& mu,
                              const Rational& alpha);

// (Y_1^2 - alpha C(1,2), ..., Y_n^2 - alpha C(n,2)) is a martingale for
// mu = (2, 1^{n-2}); Y_j is then the alpha-content sum, so this check runs
// on content sums alone and needs no theta tables.
CheckResult square_martingale_check(int n, const Rational& alpha);

// Mean 0 and variance alpha |lambda| of the alpha-content of the box the up
// step adds, exact for every shape of size <= max_n.
CheckResult added_content_moments_check(int max_n, const Rational& alpha);

// Average content of the box labeled j over the uniform standard fillings
// of lam, by exhaustive enumeration.
Rational record_statistic(const Partition& lam, int j);

}  // namespace kerov
