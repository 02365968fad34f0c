#pragma once

// Content-power statistics d_k, d_rho, the closed conditional moments of the
// growth increment (r <= 4), exact hook-measure expectations behind the
// semicircle limit, and two sampling diagnostics.

#include <cstdint>
#include <vector>

#include "kerov/partition.hpp"
#include "kerov/rational.hpp"

namespace kerov {

// d_k = sum over boxes of c_alpha(x)^k, k >= 1
Rational d_stat(const Partition& lam, int k, const Rational& alpha);
// d_rho = prod over parts i of rho of d_i; empty rho gives 1
Rational d_rho(const Partition& lam, const Partition& rho,
               const Rational& alpha);

// r-th moment of the alpha-content of the box the up step adds:
// sum over addable corners of p(lam -> Lambda) * c_alpha(corner)^r, exact
Rational s_moment_bruteforce(const Partition& lam, int r,
                             const Rational& alpha);

// Closed forms, forced equal to the brute force by the tests:
//   s_1 = 0
//   s_2 = alpha |lam|
//   s_3 = 2 alpha d_1 + alpha (alpha-1) |lam|
//   s_4 = 3 alpha d_2 + 3 alpha (alpha-1) d_1 + alpha^2 C(|lam|+1, 2)
//         + alpha (alpha-1)^2 |lam|
// r outside {1,2,3,4} is a domain_error: the general-r expansion has
// coefficients this project does not define (brute force covers it).
Rational s_moment_closed(const Partition& lam, int r, const Rational& alpha);

// Exact expectations under the alpha = 1 hook measure by full enumeration
// over partitions of n; n beyond kEnumerationBound is a resource_error.
inline constexpr int kEnumerationBound = 30;
Rational plancherel_expect_s(int n, int r);
Rational plancherel_expect_d(int n, const Partition& rho);
// same expectation under the alpha deformation; equals plancherel_expect_s
// at alpha = 1
Rational jack_expect_s(int n, int r, const Rational& alpha);

// E((Y_{j+1} - Y_j)^(2r)) across a grid of sizes j, against the growth
// bound C j^r: exact enumeration for j <= kExactMomentBound, otherwise the
// Monte Carlo average of the corner moment read-off at size j.  `bounded`
// holds when the fitted log-log slope of the moment stays below r + 0.15,
// i.e. moment/j^r does not grow systematically across the grid.
inline constexpr int kExactMomentBound = 12;
struct MomentBoundRow {
  int j = 0;
  bool exact = false;
  double moment = 0.0;  // E((Y_{j+1} - Y_j)^(2r)) at stationarity
  double ratio = 0.0;   // moment / j^r
};
struct MomentBoundReport {
  int r = 0;
  Rational alpha;
  std::vector<MomentBoundRow> rows;
  double max_ratio = 0.0;
  double slope = 0.0;  // log-log fit of moment vs j over distinct j
  bool bounded = true;
};
MomentBoundReport moment_bound_check(const std::vector<int>& j_list, int r,
                                     const Rational& alpha, long samples,
                                     std::uint64_t seed);

// Frequency of lambda_1 >= 2e sqrt(n/alpha) or lambda'_1 >= 2e sqrt(alpha n)
// under the size-n law; both tails decay exponentially, so the observed
// frequency at n >= 100 should sit at or near zero.
struct TailReport {
  int n = 0;
  Rational alpha;
  long samples = 0;
  double row_threshold = 0.0;
  double column_threshold = 0.0;
  long exceed_count = 0;
  double frequency = 0.0;
};
TailReport tail_diagnostic(int n, const Rational& alpha, long samples,
                           std::uint64_t seed);

}  // namespace kerov
