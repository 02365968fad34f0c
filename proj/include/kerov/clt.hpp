#pragma once

// Monte Carlo lab for the normal limit of the character-ratio statistic
// W = (alpha n(lam') - n(lam)) / sqrt(alpha C(n,2)): sampling at scale,
// Kolmogorov distance to the standard normal, convergence-rate fits, and the
// martingale-CLT bookkeeping (the L and N quantities) with exact
// certification of the N term.

#include <cstdint>
#include <string>
#include <vector>

#include "kerov/jack.hpp"
#include "kerov/partition.hpp"
#include "kerov/rational.hpp"

namespace kerov {

// Phi via erfc; absolute error well below 1e-12 on |x| <= 8, pinned against
// 30-digit fixtures in the tests.
double normal_cdf(double x);

// Two-sided Kolmogorov distance of a sample to the standard normal:
// max_i of max(i/N - Phi(x_(i)), Phi(x_(i)) - (i-1)/N) over the sorted
// sample.  Empty samples are invalid.
double ks_statistic(std::vector<double> sample);

// The numerator alpha n(lam') - n(lam) is the alpha-content sum; the three
// denominators differ by O(1/n) factors and are asymptotically
// interchangeable.  `canonical` is the W_alpha convention used everywhere
// unless a caller opts out; the other two reproduce the transposition
// literature at alpha = 1 (scaled by sqrt(alpha) away from it).
enum class Normalization {
  canonical,  // sqrt(alpha C(n,2))
  shifted,    // sqrt(alpha C(n-1,2)), needs n >= 3
  linear,     // sqrt(alpha) (n-1)/sqrt(2)
};

double w_statistic_value(const Partition& lam, const Rational& alpha,
                         Normalization norm = Normalization::canonical);

struct CltRow {
  int n = 0;
  long samples = 0;
  double ks = 0.0;
  double mean = 0.0;
  double variance = 0.0;
};

struct CltExperiment {
  Rational alpha;
  long samples = 0;
  std::uint64_t seed = 0;
  Normalization norm = Normalization::canonical;
  std::vector<CltRow> rows;
};

// N growth paths per grid size (N >= 1000), per-sample substreams keyed by
// (seed, running sample index), worker-count independent.
CltExperiment run_clt(const std::vector<int>& n_grid, const Rational& alpha,
                      long samples, std::uint64_t seed,
                      Normalization norm = Normalization::canonical);

// Least squares of log KS against log n: KS ~ C n^(-s_hat).  Needs at least
// two rows with positive KS.
struct RateFit {
  double s_hat = 0.0;
  double intercept = 0.0;  // log C
};
RateFit rate_fit(const CltExperiment& e);

// Martingale-CLT quantities for the increments X_j = c_alpha(box j)/
// sqrt(alpha C(n,2)):
//   L = sum_j E|X_j|^(2+2 delta), estimated over `paths` sampled paths;
//   N = E|sum_j E(X_j^2 | F_{j-1}) - 1|^(1+delta), identically zero because
//       the conditional variance at a state of size j is alpha*j regardless
//       of the state.
// The zero is certified, not assumed: every sampled path's variance sum is
// re-summed in exact arithmetic and compared to 1, and `exact_state_checks`
// states along the first path get their corner weights rebuilt exactly and
// checked for sum p_K = 1 and sum p_K T_K^2 = p q j.
struct HaeuslerReport {
  int n = 0;
  Rational alpha;
  double delta = 1.0;
  long paths = 0;
  double l_value = 0.0;
  bool n_term_zero = false;
  long certified_paths = 0;
  long certified_states = 0;
  std::string detail;  // empty when every certification passed
};
HaeuslerReport haeusler_quantities(int n, const Rational& alpha, double delta,
                                   long paths, std::uint64_t seed,
                                   int exact_state_checks = 64);

}  // namespace kerov
