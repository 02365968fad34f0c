#pragma once

// Fast growth sampling for the Monte Carlo layer.  The exact chain in
// growth.hpp prices one step through full hook products; that is fine for
// desk sizes and far too slow for 10^5 samples at n = 800.  Here the same
// transition law is written on corner coordinates: for alpha = p/q in lowest
// terms, an addable corner (r, c) carries T = p(c-1) - q(r-1), a removable
// corner carries U = pc - qr, and the probability of growing at corner K is
//
//     p_K = prod_j (T_K - U_j) / prod_{i != K} (T_K - T_i),
//
// a self-normalizing partial-fraction product.  One growth step then only
// splices the two coordinate lists locally and rescales every surviving
// weight by the universal factor d(d-p+q) / ((d+q)(d-p)) with d = T - T_K,
// so a step costs O(#corners).  corner_weights_exact is the same formula in
// exact arithmetic; the tests pin it against up_distribution box by box.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "kerov/jack.hpp"
#include "kerov/partition.hpp"
#include "kerov/rational.hpp"

namespace kerov {

// Engine for sample `index` of a base seed: splitmix-mixed, so neighboring
// indices are decorrelated and results are identical for any worker count.
std::mt19937_64 sample_stream(std::uint64_t base_seed, std::uint64_t index);

// Exact corner-growth weights from coordinate lists (both strictly
// decreasing, interleaved addable/removable as in any Young diagram profile).
std::vector<Rational> corner_weights_exact(const std::vector<long long>& addable,
                                           const std::vector<long long>& removable,
                                           long long p, long long q);
std::vector<Rational> corner_weights_exact(const Partition& lam,
                                           const Rational& alpha);

// Exact one-state certificate for the Haeusler accounting: the coordinate
// weights sum to 1 and sum_K p_K T_K^2 = p*q*n (the coordinate form of the
// Kerov variance: the alpha-content of the added box has second moment
// alpha*n at a shape of size n).
CheckResult certify_corner_state(const std::vector<long long>& addable,
                                 const std::vector<long long>& removable,
                                 long long p, long long q, long long n_boxes);

class CornerProcess {
 public:
  explicit CornerProcess(const Rational& alpha);

  void reset();
  // place one box and return its coordinate T; alpha-content = T / q
  long long step(std::mt19937_64& rng);
  void grow_to(int n, std::mt19937_64& rng);  // n >= size() required

  int size() const { return size_; }
  long long p_unit() const { return p_; }
  long long q_unit() const { return q_; }
  const Rational& alpha() const { return alpha_; }

  int first_row() const { return shape_.empty() ? 0 : shape_[0]; }
  int first_column() const { return static_cast<int>(shape_.size()); }
  Partition shape() const { return Partition(shape_); }

  // running sum of coordinates of placed boxes; content sum in units of 1/q
  long long content_sum_units() const { return content_units_; }
  double content_sum() const {
    return static_cast<double>(content_units_) / static_cast<double>(q_);
  }
  // (alpha n(shape') - n(shape)) / sqrt(alpha C(n,2)) without touching the
  // shape: the numerator is the alpha-content sum
  double w_statistic() const;

  const std::vector<long long>& addable_coords() const { return t_; }
  const std::vector<long long>& removable_coords() const { return u_; }
  const std::vector<double>& weights() const { return w_; }
  double weight_total() const { return total_; }

  // moment read-off at the current shape: sum_K w_K (T_K/q)^e
  double corner_moment(int e) const;

  // refresh every weight from the full products; logic_error when the
  // incrementally maintained total drifted beyond kDriftTolerance
  void recompute_weights();

  static constexpr int kRecomputeInterval = 256;
  static constexpr double kDriftTolerance = 1e-9;

 private:
  double full_weight(int idx) const;

  Rational alpha_;
  long long p_ = 1;
  long long q_ = 1;
  int size_ = 0;
  long long content_units_ = 0;
  int since_recompute_ = 0;
  double total_ = 1.0;
  std::vector<long long> t_;  // addable coordinates, strictly decreasing
  std::vector<long long> u_;  // removable coordinates, strictly decreasing
  std::vector<double> w_;     // growth probability per addable corner
  std::vector<int> row_;      // 1-based row of each addable corner
  std::vector<int> shape_;    // current row lengths
};

}  // namespace kerov
