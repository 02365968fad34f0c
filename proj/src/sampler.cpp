#include "kerov/sampler.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace kerov {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

constexpr long long kUnitCap = 1000000;  // keeps coordinates well inside int64

void unpack_alpha(const Rational& alpha, long long& p, long long& q,
                  const char* who) {
  if (alpha.sign() <= 0)
    throw std::invalid_argument(std::string(who) + ": alpha must be positive");
  if (!alpha.num().fits_slong_p() || !alpha.den().fits_slong_p())
    throw std::invalid_argument(std::string(who) + ": alpha out of range");
  p = alpha.num().get_si();
  q = alpha.den().get_si();
  if (p > kUnitCap || q > kUnitCap)
    throw std::invalid_argument(std::string(who) + ": alpha out of range");
}

void profile_coords(const Partition& lam, long long p, long long q,
                    std::vector<long long>& add, std::vector<long long>& rem) {
  add.clear();
  rem.clear();
  for (const Box& b : lam.addable_corners())
    add.push_back(p * (b.col - 1) - q * (b.row - 1));
  for (const Box& b : lam.removable_corners())
    rem.push_back(p * b.col - q * b.row);
}

}  // namespace

std::mt19937_64 sample_stream(std::uint64_t base_seed, std::uint64_t index) {
  std::uint64_t x = base_seed + 0x9e3779b97f4a7c15ull * (index + 1);
  return std::mt19937_64(splitmix(splitmix(x) + 0x9e3779b97f4a7c15ull));
}

std::vector<Rational> corner_weights_exact(const std::vector<long long>& addable,
                                           const std::vector<long long>& removable,
                                           long long p, long long q) {
  if (p <= 0 || q <= 0)
    throw std::invalid_argument("corner_weights_exact: alpha must be positive");
  if (addable.empty() || removable.size() + 1 != addable.size())
    throw std::invalid_argument(
        "corner_weights_exact: need one more addable than removable corner");
  for (std::size_t i = 0; i < removable.size(); ++i) {
    if (!(addable[i] > removable[i] && removable[i] > addable[i + 1]))
      throw std::invalid_argument(
          "corner_weights_exact: coordinates not interleaved");
  }

  std::vector<Rational> out;
  out.reserve(addable.size());
  for (std::size_t k = 0; k < addable.size(); ++k) {
    mpz_class num = 1, den = 1;
    for (long long uu : removable)
      num *= mpz_class(static_cast<long>(addable[k] - uu));
    for (std::size_t i = 0; i < addable.size(); ++i)
      if (i != k) den *= mpz_class(static_cast<long>(addable[k] - addable[i]));
    out.emplace_back(num, den);
  }
  return out;
}

std::vector<Rational> corner_weights_exact(const Partition& lam,
                                           const Rational& alpha) {
  long long p = 0, q = 0;
  unpack_alpha(alpha, p, q, "corner_weights_exact");
  std::vector<long long> add, rem;
  profile_coords(lam, p, q, add, rem);
  return corner_weights_exact(add, rem, p, q);
}

CheckResult certify_corner_state(const std::vector<long long>& addable,
                                 const std::vector<long long>& removable,
                                 long long p, long long q, long long n_boxes) {
  CheckResult res;
  std::vector<Rational> w = corner_weights_exact(addable, removable, p, q);
  Rational total = 0;
  Rational second = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k].sign() <= 0) {
      res.ok = false;
      res.detail = "nonpositive corner weight at index " + std::to_string(k);
      return res;
    }
    total += w[k];
    second += w[k] * Rational(addable[k]) * Rational(addable[k]);
  }
  if (total != Rational(1)) {
    res.ok = false;
    res.detail = "corner weights sum to " + total.str();
    return res;
  }
  Rational expect = Rational(p) * Rational(q) * Rational(n_boxes);
  if (second != expect) {
    res.ok = false;
    res.detail = "coordinate second moment " + second.str() + ", expected " +
                 expect.str();
  }
  return res;
}

CornerProcess::CornerProcess(const Rational& alpha) : alpha_(alpha) {
  unpack_alpha(alpha, p_, q_, "CornerProcess");
  reset();
}

void CornerProcess::reset() {
  size_ = 0;
  content_units_ = 0;
  since_recompute_ = 0;
  total_ = 1.0;
  t_.assign(1, 0);
  u_.clear();
  w_.assign(1, 1.0);
  row_.assign(1, 1);
  shape_.clear();
}

double CornerProcess::full_weight(int idx) const {
  // interleave numerator and denominator factors so partial products stay
  // near 1 even with ~100 corners
  const long long tk = t_[static_cast<std::size_t>(idx)];
  double acc = 1.0;
  int other = 0;
  for (std::size_t j = 0; j < u_.size(); ++j) {
    if (other == idx) ++other;
    acc *= static_cast<double>(tk - u_[j]) /
           static_cast<double>(tk - t_[static_cast<std::size_t>(other)]);
    ++other;
  }
  return acc;
}

void CornerProcess::recompute_weights() {
  double tot = 0.0;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    w_[i] = full_weight(static_cast<int>(i));
    tot += w_[i];
  }
  if (std::fabs(tot - 1.0) > kDriftTolerance) {
    std::ostringstream os;
    os << "corner weights drifted: total " << tot << " at size " << size_;
    throw std::logic_error(os.str());
  }
  total_ = tot;
  since_recompute_ = 0;
}

long long CornerProcess::step(std::mt19937_64& rng) {
  const int m = static_cast<int>(t_.size());
  const double target = (static_cast<double>(rng() >> 11) * 0x1.0p-53) * total_;
  int k = m - 1;
  double acc = 0.0;
  for (int i = 0; i < m - 1; ++i) {
    acc += w_[static_cast<std::size_t>(i)];
    if (acc > target) {
      k = i;
      break;
    }
  }

  const long long tk = t_[static_cast<std::size_t>(k)];
  const int row = row_[static_cast<std::size_t>(k)];

  ++size_;
  content_units_ += tk;
  if (row > static_cast<int>(shape_.size()))
    shape_.push_back(1);
  else
    ++shape_[static_cast<std::size_t>(row - 1)];

  // the row above ends exactly at the new box's column iff its run-end
  // removable sits at tk + p; then the right neighbor is not addable and
  // that removable dies.  Mirror statement below with tk - q.
  const bool del_above = k >= 1 && u_[static_cast<std::size_t>(k - 1)] == tk + p_;
  const bool del_below =
      k < static_cast<int>(u_.size()) && u_[static_cast<std::size_t>(k)] == tk - q_;

  const double pd = static_cast<double>(p_);
  const double qd = static_cast<double>(q_);
  const double pq = pd - qd;
  for (int i = 0; i < m; ++i) {
    if (i == k) continue;
    const double d = static_cast<double>(t_[static_cast<std::size_t>(i)] - tk);
    w_[static_cast<std::size_t>(i)] *= d * (d - pq) / ((d + qd) * (d - pd));
  }

  if (del_below) u_.erase(u_.begin() + k);
  if (del_above) u_.erase(u_.begin() + (k - 1));
  u_.insert(u_.begin() + (del_above ? k - 1 : k), tk + p_ - q_);

  t_.erase(t_.begin() + k);
  w_.erase(w_.begin() + k);
  row_.erase(row_.begin() + k);
  int ins = k;
  if (!del_above) {
    t_.insert(t_.begin() + ins, tk + p_);
    w_.insert(w_.begin() + ins, 0.0);
    row_.insert(row_.begin() + ins, row);
    ++ins;
  }
  if (!del_below) {
    t_.insert(t_.begin() + ins, tk - q_);
    w_.insert(w_.begin() + ins, 0.0);
    row_.insert(row_.begin() + ins, row + 1);
  }
  const int pos_right = del_above ? -1 : k;
  const int pos_below = del_below ? -1 : (del_above ? k : k + 1);
  if (pos_right >= 0) w_[static_cast<std::size_t>(pos_right)] = full_weight(pos_right);
  if (pos_below >= 0) w_[static_cast<std::size_t>(pos_below)] = full_weight(pos_below);

  double tot = 0.0;
  for (double x : w_) tot += x;
  total_ = tot;

  if (++since_recompute_ >= kRecomputeInterval) recompute_weights();
  return tk;
}

void CornerProcess::grow_to(int n, std::mt19937_64& rng) {
  if (n < size_)
    throw std::invalid_argument("CornerProcess::grow_to: cannot shrink");
  while (size_ < n) step(rng);
}

double CornerProcess::w_statistic() const {
  if (size_ < 2)
    throw std::domain_error("w_statistic: need at least 2 boxes");
  const double a = static_cast<double>(p_) / static_cast<double>(q_);
  const double c2 = 0.5 * static_cast<double>(size_) *
                    static_cast<double>(size_ - 1);
  return content_sum() / std::sqrt(a * c2);
}

double CornerProcess::corner_moment(int e) const {
  if (e < 0) throw std::invalid_argument("corner_moment: negative exponent");
  double out = 0.0;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    const double c = static_cast<double>(t_[i]) / static_cast<double>(q_);
    double pw = 1.0;
    for (int j = 0; j < e; ++j) pw *= c;
    out += w_[i] * pw;
  }
  return out;
}

}  // namespace kerov
