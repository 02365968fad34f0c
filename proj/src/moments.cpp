#include "kerov/moments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "kerov/growth.hpp"
#include "kerov/measures.hpp"
#include "kerov/parallel.hpp"
#include "kerov/sampler.hpp"

namespace kerov {

Rational d_stat(const Partition& lam, int k, const Rational& alpha) {
  if (k < 1) throw std::invalid_argument("d_stat: k must be >= 1");
  Rational out = 0;
  for (int r = 1; r <= lam.rows(); ++r) {
    for (int c = 1; c <= lam.part(r); ++c) {
      Rational content = alpha * Rational(c - 1) - Rational(r - 1);
      out += pow(content, k);
    }
  }
  return out;
}

Rational d_rho(const Partition& lam, const Partition& rho,
               const Rational& alpha) {
  Rational out = 1;
  for (int i = 1; i <= rho.rows(); ++i) out *= d_stat(lam, rho.part(i), alpha);
  return out;
}

Rational s_moment_bruteforce(const Partition& lam, int r,
                             const Rational& alpha) {
  if (r < 0) throw std::invalid_argument("s_moment_bruteforce: negative r");
  TransitionDistribution d = up_distribution(lam, alpha);
  std::vector<Box> corners = lam.addable_corners();
  Rational out = 0;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    Rational c = d.targets[i].first.alpha_content(corners[i], alpha);
    out += d.targets[i].second * pow(c, r);
  }
  return out;
}

Rational s_moment_closed(const Partition& lam, int r, const Rational& alpha) {
  const Rational n(lam.n());
  switch (r) {
    case 1:
      return Rational(0);
    case 2:
      return alpha * n;
    case 3:
      return Rational(2) * alpha * d_stat(lam, 1, alpha) +
             alpha * (alpha - 1) * n;
    case 4:
      return Rational(3) * alpha * d_stat(lam, 2, alpha) +
             Rational(3) * alpha * (alpha - 1) * d_stat(lam, 1, alpha) +
             alpha * alpha * Rational(binomial_int(lam.n() + 1, 2)) +
             alpha * (alpha - 1) * (alpha - 1) * n;
    default:
      throw std::domain_error(
          "s_moment_closed: closed forms cover r in {1,2,3,4} only");
  }
}

namespace {

Rational plancherel_sum(int n, const char* who,
                        const std::function<Rational(const Partition&)>& f) {
  if (n < 0) throw std::invalid_argument(std::string(who) + ": negative n");
  if (n > kEnumerationBound)
    throw resource_error(std::string(who) + ": n exceeds enumeration bound " +
                         std::to_string(kEnumerationBound));
  std::vector<Partition> all = partitions_of(n);
  return chunked_reduce(
      static_cast<std::int64_t>(all.size()), 64, Rational(0),
      [&](Rational& acc, std::int64_t i) {
        const Partition& lam = all[static_cast<std::size_t>(i)];
        acc += plancherel_weight(lam) * f(lam);
      },
      [](Rational& into, Rational&& part) { into += part; });
}

}  // namespace

Rational plancherel_expect_s(int n, int r) {
  return plancherel_sum(n, "plancherel_expect_s", [r](const Partition& lam) {
    return s_moment_bruteforce(lam, r, Rational(1));
  });
}

Rational plancherel_expect_d(int n, const Partition& rho) {
  return plancherel_sum(n, "plancherel_expect_d", [&rho](const Partition& lam) {
    return d_rho(lam, rho, Rational(1));
  });
}

Rational jack_expect_s(int n, int r, const Rational& alpha) {
  if (n < 0) throw std::invalid_argument("jack_expect_s: negative n");
  if (n > kEnumerationBound)
    throw resource_error("jack_expect_s: n exceeds enumeration bound " +
                         std::to_string(kEnumerationBound));
  std::vector<Partition> all = partitions_of(n);
  return chunked_reduce(
      static_cast<std::int64_t>(all.size()), 64, Rational(0),
      [&](Rational& acc, std::int64_t i) {
        const Partition& lam = all[static_cast<std::size_t>(i)];
        acc += jack_weight(lam, alpha) * s_moment_bruteforce(lam, r, alpha);
      },
      [](Rational& into, Rational&& part) { into += part; });
}

MomentBoundReport moment_bound_check(const std::vector<int>& j_list, int r,
                                     const Rational& alpha, long samples,
                                     std::uint64_t seed) {
  if (r < 1) throw std::invalid_argument("moment_bound_check: r must be >= 1");
  MomentBoundReport rep;
  rep.r = r;
  rep.alpha = alpha;
  if (j_list.empty()) return rep;
  for (int j : j_list)
    if (j < 1) throw std::invalid_argument("moment_bound_check: j must be >= 1");

  std::map<int, double> moment_at;

  // exact rows: stationary law at size j against the exact corner moments
  for (int j : j_list) {
    if (j > kExactMomentBound || moment_at.count(j)) continue;
    Rational sum = 0;
    for (const Partition& lam : partitions_of(j))
      sum += jack_weight(lam, alpha) * s_moment_bruteforce(lam, 2 * r, alpha);
    moment_at[j] = sum.to_double();
  }

  // Monte Carlo rows: one growth path per sample, reading the corner moment
  // sum_K w_K c_alpha(K)^(2r) whenever the path passes a requested size
  std::vector<int> mc;
  for (int j : j_list)
    if (j > kExactMomentBound) mc.push_back(j);
  std::sort(mc.begin(), mc.end());
  mc.erase(std::unique(mc.begin(), mc.end()), mc.end());
  if (!mc.empty()) {
    if (samples < 1)
      throw std::invalid_argument("moment_bound_check: samples must be >= 1");
    const int max_j = mc.back();
    std::vector<double> sums = chunked_reduce(
        samples, 256, std::vector<double>(mc.size(), 0.0),
        [&](std::vector<double>& acc, std::int64_t i) {
          CornerProcess cp{alpha};
          std::mt19937_64 rng =
              sample_stream(seed, static_cast<std::uint64_t>(i));
          std::size_t slot = 0;
          for (int n = 1; n <= max_j; ++n) {
            cp.step(rng);
            if (cp.size() == mc[slot]) {
              acc[slot] += cp.corner_moment(2 * r);
              if (++slot == mc.size()) break;
            }
          }
        },
        [](std::vector<double>& into, std::vector<double>&& part) {
          for (std::size_t k = 0; k < into.size(); ++k) into[k] += part[k];
        });
    for (std::size_t k = 0; k < mc.size(); ++k)
      moment_at[mc[k]] = sums[k] / static_cast<double>(samples);
  }

  for (int j : j_list) {
    MomentBoundRow row;
    row.j = j;
    row.exact = j <= kExactMomentBound;
    row.moment = moment_at[j];
    row.ratio = row.moment / std::pow(static_cast<double>(j), r);
    rep.rows.push_back(row);
    rep.max_ratio = std::max(rep.max_ratio, row.ratio);
  }

  // least squares on log(moment) vs log(j) over the distinct sizes
  std::vector<std::pair<double, double>> pts;
  for (const auto& [j, m] : moment_at)
    if (m > 0.0) pts.emplace_back(std::log(static_cast<double>(j)), std::log(m));
  if (pts.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double n_pts = static_cast<double>(pts.size());
    rep.slope = (n_pts * sxy - sx * sy) / (n_pts * sxx - sx * sx);
  }
  rep.bounded = rep.slope <= static_cast<double>(r) + 0.15;
  return rep;
}

TailReport tail_diagnostic(int n, const Rational& alpha, long samples,
                           std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tail_diagnostic: n must be >= 1");
  if (samples < 1)
    throw std::invalid_argument("tail_diagnostic: samples must be >= 1");
  if (alpha.sign() <= 0)
    throw std::invalid_argument("tail_diagnostic: alpha must be positive");

  TailReport rep;
  rep.n = n;
  rep.alpha = alpha;
  rep.samples = samples;
  const double a = alpha.to_double();
  rep.row_threshold = 2.0 * M_E * std::sqrt(static_cast<double>(n) / a);
  rep.column_threshold = 2.0 * M_E * std::sqrt(a * static_cast<double>(n));

  rep.exceed_count = chunked_reduce(
      samples, 1024, 0L,
      [&](long& acc, std::int64_t i) {
        CornerProcess cp{alpha};
        std::mt19937_64 rng = sample_stream(seed, static_cast<std::uint64_t>(i));
        cp.grow_to(n, rng);
        if (static_cast<double>(cp.first_row()) >= rep.row_threshold ||
            static_cast<double>(cp.first_column()) >= rep.column_threshold)
          ++acc;
      },
      [](long& into, long&& part) { into += part; });
  rep.frequency =
      static_cast<double>(rep.exceed_count) / static_cast<double>(samples);
  return rep;
}

}  // namespace kerov
