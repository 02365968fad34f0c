#include "kerov/clt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kerov/parallel.hpp"
#include "kerov/sampler.hpp"

namespace kerov {

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x * M_SQRT1_2);
}

double ks_statistic(std::vector<double> sample) {
  if (sample.empty())
    throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double phi = normal_cdf(sample[i]);
    const double hi = (static_cast<double>(i) + 1.0) / n - phi;
    const double lo = phi - static_cast<double>(i) / n;
    d = std::max(d, std::max(hi, lo));
  }
  return d;
}

namespace {

double normalizer(int n, double alpha, Normalization norm) {
  switch (norm) {
    case Normalization::canonical:
      if (n < 2) throw std::domain_error("w statistic needs n >= 2");
      return std::sqrt(alpha * 0.5 * n * (n - 1.0));
    case Normalization::shifted:
      if (n < 3)
        throw std::domain_error("shifted normalization needs n >= 3");
      return std::sqrt(alpha * 0.5 * (n - 1.0) * (n - 2.0));
    case Normalization::linear:
      if (n < 2) throw std::domain_error("w statistic needs n >= 2");
      return std::sqrt(alpha) * (n - 1.0) * M_SQRT1_2;
  }
  throw std::logic_error("unknown normalization");
}

}  // namespace

double w_statistic_value(const Partition& lam, const Rational& alpha,
                         Normalization norm) {
  if (alpha.sign() <= 0)
    throw std::invalid_argument("w_statistic_value: alpha must be positive");
  const double num = theta_transposition(lam, alpha).to_double();
  return num / normalizer(lam.n(), alpha.to_double(), norm);
}

CltExperiment run_clt(const std::vector<int>& n_grid, const Rational& alpha,
                      long samples, std::uint64_t seed, Normalization norm) {
  if (samples < 1000)
    throw std::invalid_argument("run_clt: need at least 1000 samples");
  if (n_grid.empty()) throw std::invalid_argument("run_clt: empty grid");
  for (int n : n_grid)
    if (n < 2 || (norm == Normalization::shifted && n < 3))
      throw std::invalid_argument("run_clt: grid size too small");

  CltExperiment e;
  e.alpha = alpha;
  e.samples = samples;
  e.seed = seed;
  e.norm = norm;

  const double a = alpha.to_double();
  struct PathAcc {
    CornerProcess cp;
    std::vector<double> vals;
  };

  std::uint64_t stream_base = 0;  // distinct substream index per (n, sample)
  for (int n : n_grid) {
    const double scale = normalizer(n, a, norm);
    PathAcc zero{CornerProcess{alpha}, {}};
    const std::uint64_t base = stream_base;
    PathAcc acc = chunked_reduce(
        samples, 512, zero,
        [&](PathAcc& local, std::int64_t i) {
          std::mt19937_64 rng =
              sample_stream(seed, base + static_cast<std::uint64_t>(i));
          local.cp.reset();
          local.cp.grow_to(n, rng);
          local.vals.push_back(local.cp.content_sum() / scale);
        },
        [](PathAcc& into, PathAcc&& part) {
          into.vals.insert(into.vals.end(), part.vals.begin(),
                           part.vals.end());
        });
    stream_base += static_cast<std::uint64_t>(samples);

    CltRow row;
    row.n = n;
    row.samples = samples;
    double mean = 0.0;
    for (double v : acc.vals) mean += v;
    mean /= static_cast<double>(samples);
    double var = 0.0;
    for (double v : acc.vals) var += (v - mean) * (v - mean);
    var /= static_cast<double>(samples - 1);
    row.mean = mean;
    row.variance = var;
    row.ks = ks_statistic(std::move(acc.vals));
    e.rows.push_back(row);
  }
  return e;
}

RateFit rate_fit(const CltExperiment& e) {
  std::vector<std::pair<double, double>> pts;
  for (const CltRow& row : e.rows)
    if (row.ks > 0.0)
      pts.emplace_back(std::log(static_cast<double>(row.n)),
                       std::log(row.ks));
  if (pts.size() < 2)
    throw std::invalid_argument(
        "rate_fit: need at least two grid rows with positive KS");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(pts.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  RateFit fit;
  fit.s_hat = -slope;
  fit.intercept = (sy - slope * sx) / m;
  return fit;
}

HaeuslerReport haeusler_quantities(int n, const Rational& alpha, double delta,
                                   long paths, std::uint64_t seed,
                                   int exact_state_checks) {
  if (n < 2) throw std::invalid_argument("haeusler_quantities: n must be >= 2");
  if (delta <= 0.0)
    throw std::invalid_argument("haeusler_quantities: delta must be positive");
  if (paths < 1)
    throw std::invalid_argument("haeusler_quantities: paths must be >= 1");
  if (exact_state_checks < 0)
    throw std::invalid_argument("haeusler_quantities: negative check count");

  HaeuslerReport rep;
  rep.n = n;
  rep.alpha = alpha;
  rep.delta = delta;
  rep.paths = paths;

  const double a = alpha.to_double();
  const double scale = std::sqrt(a * 0.5 * n * (n - 1.0));
  const bool quartic = delta == 1.0;
  const Rational c2(static_cast<long>(n) * (n - 1) / 2);

  struct Acc {
    CornerProcess cp;
    double l_sum = 0.0;
    long certified = 0;
    long bad = 0;
    std::string first_bad;
  };
  Acc zero{CornerProcess{alpha}, 0.0, 0, 0, {}};
  Acc acc = chunked_reduce(
      paths, 64, zero,
      [&](Acc& local, std::int64_t i) {
        std::mt19937_64 rng =
            sample_stream(seed, static_cast<std::uint64_t>(i));
        local.cp.reset();
        double l = 0.0;
        long long size_sum = 0;
        for (int j = 1; j <= n; ++j) {
          size_sum += local.cp.size();
          const double x =
              (static_cast<double>(local.cp.step(rng)) /
               static_cast<double>(local.cp.q_unit())) / scale;
          if (quartic) {
            const double x2 = x * x;
            l += x2 * x2;
          } else {
            l += std::pow(std::fabs(x), 2.0 + 2.0 * delta);
          }
        }
        local.l_sum += l;
        // path-wise conditional variance sum, re-summed exactly: the state
        // of size j contributes alpha j / (alpha C(n,2))
        Rational total = alpha * Rational(size_sum) / (alpha * c2);
        if (local.cp.size() == n && total == Rational(1)) {
          ++local.certified;
        } else if (local.bad++ == 0) {
          local.first_bad = "path " + std::to_string(i) +
                            ": variance sum " + total.str();
        }
      },
      [](Acc& into, Acc&& part) {
        into.l_sum += part.l_sum;
        into.certified += part.certified;
        if (into.bad == 0 && part.bad > 0) into.first_bad = part.first_bad;
        into.bad += part.bad;
      });

  rep.l_value = acc.l_sum / static_cast<double>(paths);
  rep.certified_paths = acc.certified;
  rep.detail = acc.first_bad;

  // exact weight certificates at states spread along one replayed path
  long states_bad = 0;
  if (exact_state_checks > 0) {
    CornerProcess cp{alpha};
    std::mt19937_64 rng = sample_stream(seed, 0);
    const long long p = cp.p_unit();
    const long long q = cp.q_unit();
    int stride = std::max(1, n / exact_state_checks);
    for (int j = 0; j < n; ++j) {
      if (j % stride == 0 || j == n - 1) {
        CheckResult cert = certify_corner_state(
            cp.addable_coords(), cp.removable_coords(), p, q, cp.size());
        if (cert.ok) {
          ++rep.certified_states;
        } else if (states_bad++ == 0 && rep.detail.empty()) {
          rep.detail = "state of size " + std::to_string(cp.size()) + ": " +
                       cert.detail;
        }
      }
      cp.step(rng);
    }
  }

  rep.n_term_zero = acc.bad == 0 && states_bad == 0;
  return rep;
}

}  // namespace kerov
