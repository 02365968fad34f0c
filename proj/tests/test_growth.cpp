#include "kerov/growth.hpp"

#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "kerov/character.hpp"
#include "kerov/measures.hpp"

using kerov::Box;
using kerov::GrowthPath;
using kerov::Partition;
using kerov::Rational;

namespace {

const std::vector<Rational> kAlphaGrid = {Rational(1), Rational(2),
                                          Rational(1, 2), Rational(5, 3)};

Partition row_partition(int n) { return Partition(std::vector<int>{n}); }

Partition cycle_type(int head, int n) {
  // (head, 1^{n-head}) as a cycle type in S_n
  std::vector<int> parts{head};
  for (int i = 0; i < n - head; ++i) parts.push_back(1);
  return Partition(parts);
}

Rational up_probability(const kerov::TransitionDistribution& d,
                        const Partition& target) {
  for (const auto& [t, p] : d.targets)
    if (t == target) return p;
  return Rational(0);
}

}  // namespace

TEST_CASE("up distribution fixtures") {
  for (const auto& alpha : kAlphaGrid) {
    auto from_empty = kerov::up_distribution(Partition(), alpha);
    REQUIRE(from_empty.targets.size() == 1);
    CHECK(from_empty.targets[0].first == Partition({1}));
    CHECK(from_empty.targets[0].second == Rational(1));

    auto from_one = kerov::up_distribution(Partition({1}), alpha);
    CHECK(up_probability(from_one, Partition({2})) == 1 / (alpha + 1));
    CHECK(up_probability(from_one, Partition({1, 1})) == alpha / (alpha + 1));

    auto from_two = kerov::up_distribution(Partition({2}), alpha);
    CHECK(up_probability(from_two, Partition({3})) == 1 / (2 * alpha + 1));
    CHECK(up_probability(from_two, Partition({2, 1})) ==
          2 * alpha / (2 * alpha + 1));
  }
  // alpha = 1 is the Plancherel growth rule dim(Lambda)/((n+1) dim(lambda))
  for (int n = 0; n <= 7; ++n)
    for (const auto& lam : kerov::partitions_of(n)) {
      auto d = kerov::up_distribution(lam, Rational(1));
      for (const auto& [big, p] : d.targets)
        CHECK(p == Rational(kerov::syt_count(big)) /
                       (Rational(n + 1) * Rational(kerov::syt_count(lam))));
    }
}

TEST_CASE("down distribution fixtures and normalization") {
  auto from_two = kerov::down_distribution(Partition({2}), Rational(5, 3));
  REQUIRE(from_two.targets.size() == 1);
  CHECK(from_two.targets[0].first == Partition({1}));
  CHECK(from_two.targets[0].second == Rational(1));

  auto hook = kerov::down_distribution(Partition({2, 1}), Rational(1));
  CHECK(up_probability(hook, Partition({2})) == Rational(1, 2));
  CHECK(up_probability(hook, Partition({1, 1})) == Rational(1, 2));

  // construction itself asserts positivity and exact normalization
  for (const auto& alpha : kAlphaGrid)
    for (int n = 1; n <= 8; ++n)
      for (const auto& lam : kerov::partitions_of(n)) {
        CHECK_NOTHROW(kerov::down_distribution(lam, alpha));
        CHECK_NOTHROW(kerov::up_distribution(lam, alpha));
      }
  CHECK_THROWS_AS(kerov::down_distribution(Partition(), Rational(1)),
                  std::domain_error);
  CHECK_THROWS_AS(kerov::up_distribution(Partition({2}), Rational(0)),
                  std::domain_error);
}

TEST_CASE("both walk directions preserve the measure") {
  for (const auto& alpha : kAlphaGrid)
    for (int n = 1; n <= 8; ++n) {
      auto r = kerov::stationarity_check(n, alpha);
      INFO(r.detail);
      CHECK(r.ok);
    }
}

TEST_CASE("sampled paths are deterministic and n=1 is forced") {
  GrowthPath a = kerov::sample_path(12, Rational(5, 3), 2024);
  GrowthPath b = kerov::sample_path(12, Rational(5, 3), 2024);
  REQUIRE(a.chain.size() == 13);
  for (size_t i = 0; i < a.chain.size(); ++i) CHECK(a.chain[i] == b.chain[i]);
  GrowthPath c = kerov::sample_path(12, Rational(5, 3), 2025);
  bool same = true;
  for (size_t i = 0; i < a.chain.size(); ++i)
    if (!(a.chain[i] == c.chain[i])) same = false;
  CHECK(!same);

  GrowthPath one = kerov::sample_path(1, Rational(2), 7);
  REQUIRE(one.chain.size() == 2);
  CHECK(one.chain[1] == Partition({1}));

  // every consecutive pair differs by one box
  for (size_t i = 0; i + 1 < a.chain.size(); ++i) {
    CHECK(a.chain[i + 1].n() == a.chain[i].n() + 1);
    CHECK_NOTHROW(kerov::psi_prime(a.chain[i + 1], a.chain[i], Rational(1)));
  }
}

TEST_CASE("endpoint distribution matches the exact weights") {
  const int N = 100000;
  std::map<Partition, int> freq;
  for (int s = 0; s < N; ++s)
    freq[kerov::sample_path(4, Rational(1), 90000 + s).chain[4]] += 1;
  for (const auto& lam : kerov::partitions_of(4)) {
    double p = kerov::plancherel_weight(lam).to_double();
    double sigma = std::sqrt(p * (1 - p) / N);
    double observed = static_cast<double>(freq[lam]) / N;
    CHECK(std::abs(observed - p) <= 3 * sigma);
  }
}

TEST_CASE("theta route and character route give the same martingale values") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : kerov::partitions_of(n))
      for (int j = 1; j <= n; ++j)
        for (const auto& lam : kerov::partitions_of(j))
          CHECK(kerov::y_value(lam, mu, Rational(1)) ==
                kerov::y_value_class(lam, mu));
}

TEST_CASE("transposition traces are running content sums") {
  for (const auto& alpha : kAlphaGrid) {
    for (const GrowthPath& path : kerov::enumerate_paths(Partition({3, 2}))) {
      auto trace = kerov::y_trace(path, cycle_type(2, 5), alpha);
      for (int j = 1; j <= 5; ++j)
        CHECK(trace.values[static_cast<size_t>(j) - 1] ==
              kerov::theta_transposition(path.chain[static_cast<size_t>(j)],
                                         alpha));
    }
  }
  // early values vanish while mu - 1^{n-j} is undefined
  GrowthPath path = kerov::sample_path(6, Rational(1), 5);
  auto trace = kerov::y_trace(path, cycle_type(4, 6), Rational(1));
  CHECK(trace.values[0] == Rational(0));
  CHECK(trace.values[1] == Rational(0));
  CHECK(trace.values[2] == Rational(0));
  // class route fixture: transpositions, endpoint (2,1), Y_3 = 3*0/2
  GrowthPath to_hook;
  to_hook.chain = {Partition(), Partition({1}), Partition({2}),
                   Partition({2, 1})};
  auto class_trace = kerov::y_trace_class(to_hook, cycle_type(2, 3));
  CHECK(class_trace.values[2] == Rational(0));
}

TEST_CASE("martingale property pointwise, theta route") {
  for (const auto& alpha : kAlphaGrid)
    for (int n = 2; n <= 6; ++n)
      for (const auto& mu : kerov::partitions_of(n))
        for (int j = 1; j < n; ++j) {
          auto r = kerov::martingale_check(j, mu, alpha);
          INFO(r.detail);
          CHECK(r.ok);
        }
}

TEST_CASE("martingale property, character route at alpha = 1") {
  for (int n = 2; n <= 7; ++n)
    for (int head : {2, 3}) {
      if (head > n) continue;
      Partition mu = cycle_type(head, n);
      for (int j = 1; j < n; ++j)
        for (const auto& lam : kerov::partitions_of(j)) {
          Rational expect(0);
          for (const auto& [big, p] :
               kerov::up_distribution(lam, Rational(1)).targets)
            expect += p * kerov::y_value_class(big, mu);
          CHECK(expect == kerov::y_value_class(lam, mu));
        }
    }
  // transposition fixture: E(Y_4 | rho(3) = (3)) = 1/4*6 + 3/4*2 = 3
  Partition mu = cycle_type(2, 4);
  Rational expect(0);
  for (const auto& [big, p] :
       kerov::up_distribution(row_partition(3), Rational(1)).targets)
    expect += p * kerov::y_value_class(big, mu);
  CHECK(kerov::y_value_class(row_partition(4), mu) == Rational(6));
  CHECK(kerov::y_value_class(Partition({3, 1}), mu) == Rational(2));
  CHECK(expect == Rational(3));
  CHECK(kerov::y_value_class(row_partition(3), cycle_type(2, 3)) ==
        Rational(3));
}

TEST_CASE("conditional increment second moments") {
  // 3-cycles at j = 3 depend on the conditioning shape
  Partition mu3 = cycle_type(3, 4);
  CHECK(kerov::conditional_increment_second_moment(row_partition(3), mu3,
                                                   Rational(1)) ==
        Rational(12));
  CHECK(kerov::conditional_increment_second_moment(Partition({2, 1}), mu3,
                                                   Rational(1)) ==
        Rational(3));
  CHECK(kerov::conditional_increment_second_moment(Partition({1, 1, 1}), mu3,
                                                   Rational(1)) ==
        Rational(12));
  // transpositions: constant j at alpha = 1, alpha |lambda| in general
  for (const auto& alpha : kAlphaGrid)
    for (int j = 1; j <= 6; ++j)
      for (const auto& lam : kerov::partitions_of(j))
        CHECK(kerov::conditional_increment_second_moment(
                  lam, cycle_type(2, j + 1), alpha) == alpha * j);
}

TEST_CASE("conditional expectation given the top shape") {
  for (const Rational& alpha : {Rational(1), Rational(5, 3)})
    for (int n = 2; n <= 6; ++n)
      for (const auto& lam : kerov::partitions_of(n))
        for (const auto& mu : kerov::partitions_of(n))
          for (int j = 1; j <= n; ++j)
            CHECK(kerov::conditional_expectation_given_top(lam, j, mu,
                                                           alpha) ==
                  kerov::conditional_expectation_closed_form(lam, j, mu,
                                                             alpha));
  // mu = (2,1), j = 2: factor m_1(mu)/3 = 1/3 of Y_3
  Partition mu{{2, 1}};
  for (const auto& lam : kerov::partitions_of(3))
    CHECK(kerov::conditional_expectation_closed_form(lam, 2, mu,
                                                     Rational(2)) ==
          kerov::y_value(lam, mu, Rational(2)) / 3);
}

TEST_CASE("unconditional increment and second moments match closed forms") {
  for (const Rational& alpha : {Rational(1), Rational(5, 3)})
    for (int n = 2; n <= 6; ++n)
      for (const auto& mu : kerov::partitions_of(n)) {
        for (int j = 2; j <= n; ++j)
          CHECK(kerov::increment_second_moment_bruteforce(j, mu, alpha) ==
                kerov::increment_second_moment_closed(j, mu, alpha));
        for (int j = 1; j <= n; ++j)
          CHECK(kerov::second_moment_bruteforce(j, mu, alpha) ==
                kerov::second_moment_closed(j, mu, alpha));
      }
  // the class-size differences of the alpha = 1 statement
  for (int n = 2; n <= 6; ++n)
    for (const auto& mu : kerov::partitions_of(n))
      for (int j = 2; j <= n; ++j) {
        auto size_in = [&](int stage) -> Rational {
          if (mu.multiplicity(1) < n - stage) return Rational(0);
          std::vector<int> parts = mu.parts();
          parts.resize(parts.size() - static_cast<size_t>(n - stage));
          return Rational(kerov::class_size(Partition(parts)));
        };
        CHECK(kerov::increment_second_moment_closed(j, mu, Rational(1)) ==
              size_in(j) - size_in(j - 1));
      }
  // transpositions: E(Y_j^2) = C(j,2) at alpha = 1, exact through j = 8
  for (int j = 2; j <= 8; ++j)
    CHECK(kerov::second_moment_bruteforce(j, cycle_type(2, 8), Rational(1)) ==
          Rational(kerov::binomial_int(j, 2)));
  // the increment closed form is a j >= 2 statement
  CHECK_THROWS_AS(
      kerov::increment_second_moment_closed(1, cycle_type(2, 4), Rational(1)),
      std::domain_error);
  CHECK(kerov::increment_second_moment_bruteforce(1, Partition({1, 1, 1}),
                                                  Rational(1)) == Rational(1));
}

TEST_CASE("squared content-sum martingale") {
  for (const Rational& alpha : {Rational(1), Rational(3, 2)}) {
    auto r = kerov::square_martingale_check(7, alpha);
    INFO(r.detail);
    CHECK(r.ok);
  }
}

TEST_CASE("added box content has mean zero and variance alpha n") {
  for (const auto& alpha : kAlphaGrid) {
    auto r = kerov::added_content_moments_check(10, alpha);
    INFO(r.detail);
    CHECK(r.ok);
  }
}

TEST_CASE("record statistic equals its closed form") {
  CHECK(kerov::record_statistic(Partition({2}), 2) == Rational(1));
  CHECK(kerov::record_statistic(Partition({3, 1}), 2) == Rational(1, 3));
  for (int j = 1; j <= 3; ++j)
    CHECK(kerov::record_statistic(Partition({2, 1}), j) == Rational(0));
  for (int n = 2; n <= 6; ++n)
    for (const auto& lam : kerov::partitions_of(n)) {
      Rational content_sum(0);
      for (int r = 1; r <= lam.rows(); ++r)
        for (int c = 1; c <= lam.part(r); ++c)
          content_sum += Rational(c - r);
      for (int j = 1; j <= n; ++j)
        CHECK(kerov::record_statistic(lam, j) ==
              Rational(j - 1) * content_sum /
                  Rational(kerov::binomial_int(n, 2)));
    }
}

TEST_CASE("conditioned on the endpoint, paths are uniform at alpha = 1") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lam : kerov::partitions_of(n)) {
      Rational expected = kerov::plancherel_weight(lam) /
                          Rational(kerov::syt_count(lam));
      for (const GrowthPath& path : kerov::enumerate_paths(lam)) {
        Rational prob(1);
        for (int i = 0; i < n; ++i)
          prob *= up_probability(
              kerov::up_distribution(path.chain[static_cast<size_t>(i)],
                                     Rational(1)),
              path.chain[static_cast<size_t>(i) + 1]);
        CHECK(prob == expected);
      }
    }
}
