#include "kerov/verify.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "kerov/character.hpp"
#include "kerov/growth.hpp"
#include "kerov/jack.hpp"
#include "kerov/measures.hpp"
#include "kerov/moments.hpp"
#include "kerov/partition.hpp"
#include "kerov/walk.hpp"

namespace kerov {

namespace {

Partition transposition_class(int n) {
  // (2, 1^{n-2}), n >= 2
  std::vector<int> parts{2};
  parts.insert(parts.end(), static_cast<size_t>(n - 2), 1);
  return Partition(parts);
}

class Suite {
 public:
  explicit Suite(VerifyReport& rep) : rep_(rep) {}

  void row(std::string identity, int n, const Rational& alpha, std::string mu,
           bool ok, std::string counterexample) {
    VerifyRow r;
    r.identity = std::move(identity);
    r.n = n;
    r.alpha = alpha;
    r.mu = std::move(mu);
    r.ok = ok;
    if (!ok) {
      r.counterexample = std::move(counterexample);
      ++rep_.failures;
    }
    rep_.rows.push_back(std::move(r));
  }

  void check(std::string identity, int n, const Rational& alpha,
             std::string mu, const CheckResult& c) {
    row(std::move(identity), n, alpha, std::move(mu), c.ok, c.detail);
  }

 private:
  VerifyReport& rep_;
};

std::string shape_note(const Partition& lam, const std::string& what) {
  return "lambda=" + lam.str() + ": " + what;
}

// ---- alpha-grid identities at level n ------------------------------------

void alpha_block(Suite& s, int n, const Rational& alpha) {
  s.check("jack_orthogonality", n, alpha, "",
          verify_jack_orthogonality(n, alpha));
  if (n >= 2) {
    s.check("pieri_up", n, alpha, "", verify_pieri_up(n - 1, alpha));
    s.check("pieri_down", n, alpha, "", verify_pieri_down(n, alpha));
    for (const auto& mu : partitions_of(n))
      s.check("theta_up", n, alpha, mu.str(),
              verify_theta_up(n - 1, mu, alpha));
  }
  for (const auto& mu : partitions_of(n))
    s.check("theta_down", n, alpha, mu.str(), verify_theta_down(n, mu, alpha));
  if (n >= 2) s.check("growth_stationarity", n, alpha,
                      "", stationarity_check(n - 1, alpha));

  // theta on the transposition class equals the alpha-content sum
  if (n >= 2) {
    bool ok = true;
    std::string bad;
    Partition tc = transposition_class(n);
    for (const auto& lam : partitions_of(n)) {
      Rational closed = alpha * Rational(lam.conjugate().n_stat()) -
                        Rational(lam.n_stat());
      if (theta(lam, tc, alpha) != closed ||
          theta_transposition(lam, alpha) != closed) {
        ok = false;
        bad = shape_note(lam, "table theta disagrees with content sum");
        break;
      }
    }
    s.row("theta_transposition_content", n, alpha, tc.str(), ok, bad);
  }

  // martingale property per class, every level below n
  if (n >= 2)
    for (const auto& mu : partitions_of(n)) {
      bool ok = true;
      std::string bad;
      for (int j = 1; j < n && ok; ++j) {
        auto c = martingale_check(j, mu, alpha);
        if (!c.ok) {
          ok = false;
          bad = c.detail;
        }
      }
      s.row("martingale", n, alpha, mu.str(), ok, bad);
    }

  // E(Y_j | top shape) closed form vs path enumeration
  if (n >= 2)
    for (const auto& mu : partitions_of(n)) {
      bool ok = true;
      std::string bad;
      for (const auto& lam : partitions_of(n)) {
        for (int j = 1; j <= n && ok; ++j)
          if (conditional_expectation_given_top(lam, j, mu, alpha) !=
              conditional_expectation_closed_form(lam, j, mu, alpha)) {
            ok = false;
            bad = shape_note(lam, "conditional expectation at j=" +
                                      std::to_string(j));
          }
        if (!ok) break;
      }
      s.row("conditional_expectation", n, alpha, mu.str(), ok, bad);
    }

  // unconditional increment and square moments vs closed forms
  if (n >= 2)
    for (const auto& mu : partitions_of(n)) {
      bool ok = true;
      std::string bad;
      for (int j = 2; j <= n && ok; ++j)
        if (increment_second_moment_bruteforce(j, mu, alpha) !=
            increment_second_moment_closed(j, mu, alpha)) {
          ok = false;
          bad = "increment moment at j=" + std::to_string(j);
        }
      for (int j = 1; j <= n && ok; ++j)
        if (second_moment_bruteforce(j, mu, alpha) !=
            second_moment_closed(j, mu, alpha)) {
          ok = false;
          bad = "square moment at j=" + std::to_string(j);
        }
      s.row("unconditional_moments", n, alpha, mu.str(), ok, bad);
    }

  s.check("square_martingale", n, alpha, "",
          square_martingale_check(n, alpha));

  // E(Delta Y)^2 for transpositions is alpha*j regardless of the shape
  if (n >= 2) {
    bool ok = true;
    std::string bad;
    Partition tc = transposition_class(n);
    for (const auto& lam : partitions_of(n - 1))
      if (conditional_increment_second_moment(lam, tc, alpha) !=
          alpha * Rational(n - 1)) {
        ok = false;
        bad = shape_note(lam, "variance is shape-dependent");
        break;
      }
    s.row("kerov_variance_constancy", n, alpha, tc.str(), ok, bad);
  }

  // branching sum: dim_alpha(lam) = sum_tau psi'(lam/tau) dim_alpha(tau)
  {
    bool ok = true;
    std::string bad;
    for (const auto& lam : partitions_of(n)) {
      Rational total(0);
      for (const auto& b : lam.removable_corners()) {
        Partition tau = lam.without_box(b);
        total += psi_prime(lam, tau, alpha) * dim_alpha(tau, alpha);
      }
      if (total != dim_alpha(lam, alpha)) {
        ok = false;
        bad = shape_note(lam, "branching sum misses dim_alpha");
        break;
      }
    }
    s.row("dimension_branching_sum", n, alpha, "", ok, bad);
  }

  // measure normalization and transpose duality
  s.row("jack_normalization", n, alpha, "",
        jack_total_mass(n, alpha) == Rational(1), "total mass is not 1");
  {
    bool ok = true;
    std::string bad;
    Rational inv = Rational(1) / alpha;
    for (const auto& lam : partitions_of(n))
      if (jack_weight(lam, alpha) != jack_weight(lam.conjugate(), inv)) {
        ok = false;
        bad = shape_note(lam, "transpose duality");
        break;
      }
    s.row("jack_duality", n, alpha, "", ok, bad);
  }

  // closed conditional moments r <= 4 against the corner sum
  {
    bool ok = true;
    std::string bad;
    for (const auto& lam : partitions_of(n))
      for (int r = 1; r <= 4 && ok; ++r)
        if (s_moment_closed(lam, r, alpha) !=
            s_moment_bruteforce(lam, r, alpha)) {
          ok = false;
          bad = shape_note(lam, "closed moment r=" + std::to_string(r));
        }
    s.row("closed_added_content_moments", n, alpha, "", ok, bad);
  }
}

// ---- alpha = 1 statements (character tables, SYT averages) ---------------

void alpha_one_block(Suite& s, int n) {
  const Rational one(1);

  // theta at alpha = 1 against the character table: theta * dim = |C| chi
  {
    const CharacterTable& tab = CharacterTable::get(n);
    bool ok = true;
    std::string bad;
    for (const auto& lam : partitions_of(n)) {
      for (const auto& mu : partitions_of(n))
        if (theta(lam, mu, one) * Rational(tab.dim(lam)) !=
            Rational(class_size(mu)) * Rational(tab.value(lam, mu))) {
          ok = false;
          bad = "lambda=" + lam.str() + " mu=" + mu.str();
          break;
        }
      if (!ok) break;
    }
    s.row("character_theta_dictionary", n, one, "", ok, bad);
  }

  // martingale property through character ratios instead of theta tables
  if (n >= 2)
    for (const auto& mu : partitions_of(n)) {
      bool ok = true;
      std::string bad;
      for (int j = 1; j < n && ok; ++j)
        for (const auto& lam : partitions_of(j)) {
          Rational expect(0);
          for (const auto& [big, p] : up_distribution(lam, one).targets)
            expect += p * y_value_class(big, mu);
          if (expect != y_value_class(lam, mu)) {
            ok = false;
            bad = shape_note(lam, "character-route step at j=" +
                                      std::to_string(j));
            break;
          }
        }
      s.row("martingale_character_route", n, one, mu.str(), ok, bad);
    }
  // average content of the j-th box over uniform standard fillings
  if (n >= 2) {
    bool ok = true;
    std::string bad;
    for (const auto& lam : partitions_of(n)) {
      Rational content_sum(0);
      for (int r = 1; r <= lam.rows(); ++r)
        for (int c = 1; c <= lam.part(r); ++c) content_sum += Rational(c - r);
      for (int j = 1; j <= n && ok; ++j)
        if (record_statistic(lam, j) !=
            Rational(j - 1) * content_sum / Rational(binomial_int(n, 2))) {
          ok = false;
          bad = shape_note(lam, "content of box " + std::to_string(j));
        }
      if (!ok) break;
    }
    s.row("syt_average_content", n, one, "", ok, bad);
  }

  // hook-measure expectations behind the semicircle limit
  if (n <= kEnumerationBound) {
    bool ok = plancherel_expect_s(n, 1).is_zero() &&
              plancherel_expect_s(n, 2) == Rational(n) &&
              plancherel_expect_s(n, 3).is_zero();
    s.row("semicircle_expectations", n, one, "", ok,
          "E(s_1), E(s_2), E(s_3) off their exact values");
  }

}

// ---- tensor-walk identities ----------------------------------------------

void walk_block(Suite& s, int n) {
  const Rational one(1);
  struct Eta {
    const char* tag;
    ClassFunction fn;
  };
  for (const auto& [tag, fn] : {Eta{"perm", permutation_character(n)},
                                Eta{"std", standard_character(n)}}) {
    std::string suffix = std::string("_") + tag;
    IrrChain chain = IrrChain::from_character(fn);
    s.check("walk_dictionary" + suffix, n, one, "",
            verify_chain_dictionary(chain));

    auto bb = burnside_brauer_check(chain);
    s.row("burnside_brauer" + suffix, n, one, "",
          bb.faithful && bb.all_covered_below_m,
          "some irreducible missing from eta^j, j < m");

    auto dia = weighted_graph_diameter(chain);
    s.row("walk_diameter" + suffix, n, one, "",
          dia.connected && dia.bounds_hold,
          "diameter or eigenvalue-count bound violated");

    bool ok = true;
    std::string bad;
    for (int j = 0; j <= 3 && ok; ++j)
      for (const auto& rho : partitions_of(n))
        if (step_probability_matrix(chain, rho, j) !=
            step_probability_charsum(chain, rho, j)) {
          ok = false;
          bad = "rho=" + rho.str() + " at j=" + std::to_string(j);
          break;
        }
    s.row("walk_step_probability" + suffix, n, one, "", ok, bad);
  }
}

}  // namespace

VerifyReport run_verify_suite(const VerifyOptions& opt) {
  if (opt.max_n < 0)
    throw std::invalid_argument("verify: max_n must be nonnegative");
  if (opt.alphas.empty())
    throw std::invalid_argument("verify: need at least one alpha");
  for (const auto& a : opt.alphas)
    if (!(a > Rational(0)))
      throw std::invalid_argument("verify: alpha must be positive");

  VerifyReport rep;
  rep.options = opt;
  Suite s(rep);
  try {
    // character-table statements first: they carry the tightest size bound,
    // so a --max-n past it stops before the expensive alpha-grid sweeps
    for (int n = 1; n <= opt.max_n; ++n) {
      alpha_one_block(s, n);
      if (n >= 2) walk_block(s, n);
      for (const auto& alpha : opt.alphas) alpha_block(s, n, alpha);
    }
  } catch (const resource_error& e) {
    rep.complete = false;
    rep.stop_reason = e.what();
  }
  return rep;
}

}  // namespace kerov
