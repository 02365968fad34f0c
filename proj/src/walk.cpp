#include "kerov/walk.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "kerov/measures.hpp"

namespace kerov {

namespace {

ClassFunction zero_class_function(int n) {
  ClassFunction eta;
  eta.n = n;
  eta.values.assign(partitions_of(n).size(), Rational(0));
  return eta;
}

}  // namespace

ClassFunction permutation_character(int n) {
  ClassFunction eta = zero_class_function(n);
  const auto& classes = CharacterTable::get(n).index();
  for (size_t i = 0; i < classes.size(); ++i)
    eta.values[i] = Rational(classes[i].multiplicity(1));
  return eta;
}

ClassFunction standard_character(int n) {
  ClassFunction eta = permutation_character(n);
  for (auto& v : eta.values) v -= 1;
  return eta;
}

ClassFunction regular_character(int n) {
  ClassFunction eta = zero_class_function(n);
  eta.values.back() = Rational(factorial_int(n));  // identity class is (1^n)
  return eta;
}

ClassFunction irreducible_character(int n, const Partition& lam) {
  ClassFunction eta = zero_class_function(n);
  const CharacterTable& table = CharacterTable::get(n);
  const int l = table.position(lam);
  for (size_t c = 0; c < eta.values.size(); ++c)
    eta.values[c] = Rational(table.value_at(l, static_cast<int>(c)));
  return eta;
}

ClassFunction character_from_multiplicities(int n,
                                            const std::vector<long>& mult) {
  const CharacterTable& table = CharacterTable::get(n);
  if (mult.size() != table.index().size())
    throw std::domain_error("multiplicity vector of wrong length");
  ClassFunction eta = zero_class_function(n);
  for (size_t l = 0; l < mult.size(); ++l) {
    if (mult[l] == 0) continue;
    for (size_t c = 0; c < eta.values.size(); ++c)
      eta.values[c] +=
          Rational(mult[l]) *
          Rational(table.value_at(static_cast<int>(l), static_cast<int>(c)));
  }
  return eta;
}

std::vector<Rational> irreducible_multiplicities(const ClassFunction& eta) {
  const CharacterTable& table = CharacterTable::get(eta.n);
  const auto& classes = table.index();
  if (eta.values.size() != classes.size())
    throw std::domain_error("class function of wrong length");
  const Rational order{Rational(factorial_int(eta.n))};
  std::vector<Rational> mult;
  mult.reserve(classes.size());
  for (size_t l = 0; l < classes.size(); ++l) {
    Rational sum(0);
    for (size_t c = 0; c < classes.size(); ++c) {
      if (eta.values[c].is_zero()) continue;
      sum += Rational(class_size(classes[c])) * eta.values[c] *
             Rational(table.value_at(static_cast<int>(l), static_cast<int>(c)));
    }
    mult.push_back(sum / order);
  }
  return mult;
}

IrrChain::IrrChain(ClassFunction eta, RationalMatrix transition)
    : n_(eta.n), eta_(std::move(eta)), transition_(std::move(transition)) {}

IrrChain IrrChain::from_character(const ClassFunction& eta) {
  const CharacterTable& table = CharacterTable::get(eta.n);
  const auto& classes = table.index();
  if (eta.values.size() != classes.size())
    throw std::domain_error("class function of wrong length");

  // a chain needs an actual character: nonnegative integer multiplicities
  auto mult = irreducible_multiplicities(eta);
  for (const Rational& m : mult)
    if (!m.is_integer() || m.sign() < 0)
      throw std::domain_error(
          "class function is not a character (multiplicities must be "
          "nonnegative integers)");
  const Rational deg = eta.values.back();  // eta(1), identity class last
  if (deg.sign() <= 0)
    throw std::domain_error("character must have positive degree");

  const size_t m = classes.size();
  const Rational order{Rational(factorial_int(eta.n))};
  std::vector<Rational> dims(m);
  for (size_t i = 0; i < m; ++i)
    dims[i] = Rational(table.value_at(static_cast<int>(i),
                                      static_cast<int>(m - 1)));
  RationalMatrix L(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (size_t lam = 0; lam < m; ++lam)
    for (size_t rho = 0; rho < m; ++rho) {
      Rational sum(0);
      for (size_t c = 0; c < m; ++c) {
        if (eta.values[c].is_zero()) continue;
        sum += Rational(class_size(classes[c])) * eta.values[c] *
               Rational(table.value_at(static_cast<int>(lam),
                                       static_cast<int>(c))) *
               Rational(table.value_at(static_cast<int>(rho),
                                       static_cast<int>(c)));
      }
      L(static_cast<Eigen::Index>(lam), static_cast<Eigen::Index>(rho)) =
          dims[rho] * sum / (deg * dims[lam] * order);
    }
  return IrrChain(eta, std::move(L));
}

const std::vector<Partition>& IrrChain::states() const {
  return CharacterTable::get(n_).index();
}

Rational IrrChain::eta_at_identity() const { return eta_.values.back(); }

RationalVector IrrChain::stationary() const {
  const CharacterTable& table = CharacterTable::get(n_);
  const auto m = static_cast<Eigen::Index>(table.index().size());
  const Rational order{Rational(factorial_int(n_))};
  RationalVector pi(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    Rational d{Rational(table.value_at(static_cast<int>(i),
                                       static_cast<int>(m - 1)))};
    pi(i) = d * d / order;
  }
  return pi;
}

Rational IrrChain::eigenvalue(int class_idx) const {
  return eta_.values[static_cast<size_t>(class_idx)] / eta_at_identity();
}

int IrrChain::distinct_eta_values() const {
  std::set<Rational> vals(eta_.values.begin(), eta_.values.end());
  return static_cast<int>(vals.size());
}

CheckResult verify_chain_dictionary(const IrrChain& chain) {
  const CharacterTable& table = CharacterTable::get(chain.n());
  const auto& parts = table.index();
  const auto m = static_cast<Eigen::Index>(parts.size());
  const RationalMatrix& L = chain.transition();
  const Rational order{Rational(factorial_int(chain.n()))};

  for (Eigen::Index i = 0; i < m; ++i) {
    Rational row(0);
    for (Eigen::Index j = 0; j < m; ++j) {
      if (L(i, j).sign() < 0)
        return {false, "negative transition entry at row " +
                           parts[static_cast<size_t>(i)].str()};
      row += L(i, j);
    }
    if (row != Rational(1))
      return {false,
              "row sum differs from 1 at " + parts[static_cast<size_t>(i)].str()};
  }

  RationalVector pi = chain.stationary();
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      if (pi(i) * L(i, j) != pi(j) * L(j, i))
        return {false, "reversibility fails between " +
                           parts[static_cast<size_t>(i)].str() + " and " +
                           parts[static_cast<size_t>(j)].str()};

  // eigenvector equation for every class, root-free
  for (Eigen::Index c = 0; c < m; ++c) {
    RationalVector v(m);
    for (Eigen::Index r = 0; r < m; ++r)
      v(r) = Rational(table.value_at(static_cast<int>(r), static_cast<int>(c))) /
             Rational(table.value_at(static_cast<int>(r),
                                     static_cast<int>(m - 1)));
    RationalVector lv = L * v;
    Rational ev = chain.eigenvalue(static_cast<int>(c));
    for (Eigen::Index r = 0; r < m; ++r)
      if (lv(r) != ev * v(r))
        return {false, "eigenvector equation fails for class " +
                           parts[static_cast<size_t>(c)].str()};
  }

  // column orthogonality, the squared form of eigenvector orthonormality
  for (Eigen::Index c = 0; c < m; ++c)
    for (Eigen::Index d = 0; d < m; ++d) {
      Rational sum(0);
      for (Eigen::Index r = 0; r < m; ++r)
        sum += Rational(table.value_at(static_cast<int>(r),
                                       static_cast<int>(c))) *
               Rational(table.value_at(static_cast<int>(r),
                                       static_cast<int>(d)));
      Rational expect =
          c == d ? order / Rational(class_size(parts[static_cast<size_t>(c)]))
                 : Rational(0);
      if (sum != expect)
        return {false, "column orthogonality fails for classes " +
                           parts[static_cast<size_t>(c)].str() + " and " +
                           parts[static_cast<size_t>(d)].str()};
    }
  return {};
}

Rational step_probability_matrix(const IrrChain& chain, const Partition& rho,
                                 int j) {
  if (j < 0) throw std::domain_error("step count must be nonnegative");
  const CharacterTable& table = CharacterTable::get(chain.n());
  const auto m = static_cast<Eigen::Index>(table.index().size());
  RationalMatrix power = RationalMatrix::Identity(m, m);
  for (int s = 0; s < j; ++s) power = power * chain.transition();
  // the trivial representation is the one-row partition, first in the order
  return power(0, table.position(rho));
}

Rational step_probability_charsum(const IrrChain& chain, const Partition& rho,
                                  int j) {
  if (j < 0) throw std::domain_error("step count must be nonnegative");
  const CharacterTable& table = CharacterTable::get(chain.n());
  const auto& classes = table.index();
  const Rational order{Rational(factorial_int(chain.n()))};
  const int r = table.position(rho);
  Rational sum(0);
  for (size_t c = 0; c < classes.size(); ++c)
    sum += Rational(class_size(classes[c])) *
           pow(chain.eta().values[c], j) *
           Rational(table.value_at(r, static_cast<int>(c)));
  Rational dim_rho{Rational(table.value_at(
      r, static_cast<int>(classes.size() - 1)))};
  return dim_rho * sum / (pow(chain.eta_at_identity(), j) * order);
}

BurnsideBrauerReport burnside_brauer_check(const IrrChain& chain) {
  BurnsideBrauerReport report;
  const CharacterTable& table = CharacterTable::get(chain.n());
  const auto& classes = table.index();
  const Rational deg = chain.eta_at_identity();

  for (size_t c = 0; c + 1 < classes.size(); ++c)
    if (chain.eta().values[c] == deg)
      report.kernel_classes.push_back(classes[c]);
  report.faithful = report.kernel_classes.empty();
  report.m = chain.distinct_eta_values();

  const size_t m = classes.size();
  report.least_power.assign(m, -1);
  // eta^j multiplicities: dim(rho)-free inner product against each chi^rho
  const Rational order{Rational(factorial_int(chain.n()))};
  for (size_t rho = 0; rho < m; ++rho) {
    for (int j = 0; j < report.m; ++j) {
      Rational sum(0);
      for (size_t c = 0; c < m; ++c)
        sum += Rational(class_size(classes[c])) *
               pow(chain.eta().values[c], j) *
               Rational(table.value_at(static_cast<int>(rho),
                                       static_cast<int>(c)));
      if ((sum / order).sign() > 0) {
        report.least_power[rho] = j;
        break;
      }
    }
  }
  report.all_covered_below_m =
      report.faithful &&
      std::all_of(report.least_power.begin(), report.least_power.end(),
                  [](int j) { return j >= 0; });
  return report;
}

DiameterReport weighted_graph_diameter(const IrrChain& chain) {
  DiameterReport report;
  const auto m = chain.transition().rows();
  auto bfs = [&](Eigen::Index src) {
    std::vector<int> dist(static_cast<size_t>(m), -1);
    std::vector<Eigen::Index> queue{src};
    dist[static_cast<size_t>(src)] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      Eigen::Index u = queue[head];
      for (Eigen::Index v = 0; v < m; ++v) {
        if (dist[static_cast<size_t>(v)] >= 0) continue;
        if (chain.transition()(u, v).sign() > 0) {
          dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
    return dist;
  };
  report.connected = true;
  report.diameter = 0;
  for (Eigen::Index src = 0; src < m; ++src) {
    auto dist = bfs(src);
    for (int d : dist) {
      if (d < 0) report.connected = false;
      report.diameter = std::max(report.diameter, d);
    }
    if (!report.connected) break;
  }
  if (!report.connected)
    throw std::domain_error(
        "transition graph disconnected (eta cannot be faithful)");
  std::set<Rational> eigs;
  for (size_t c = 0; c < static_cast<size_t>(m); ++c)
    eigs.insert(chain.eigenvalue(static_cast<int>(c)));
  report.distinct_eigenvalues = static_cast<int>(eigs.size());
  report.m = chain.distinct_eta_values();
  report.bounds_hold = report.diameter <= report.m - 1 &&
                       report.distinct_eigenvalues >= report.diameter + 1;
  return report;
}

}  // namespace kerov
