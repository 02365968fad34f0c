#pragma once

#include <gmpxx.h>

#include <vector>

#include "kerov/partition.hpp"
#include "kerov/rational.hpp"

namespace kerov {

// Exact character table of the symmetric group S_n, built by border-strip
// (Murnaghan-Nakayama) recursion on beta-sets with memoization.  Rows are
// irreducibles, columns are conjugacy classes, both in the partitions_of(n)
// enumeration order.  Tables are cached and immutable once built.
class CharacterTable {
public:
  static const CharacterTable& get(int n);  // n <= 8, else resource_error

  int n() const { return n_; }
  // irreducibles and classes share the same index set
  const std::vector<Partition>& index() const { return index_; }
  const mpz_class& value(const Partition& lam, const Partition& mu) const;
  const mpz_class& value_at(int lam_idx, int mu_idx) const;
  const mpz_class& dim(const Partition& lam) const;  // value on (1^n)
  int position(const Partition& p) const;

private:
  explicit CharacterTable(int n);

  int n_;
  std::vector<Partition> index_;
  std::vector<std::vector<mpz_class>> values_;  // [irrep][class]
};

// Character ratio on transpositions via the content-sum formula
// (n(lambda') - n(lambda)) / C(n,2); agrees with the table entry ratio.
Rational frobenius_ratio(const Partition& lam);

}  // namespace kerov
