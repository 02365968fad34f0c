#pragma once

// Integer partitions as Young diagrams, English convention, rows and columns
// 1-indexed.  A box x = (r, c) lies in the diagram iff c <= lambda_r.

#include "kerov/rational.hpp"

#include <string>
#include <vector>

namespace kerov {

struct Box {
  int row = 0;
  int col = 0;
};

inline bool operator==(const Box& a, const Box& b) {
  return a.row == b.row && a.col == b.col;
}

class Partition {
 public:
  Partition() = default;
  // parts must be weakly decreasing and strictly positive
  explicit Partition(std::vector<int> parts);

  // wire format: "4,2,1"; the empty partition prints as "-"
  static Partition parse(const std::string& s);
  std::string str() const;

  int n() const { return n_; }  // number of boxes
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int r) const {  // 1-indexed; 0 beyond the last row
    return (r >= 1 && r <= rows()) ? parts_[static_cast<std::size_t>(r - 1)] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  // height of column c (number of boxes), 0 past the first row
  int col_height(int c) const;

  bool has_box(Box x) const {
    return x.row >= 1 && x.col >= 1 && x.col <= part(x.row);
  }

  // arm = boxes strictly right in the row, leg = boxes strictly below in the
  // column, hook = arm + leg + 1.  All throw domain_error outside the diagram.
  int arm(Box x) const;
  int leg(Box x) const;
  int hook(Box x) const { return arm(x) + leg(x) + 1; }
  int content(Box x) const;  // col - row
  // alpha-deformed content alpha*(col-1) - (row-1)
  Rational alpha_content(Box x, const Rational& alpha) const;

  // n(lambda) = sum_i (i-1) * lambda_i
  long n_stat() const;

  // corners ordered top row first (i.e. by decreasing column)
  std::vector<Box> addable_corners() const;
  std::vector<Box> removable_corners() const;

  Partition with_box(Box x) const;     // x must be addable
  Partition without_box(Box x) const;  // x must be removable

  // m_v: number of parts equal to v (cycle-type bookkeeping)
  int multiplicity(int v) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }
  // sorts by size, then in the same reverse-lexicographic order the
  // enumeration uses, so sorted containers line up with partitions_of()
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return b.parts_ < a.parts_;  // lexicographically larger first
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// All partitions of n in reverse-lexicographic order:
// (n), (n-1,1), ..., (1^n).  partitions_of(0) = { empty }.
std::vector<Partition> partitions_of(int n);

// A growth path: chain[j] is the shape after j boxes, chain[0] is empty.
struct GrowthPath {
  std::vector<Partition> chain;
  int n() const { return static_cast<int>(chain.size()) - 1; }
};

// Number of standard fillings, by the hook length formula n! / prod hooks.
mpz_class syt_count(const Partition& lam);

// Every growth path from the empty shape to lam (one per standard filling).
// Exponential in |lam|; intended for desk-scale verification.
std::vector<GrowthPath> enumerate_paths(const Partition& lam);

// dominance order: sum_{i<=k} a_i >= sum_{i<=k} b_i for all k (requires equal size)
bool dominates(const Partition& a, const Partition& b);

}  // namespace kerov
