#include "kerov/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kerov {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& s) {
  if (s == "-") return Partition();
  std::vector<int> parts;
  std::size_t i = 0;
  while (true) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("bad partition: '" + s + "'");
    parts.push_back(std::stoi(s.substr(start, i - start)));
    if (i == s.size()) break;
    if (s[i] != ',') throw std::invalid_argument("bad partition: '" + s + "'");
    ++i;
  }
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (!parts_.empty()) {
    conj.resize(static_cast<std::size_t>(parts_[0]));
    for (int c = 1; c <= parts_[0]; ++c) conj[static_cast<std::size_t>(c - 1)] = col_height(c);
  }
  return Partition(std::move(conj));
}

int Partition::col_height(int c) const {
  if (c < 1) throw std::domain_error("column index must be >= 1");
  int h = 0;
  for (int p : parts_) {
    if (p >= c)
      ++h;
    else
      break;
  }
  return h;
}

int Partition::arm(Box x) const {
  if (!has_box(x)) throw std::domain_error("box outside diagram");
  return part(x.row) - x.col;
}

int Partition::leg(Box x) const {
  if (!has_box(x)) throw std::domain_error("box outside diagram");
  return col_height(x.col) - x.row;
}

int Partition::content(Box x) const {
  if (!has_box(x)) throw std::domain_error("box outside diagram");
  return x.col - x.row;
}

Rational Partition::alpha_content(Box x, const Rational& alpha) const {
  if (!has_box(x)) throw std::domain_error("box outside diagram");
  return alpha * Rational(x.col - 1) - Rational(x.row - 1);
}

long Partition::n_stat() const {
  long s = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
  return s;
}

std::vector<Box> Partition::addable_corners() const {
  std::vector<Box> out;
  int r = 1;
  for (; r <= rows(); ++r) {
    // row r can grow iff the row above is strictly longer (or r == 1)
    if (r == 1 || part(r - 1) > part(r)) out.push_back({r, part(r) + 1});
  }
  out.push_back({r, 1});  // fresh row below
  return out;
}

std::vector<Box> Partition::removable_corners() const {
  std::vector<Box> out;
  for (int r = 1; r <= rows(); ++r) {
    if (part(r) > part(r + 1)) out.push_back({r, part(r)});
  }
  return out;
}

Partition Partition::with_box(Box x) const {
  if (x.row < 1 || x.col < 1 || x.col != part(x.row) + 1 ||
      (x.row > 1 && part(x.row - 1) < x.col))
    throw std::domain_error("box is not addable");
  std::vector<int> p = parts_;
  if (x.row == rows() + 1)
    p.push_back(1);
  else
    p[static_cast<std::size_t>(x.row - 1)] += 1;
  return Partition(std::move(p));
}

Partition Partition::without_box(Box x) const {
  if (!has_box(x) || x.col != part(x.row) || part(x.row + 1) == part(x.row))
    throw std::domain_error("box is not removable");
  std::vector<int> p = parts_;
  p[static_cast<std::size_t>(x.row - 1)] -= 1;
  if (p.back() == 0) p.pop_back();
  return Partition(std::move(p));
}

int Partition::multiplicity(int v) const {
  int m = 0;
  for (int p : parts_) m += (p == v);
  return m;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::domain_error("partitions_of: negative n");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // descending reverse-lex walk: start at (n), repeatedly find the last part
  // > 1, decrement it, and re-pack the leftover as large as possible
  std::vector<int> cur{n};
  while (true) {
    out.push_back(Partition(cur));
    int i = static_cast<int>(cur.size()) - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == 1) --i;
    if (i < 0) break;
    int rem = static_cast<int>(cur.size()) - 1 - i;  // number of trailing 1s
    int v = cur[static_cast<std::size_t>(i)] - 1;
    cur.resize(static_cast<std::size_t>(i));
    int left = v + 1 + rem;  // boxes to redistribute in parts of size <= v
    while (left > 0) {
      int take = std::min(v, left);
      cur.push_back(take);
      left -= take;
    }
  }
  return out;
}

mpz_class syt_count(const Partition& lam) {
  mpz_class hooks = 1;
  for (int r = 1; r <= lam.rows(); ++r)
    for (int c = 1; c <= lam.part(r); ++c) hooks *= lam.hook({r, c});
  mpz_class f = factorial_int(lam.n());
  // hook length formula divides exactly
  mpz_class q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), f.get_mpz_t(), hooks.get_mpz_t());
  if (rem != 0) throw std::logic_error("hook product does not divide n!");
  return q;
}

namespace {

void paths_rec(const Partition& lam, std::vector<GrowthPath>& out, std::vector<Partition>& stack) {
  if (lam.n() == 0) {
    GrowthPath p;
    p.chain.push_back(Partition());
    p.chain.insert(p.chain.end(), stack.rbegin(), stack.rend());
    out.push_back(std::move(p));
    return;
  }
  for (const Box& b : lam.removable_corners()) {
    stack.push_back(lam);
    Partition smaller = lam.without_box(b);
    paths_rec(smaller, out, stack);
    stack.pop_back();
  }
}

}  // namespace

std::vector<GrowthPath> enumerate_paths(const Partition& lam) {
  std::vector<GrowthPath> out;
  std::vector<Partition> stack;
  paths_rec(lam, out, stack);
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw std::domain_error("dominance needs equal sizes");
  long sa = 0, sb = 0;
  int k = std::max(a.rows(), b.rows());
  for (int i = 1; i <= k; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
  }
  return true;
}

}  // namespace kerov
