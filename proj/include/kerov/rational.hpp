#pragma once

// Exact rational scalar used everywhere a weight, coefficient or probability
// is contractually exact.  Thin value wrapper over GMP's mpq_class: keeps
// gmpxx expression templates out of the rest of the code (Eigen wants a plain
// value type) and carries the "p/q" wire format used by the CLI.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace kerov {

// Thrown when a request exceeds a configured size bound (CLI maps it to its
// resource exit code).
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                  // NOLINT: implicit by design
  Rational(long n) : v_(n) {}                 // NOLINT
  Rational(long long n) : v_(static_cast<long>(n)) {
    if (static_cast<long long>(static_cast<long>(n)) != n)
      throw std::overflow_error("Rational: long long narrowing");
  }
  Rational(long num, long den);
  explicit Rational(const mpz_class& z) : v_(z) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Strict "p" / "p/q" parser (base 10, optional leading '-', q > 0 after
  // canonicalization).  Anything else is an invalid_argument.
  static Rational parse(const std::string& s);

  std::string str() const { return v_.get_str(); }  // canonical "p" or "p/q"
  double to_double() const { return v_.get_d(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_), already_canonical{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_), already_canonical{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_), already_canonical{});
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_), already_canonical{});
  }
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.v_), already_canonical{});
  }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational abs(const Rational& a) {
    return a.sign() < 0 ? -a : a;
  }

 private:
  struct already_canonical {};
  Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// r^e with integer (possibly negative) exponent.
Rational pow(const Rational& r, long e);

// Exact n!, memoized (the factorial cache the measures layer leans on).
const mpz_class& factorial_int(int n);
mpz_class binomial_int(int n, int k);
// n*(n-1)*...*(n-k+1)
mpz_class falling_factorial_int(int n, int k);

}  // namespace kerov
