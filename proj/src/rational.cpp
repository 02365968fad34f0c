#include "kerov/rational.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <ostream>

namespace kerov {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& s) {
  // grammar: -?digits(/digits)?   (no spaces, no '+', denominator nonzero)
  auto fail = [&] { throw std::invalid_argument("not a rational: '" + s + "'"); };
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_begin) fail();
  if (i < s.size()) {
    if (s[i] != '/') fail();
    ++i;
    std::size_t den_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_begin || i != s.size()) fail();
    mpz_class num(s.substr(0, den_begin - 1), 10);
    mpz_class den(s.substr(den_begin), 10);
    if (sgn(den) == 0) fail();
    return Rational(num, den);
  }
  return Rational(mpz_class(s, 10));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (invert && r.is_zero()) throw std::domain_error("pow: 0 to negative power");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), r.den().get_mpz_t(), k);
  return invert ? Rational(den, num) : Rational(num, den);
}

const mpz_class& factorial_int(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  // deque: growth never moves existing entries, so returned references stay
  // valid after the lock is released
  static std::deque<mpz_class> cache{mpz_class(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    mpz_class next = cache.back() * static_cast<long>(cache.size());
    cache.push_back(next);
  }
  return cache[static_cast<std::size_t>(n)];
}

mpz_class binomial_int(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class falling_factorial_int(int n, int k) {
  if (k < 0) throw std::domain_error("falling factorial: negative length");
  mpz_class r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

}  // namespace kerov
