#include "kerov/character.hpp"

#include <vector>

#include "doctest.h"
#include "kerov/jack.hpp"
#include "kerov/measures.hpp"
#include "oracles.hpp"

using kerov::CharacterTable;
using kerov::Partition;
using kerov::Rational;

TEST_CASE("S_3 and S_4 tables match the hand tables") {
  const auto& t3 = CharacterTable::get(3);
  // classes in enumeration order: (3), (2,1), (1,1,1)
  std::vector<std::vector<long>> expect3 = {
      {1, 1, 1},    // trivial
      {-1, 0, 2},   // standard
      {1, -1, 1},   // sign
  };
  for (size_t l = 0; l < 3; ++l)
    for (size_t c = 0; c < 3; ++c)
      CHECK(t3.value_at(static_cast<int>(l), static_cast<int>(c)) ==
            expect3[l][c]);

  const auto& t4 = CharacterTable::get(4);
  // classes: (4), (3,1), (2,2), (2,1,1), (1,1,1,1)
  std::vector<std::vector<long>> expect4 = {
      {1, 1, 1, 1, 1},      // (4)
      {-1, 0, -1, 1, 3},    // (3,1)
      {0, -1, 2, 0, 2},     // (2,2)
      {1, 0, -1, -1, 3},    // (2,1,1)
      {-1, 1, 1, -1, 1},    // (1^4) sign
  };
  for (size_t l = 0; l < 5; ++l)
    for (size_t c = 0; c < 5; ++c)
      CHECK(t4.value_at(static_cast<int>(l), static_cast<int>(c)) ==
            expect4[l][c]);
}

TEST_CASE("dimensions, trivial row, sign row, transpose twist") {
  for (int n = 1; n <= 8; ++n) {
    const auto& t = CharacterTable::get(n);
    const auto& parts = t.index();
    for (const auto& lam : parts) CHECK(t.dim(lam) == kerov::syt_count(lam));
    for (const auto& mu : parts) {
      CHECK(t.value(Partition({std::vector<int>{n}}), mu) == 1);
      int sign = (n - mu.rows()) % 2 == 0 ? 1 : -1;
      CHECK(t.value(Partition(std::vector<int>(static_cast<size_t>(n), 1)),
                    mu) == sign);
      for (const auto& lam : parts)
        CHECK(t.value(lam.conjugate(), mu) == sign * t.value(lam, mu));
    }
  }
}

TEST_CASE("row and column orthogonality") {
  for (int n = 1; n <= 8; ++n) {
    const auto& t = CharacterTable::get(n);
    const auto& parts = t.index();
    const mpz_class order = kerov::factorial_int(n);
    std::vector<mpz_class> sizes;
    for (const auto& mu : parts) sizes.push_back(kerov::class_size(mu));
    const int m = static_cast<int>(parts.size());
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b) {
        mpz_class row_sum = 0;
        for (int c = 0; c < m; ++c)
          row_sum += sizes[static_cast<size_t>(c)] * t.value_at(a, c) *
                     t.value_at(b, c);
        CHECK(row_sum == (a == b ? order : 0));
        mpz_class col_sum = 0;
        for (int l = 0; l < m; ++l)
          col_sum += t.value_at(l, a) * t.value_at(l, b);
        mpz_class col_expect = 0;
        if (a == b) col_expect = order / sizes[static_cast<size_t>(a)];
        CHECK(col_sum == col_expect);
      }
  }
}

TEST_CASE("class sizes in the table order match the S_n walk") {
  for (int n = 1; n <= 5; ++n) {
    auto brute = oracle::class_sizes_bruteforce(n);
    for (const auto& mu : CharacterTable::get(n).index())
      CHECK(kerov::class_size(mu) == brute.at(mu.parts()));
  }
}

TEST_CASE("frobenius ratio equals the table ratio on transpositions") {
  CHECK(kerov::frobenius_ratio(Partition({2, 1})) == Rational(0));
  for (int n = 2; n <= 8; ++n) {
    const auto& t = CharacterTable::get(n);
    std::vector<int> tr{2};
    for (int i = 0; i < n - 2; ++i) tr.push_back(1);
    Partition transposition(tr);
    for (const auto& lam : t.index()) {
      CHECK(kerov::frobenius_ratio(lam) ==
            Rational(t.value(lam, transposition)) / Rational(t.dim(lam)));
      if (lam == Partition({std::vector<int>{n}}))
        CHECK(kerov::frobenius_ratio(lam) == Rational(1));
      if (lam.rows() == n)
        CHECK(kerov::frobenius_ratio(lam) == Rational(-1));
    }
  }
}

TEST_CASE("theta at alpha = 1 is the scaled character") {
  for (int n = 1; n <= 6; ++n) {
    const auto& t = CharacterTable::get(n);
    const auto& jt = kerov::JackTable::get(n, Rational(1));
    for (const auto& lam : t.index())
      for (const auto& mu : t.index())
        CHECK(jt.theta(lam, mu) ==
              Rational(kerov::class_size(mu)) * Rational(t.value(lam, mu)) /
                  Rational(t.dim(lam)));
  }
}

TEST_CASE("table guards") {
  CHECK_THROWS_AS(CharacterTable::get(9), kerov::resource_error);
  CHECK_THROWS_AS(CharacterTable::get(0), std::domain_error);
  CHECK_THROWS_AS(CharacterTable::get(3).value(Partition({2, 1}),
                                               Partition({4})),
                  std::domain_error);
}
