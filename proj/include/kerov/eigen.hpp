#pragma once

// Eigen over the exact scalar.  Everything matrix-shaped in the lab (basis
// conversions, theta tables, character tables, chain transition matrices)
// uses these aliases; double matrices appear only on the Monte Carlo side.

#include "kerov/rational.hpp"

#include <Eigen/Core>
#include <Eigen/LU>

namespace Eigen {

template <>
struct NumTraits<kerov::Rational> : GenericNumTraits<kerov::Rational> {
  typedef kerov::Rational Real;
  typedef kerov::Rational NonInteger;
  typedef kerov::Rational Nested;
  typedef kerov::Rational Literal;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
};

}  // namespace Eigen

namespace kerov {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace kerov
