#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include <boost/math/special_functions/fpclassify.hpp>

#include "qlab/errors.hpp"

namespace qlab {

// Evaluation parameters threaded through every operation.
struct QContext {
  double q = 0.5;
  double alpha = 0.0;
  double series_tol = 1e-14;
  int max_terms = 400;
  int lattice_lo = -40;
  int lattice_hi = 120;

  // Throws ConfigError when an invariant is violated.
  void validate() const;

  // Validated context with default truncation settings.
  static QContext make(double q, double alpha);

  // Same (q, alpha) with a different alpha, used for the shifted Bessel
  // orders and the Laguerre route.
  QContext with_alpha(double a) const {
    QContext c = *this;
    c.alpha = a;
    return c;
  }
};

// A truncated infinite sum or product. tail_bound bounds the discarded
// remainder in absolute terms; convergence means it is at most
// series_tol * max(1, |value|).
template <class Real = double>
struct TruncatedValue {
  Real value{0};
  Real tail_bound{0};
  int terms_used = 0;
};

template <class Real = double>
using BasicFunction = std::function<Real(Real)>;

using FunctionHandle = BasicFunction<double>;

// x^n by repeated squaring; n may be negative.
template <class Real>
Real ipow(Real x, long n) {
  if (n < 0) return Real(1) / ipow(x, -n);
  Real r(1);
  while (n) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}

template <class Real>
bool is_finite(const Real& x) {
  return (boost::math::isfinite)(x);
}

// Machine epsilon of Real, also valid for boost's float128 wrapper.
template <class Real>
Real real_epsilon() {
  return std::numeric_limits<Real>::epsilon();
}

}  // namespace qlab
