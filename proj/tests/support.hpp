#pragma once

#include <algorithm>
#include <cmath>

#include "oracles/oracle_values.inc"
#include "qlab/context.hpp"

namespace qtest {

inline double rel(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline qlab::QContext ctx(double q, double alpha) { return qlab::QContext::make(q, alpha); }

// The default (q, alpha) grid of the verification suites.
inline constexpr double kQ[] = {0.3, 0.5, 0.8};
inline constexpr double kAlpha[] = {-0.5, 0.25, 1.3};

}  // namespace qtest
