#pragma once

#include <functional>
#include <vector>

namespace qlab {

struct QuadOptions {
  double abs_tol = 1e-14;
  double rel_tol = 1e-11;
  int max_panels = 400;  // subinterval budget; exceeding it is a failure
};

struct QuadResult {
  double value = 0;
  double error = 0;
  int panels = 0;
};

// Adaptive Gauss-Kronrod 7/15 over the panels delimited by sorted
// breakpoints. Splits the panel with the largest error estimate until the
// total estimate meets the tolerance; throws QuadratureFailure when the
// budget runs out first.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              const std::vector<double>& breakpoints, const QuadOptions& opt);

// Integral over the real line of f(x) |x|^{2alpha+1}, computed on (inner, X]
// from the symmetrized integrand. X = cutoff, or when cutoff <= 0 the first
// point of a doubling scan where the integrand has fallen 1e-18 below its
// peak. inner > 0 drops a neighbourhood of the origin, which the operator
// checks need because H divides by x^2.
QuadResult integrate_weighted_line(const std::function<double(double)>& f, double alpha,
                                   const QuadOptions& opt, double cutoff = 0.0,
                                   double inner = 0.0);

}  // namespace qlab
