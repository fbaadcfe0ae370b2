#pragma once

#include <cmath>
#include <string>

#include "qlab/qcore.hpp"

namespace qlab {

namespace detail {

// Sums t0 + t1 + ... with t_{n+1} = t_n * ratio(n). Stops once the ratio has
// dropped below one and the geometric tail |t_{n+1}|/(1-|r|) is below
// series_tol relative to the running sum. For the q-series here |ratio(n)|
// decreases monotonically from that point on, which makes the tail bound
// rigorous.
template <class Real, class Ratio>
TruncatedValue<Real> ratio_series(Real t0, Ratio ratio, const QContext& ctx) {
  using std::abs;
  TruncatedValue<Real> r;
  Real s = t0, t = t0;
  const Real tol(ctx.series_tol);
  if (t0 == Real(0)) return r;
  for (int n = 0; n < ctx.max_terms; ++n) {
    Real rho = ratio(n);
    Real next = t * rho;
    Real ar = abs(rho);
    if (ar < Real(1)) {
      Real bound = abs(next) / (Real(1) - ar);
      if (bound <= tol * abs(s) || next == Real(0)) {
        r.value = s + next;
        r.tail_bound = abs(next) * ar / (Real(1) - ar);
        r.terms_used = n + 2;
        return r;
      }
    }
    s += next;
    t = next;
    if (!is_finite(s)) break;
  }
  throw NonConvergence("series did not reach series_tol within max_terms");
}

}  // namespace detail

// E_b(z) = (-z; b)_inf
template <class Real>
TruncatedValue<Real> qexp_big(Real z, Real base, const QContext& ctx = QContext{}) {
  return qpoch_inf(Real(-z), base, ctx);
}

// Series route for E_b, used as the independent cross-check.
template <class Real>
TruncatedValue<Real> qexp_big_series(Real z, Real base, const QContext& ctx = QContext{}) {
  using std::pow;
  return detail::ratio_series<Real>(
      Real(1),
      [&](int k) { return pow(base, Real(k)) * z / (Real(1) - pow(base, Real(k + 1))); }, ctx);
}

// e_b(z) = 1/(z; b)_inf, valid at every non-pole real z.
template <class Real>
TruncatedValue<Real> qexp_small(Real z, Real base, const QContext& ctx = QContext{}) {
  using std::abs;
  auto p = qpoch_inf(z, base, ctx);
  Real t = z;
  for (int k = 0; k <= p.terms_used; ++k, t *= base)
    if (abs(Real(1) - t) < Real(1e-12)) throw PoleError("qexp_small: z = base^-k");
  TruncatedValue<Real> r;
  r.value = Real(1) / p.value;
  r.tail_bound = p.tail_bound / (abs(p.value) * (abs(p.value) - p.tail_bound));
  r.terms_used = p.terms_used;
  return r;
}

// |z| < 1 series of e_b, used only as a cross-check.
template <class Real>
TruncatedValue<Real> qexp_small_series(Real z, Real base, const QContext& ctx = QContext{}) {
  using std::pow;
  if (std::abs(static_cast<double>(z)) >= 1.0) throw DomainError("qexp_small_series: |z| >= 1");
  return detail::ratio_series<Real>(
      Real(1), [&](int k) { return z / (Real(1) - pow(base, Real(k + 1))); }, ctx);
}

enum class TrigKind { cos, sin };

// Cos_b and Sin_b: the even and odd parts of E_b(iz), summed as real series.
template <class Real>
Real qtrig(Real z, TrigKind which, Real base, const QContext& ctx = QContext{}) {
  using std::pow;
  if (which == TrigKind::cos) {
    return detail::ratio_series<Real>(
               Real(1),
               [&](int n) {
                 return -pow(base, Real(4 * n + 1)) * z * z /
                        ((Real(1) - pow(base, Real(2 * n + 1))) * (Real(1) - pow(base, Real(2 * n + 2))));
               },
               ctx)
        .value;
  }
  return detail::ratio_series<Real>(
             z / (Real(1) - base),
             [&](int n) {
               return -pow(base, Real(4 * n + 3)) * z * z /
                      ((Real(1) - pow(base, Real(2 * n + 2))) * (Real(1) - pow(base, Real(2 * n + 3))));
             },
             ctx)
      .value;
}

// E_{q,alpha}(z) = sum q^{k(k-1)/2} z^k / (q;q)_{k,alpha}
template <class Real>
Real qexp_gen(Real z, const QContext& ctx) {
  using std::pow;
  const Real q(ctx.q), a(ctx.alpha);
  return detail::ratio_series<Real>(
             Real(1),
             [&](int k) { return pow(q, Real(k)) * z / (Real(1) - pow(q, gen_exponent(k + 1, a))); },
             ctx)
      .value;
}

enum class BesselKind { second_jackson, hahn_exton, modified };

std::string to_string(BesselKind k);
BesselKind parse_bessel_kind(const std::string& s);

// Entire part of the q-Bessel functions: the value with the x^order (or
// (x/2)^order) power removed. The infinite-product prefactor is included for
// the two prefactored kinds. Defined for every real x.
template <class Real>
Real qbessel_reduced(Real x, Real order, BesselKind kind, const QContext& ctx) {
  using std::pow;
  const Real q(ctx.q), nu = order;
  if (order <= Real(-1)) throw DomainError("qbessel: order must exceed -1");
  const Real q2 = q * q;
  auto step = [&](int n) {
    return (Real(1) - pow(q, Real(2 * n + 2) + Real(2) * nu)) * (Real(1) - pow(q, Real(2 * n + 2)));
  };
  Real series;
  if (kind == BesselKind::second_jackson) {
    const Real h = x / Real(2);
    series = detail::ratio_series<Real>(
                 Real(1),
                 [&](int n) { return -pow(q, Real(4 * n + 2) + Real(2) * nu) * h * h / step(n); }, ctx)
                 .value;
  } else {
    series = detail::ratio_series<Real>(
                 Real(1), [&](int n) { return -pow(q, Real(2 * n + 2)) * x * x / step(n); }, ctx)
                 .value;
  }
  if (kind == BesselKind::modified) return series;
  const Real pref = qpinf(pow(q, Real(2) * nu + Real(2)), q2, ctx) / qpinf(q2, q2, ctx);
  return pref * series;
}

template <class Real>
Real qbessel(Real x, Real order, BesselKind kind, const QContext& ctx) {
  using std::floor;
  using std::pow;
  Real red = qbessel_reduced(x, order, kind, ctx);
  if (kind == BesselKind::modified) return red;
  const bool integral = floor(order) == order;
  if (x <= Real(0) && !integral)
    throw DomainError("qbessel: x must be positive for fractional order");
  Real base = kind == BesselKind::second_jackson ? x / Real(2) : x;
  Real power = integral ? ipow(base, static_cast<long>(static_cast<double>(order)))
                        : pow(base, order);
  return power * red;
}

// j_alpha(x; q^2) with alpha taken from ctx.
template <class Real>
Real jmod(Real x, const QContext& ctx) {
  return qbessel_reduced(x, Real(ctx.alpha), BesselKind::modified, ctx);
}

enum class BesselParity { even_order, odd_order };

// Residual of the Delta-operator action on x -> j_alpha(lambda x; q^2):
// Delta^{2n} for even_order, Delta^{2n+1} for odd_order (n = 0 is the single
// D_q identity). Both sides are evaluated independently and the result is
// |LHS - RHS| / max(1, |RHS|).
template <class Real>
Real bessel_delta_residual(int n, Real lambda, Real x, BesselParity parity, const QContext& ctx) {
  using std::abs;
  using std::pow;
  if (n < 0) throw ArgumentError("bessel_delta_residual: negative n");
  const Real q(ctx.q), a(ctx.alpha), one(1);
  BasicFunction<Real> j = [lambda, ctx](Real t) { return jmod(lambda * t, ctx); };
  const int k = parity == BesselParity::even_order ? 2 * n : 2 * n + 1;
  Real lhs = qderiv_pow(j, k, DerivVariant::delta_alpha, ctx)(x);
  Real rhs;
  if (parity == BesselParity::even_order) {
    rhs = (n % 2 ? -one : one) * ipow(q, long(n) * (n + 1)) * ipow(lambda, 2 * n) /
          ipow(one - q, 2 * n) * jmod(ipow(q, n) * lambda * x, ctx);
  } else {
    const QContext up = ctx.with_alpha(ctx.alpha + 1.0);
    rhs = ((n + 1) % 2 ? -one : one) * ipow(q, long(n + 1) * (n + 2)) * ipow(lambda, 2 * n + 2) /
          (ipow(one - q, 2 * n + 1) * (one - pow(q, Real(2) * a + Real(2)))) * x *
          jmod(ipow(q, n + 1) * lambda * x, up);
  }
  return abs(lhs - rhs) / std::max(one, abs(rhs));
}

}  // namespace qlab
