#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qlab/context.hpp"

namespace qlab {

// ---------------------------------------------------------------------------
// q-shifted factorials and q-numbers
// ---------------------------------------------------------------------------

// (a; base)_n
template <class Real>
Real qpoch(Real a, Real base, int n) {
  Real p(1), t = a;
  for (int k = 0; k < n; ++k) {
    p *= Real(1) - t;
    t *= base;
  }
  return p;
}

template <class Real>
Real qpoch(Real a, int n, const QContext& ctx) {
  return qpoch(a, Real(ctx.q), n);
}

// (a; base)_inf. The remainder after N factors is prod_{k>=N}(1 - a base^k);
// with t = |a| base^N < 1 its log is bounded by s = t / ((1-t)(1-base)), so
// the relative error of the partial product is at most exp(s) - 1.
template <class Real>
TruncatedValue<Real> qpoch_inf(Real a, Real base, const QContext& ctx) {
  using std::abs;
  using std::exp;
  TruncatedValue<Real> r;
  Real p(1), t = a;
  const Real tol(ctx.series_tol);
  for (int k = 0; k <= ctx.max_terms; ++k) {
    Real at = abs(t);
    if (at < Real(0.5)) {
      Real s = at / ((Real(1) - at) * (Real(1) - base));
      Real rel = exp(s) - Real(1);
      if (rel <= tol || p == Real(0)) {
        r.value = p;
        r.tail_bound = p == Real(0) ? Real(0) : abs(p) * rel;
        r.terms_used = k;
        return r;
      }
    }
    if (k == ctx.max_terms) break;
    p *= Real(1) - t;
    t *= base;
  }
  throw NonConvergence("qpoch_inf: tail bound above series_tol at max_terms");
}

template <class Real>
TruncatedValue<Real> qpoch_inf(Real a, const QContext& ctx) {
  return qpoch_inf(a, Real(ctx.q), ctx);
}

// Value-only shorthand for the many closed forms built from infinite products.
template <class Real>
Real qpinf(Real a, Real base, const QContext& ctx) {
  return qpoch_inf(a, base, ctx).value;
}

// [[x]]_q = (1 - q^x)/(1 - q)
template <class Real>
Real qnumber(Real x, Real q) {
  using std::pow;
  return (Real(1) - pow(q, x)) / (Real(1) - q);
}

template <class Real>
Real qnumber(Real x, const QContext& ctx) {
  return qnumber(x, Real(ctx.q));
}

// [x]_b = (b^x - b^-x)/(b - 1/b)
template <class Real>
Real sym_qnumber(Real x, Real base) {
  using std::pow;
  return (pow(base, x) - pow(base, -x)) / (base - Real(1) / base);
}

// Exponent e_n with [[n]]_{q,alpha} = [[e_n]]_q.
template <class Real>
Real gen_exponent(int n, Real alpha) {
  return n % 2 == 0 ? Real(n) : Real(n) + Real(2) * alpha + Real(1);
}

template <class Real>
Real gen_qint(int n, Real q, Real alpha) {
  return qnumber(gen_exponent(n, alpha), q);
}

template <class Real = double>
Real gen_qint(int n, const QContext& ctx) {
  return gen_qint(n, Real(ctx.q), Real(ctx.alpha));
}

// (q;q)_{n,alpha} = prod_{k=1}^n (1 - q^{e_k})
template <class Real>
Real gen_qpoch(int n, Real q, Real alpha) {
  using std::pow;
  Real p(1);
  for (int k = 1; k <= n; ++k) p *= Real(1) - pow(q, gen_exponent(k, alpha));
  return p;
}

template <class Real = double>
Real gen_qpoch(int n, const QContext& ctx) {
  return gen_qpoch(n, Real(ctx.q), Real(ctx.alpha));
}

inline int theta(int n) { return n % 2 == 0 ? 1 : 0; }

// ---------------------------------------------------------------------------
// q-difference operators
// ---------------------------------------------------------------------------

enum class DerivVariant {
  backward,
  forward,
  backward_alpha,
  forward_alpha,
  delta_alpha,
  delta_alpha_plus
};

std::string to_string(DerivVariant v);
DerivVariant parse_deriv_variant(const std::string& s);

template <class Real>
struct ParityParts {
  BasicFunction<Real> even;
  BasicFunction<Real> odd;
};

template <class Real>
ParityParts<Real> parity_split(BasicFunction<Real> f) {
  return {[f](Real x) { return (f(x) + f(-x)) / Real(2); },
          [f](Real x) { return (f(x) - f(-x)) / Real(2); }};
}

namespace detail {

inline bool is_forward(DerivVariant v) {
  return v == DerivVariant::forward || v == DerivVariant::forward_alpha ||
         v == DerivVariant::delta_alpha_plus;
}

// One difference quotient given the samples g(y) and g(s y), s = q or 1/q.
// c multiplies the sample carrying the q^{2alpha+1} weight.
template <class Real>
Real quotient(Real g_here, Real g_next, Real y, Real q, Real c, bool forward) {
  if (forward) return (g_next - c * g_here) / ((Real(1) - q) * y);
  return (g_here - c * g_next) / ((Real(1) - q) * y);
}

}  // namespace detail

template <class Real>
Real qderiv(const BasicFunction<Real>& f, Real x, DerivVariant v, const QContext& ctx) {
  using std::pow;
  if (x == Real(0)) throw DomainError("qderiv: x = 0");
  const Real q(ctx.q);
  const Real c = pow(q, Real(2) * Real(ctx.alpha) + Real(1));
  const bool fwd = detail::is_forward(v);
  const Real xs = fwd ? x / q : q * x;
  switch (v) {
    case DerivVariant::backward:
    case DerivVariant::forward:
      return detail::quotient(f(x), f(xs), x, q, Real(1), fwd);
    case DerivVariant::backward_alpha:
    case DerivVariant::forward_alpha:
      return detail::quotient(f(x), f(xs), x, q, c, fwd);
    default: {
      Real fp = f(x), fm = f(-x), sp = f(xs), sm = f(-xs);
      Real e0 = (fp + fm) / Real(2), e1 = (sp + sm) / Real(2);
      Real o0 = (fp - fm) / Real(2), o1 = (sp - sm) / Real(2);
      return detail::quotient(e0, e1, x, q, Real(1), fwd) +
             detail::quotient(o0, o1, x, q, c, fwd);
    }
  }
}

// k-fold composition. The result at x only needs f on the 2(k+1) points
// +-s^j x, so the handle samples those once and applies the operator on the
// lattice instead of recursing through k nested handles.
template <class Real>
BasicFunction<Real> qderiv_pow(BasicFunction<Real> f, int k, DerivVariant v,
                               const QContext& ctx) {
  if (k < 0) throw ArgumentError("qderiv_pow: negative order");
  if (k == 0) return f;
  return [f, k, v, ctx](Real x) -> Real {
    using std::pow;
    if (x == Real(0)) throw DomainError("qderiv_pow: x = 0");
    const Real q(ctx.q);
    const Real c = pow(q, Real(2) * Real(ctx.alpha) + Real(1));
    const bool fwd = detail::is_forward(v);
    const Real s = fwd ? Real(1) / q : q;
    std::vector<Real> y(k + 1), P(k + 1), M(k + 1);
    y[0] = x;
    for (int j = 1; j <= k; ++j) y[j] = y[j - 1] * s;
    for (int j = 0; j <= k; ++j) {
      P[j] = f(y[j]);
      M[j] = f(-y[j]);
    }
    const bool delta = v == DerivVariant::delta_alpha || v == DerivVariant::delta_alpha_plus;
    const bool alpha_variant =
        v == DerivVariant::backward_alpha || v == DerivVariant::forward_alpha;
    const Real cv = alpha_variant ? c : Real(1);
    for (int step = 0; step < k; ++step) {
      const int len = k - step;
      for (int j = 0; j < len; ++j) {
        if (delta) {
          Real e0 = (P[j] + M[j]) / Real(2), e1 = (P[j + 1] + M[j + 1]) / Real(2);
          Real o0 = (P[j] - M[j]) / Real(2), o1 = (P[j + 1] - M[j + 1]) / Real(2);
          // D of the even part is odd, D_alpha of the odd part is even.
          Real A = detail::quotient(e0, e1, y[j], q, Real(1), fwd);
          Real B = detail::quotient(o0, o1, y[j], q, c, fwd);
          P[j] = A + B;
          M[j] = B - A;
        } else {
          Real p = detail::quotient(P[j], P[j + 1], y[j], q, cv, fwd);
          Real m = detail::quotient(M[j], M[j + 1], -y[j], q, cv, fwd);
          P[j] = p;
          M[j] = m;
        }
      }
    }
    return P[0];
  };
}

// Relative residual of Delta^k x^n = (q;q)_{n,alpha} x^{n-k} / ((1-q)^k (q;q)_{n-k,alpha}).
template <class Real = double>
Real monomial_delta_residual(int n, int k, Real x, const QContext& ctx) {
  using std::abs;
  if (k < 0 || k > n) throw ArgumentError("monomial_delta_residual: need 0 <= k <= n");
  const Real q(ctx.q), a(ctx.alpha);
  BasicFunction<Real> mono = [n](Real t) { return ipow(t, n); };
  Real lhs = qderiv_pow(mono, k, DerivVariant::delta_alpha, ctx)(x);
  Real rhs = gen_qpoch(n, q, a) * ipow(x, n - k) / (ipow(Real(1) - q, k) * gen_qpoch(n - k, q, a));
  return abs(lhs - rhs) / std::max(Real(1e-300), abs(rhs));
}

// ---------------------------------------------------------------------------
// Jackson q-integrals
// ---------------------------------------------------------------------------

enum class JacksonDomain { halfline, line };

namespace detail {

// Walks the lattice exponents start, start+dir, ... and accumulates
// q^n g(q^n). Inside [lo, hi] the walk stops once three consecutive terms are
// negligible against the largest seen; past the window it continues while
// terms keep shrinking, up to max_terms extra steps.
template <class Real, class G>
void jackson_walk(const G& g, Real q, int start, int dir, const QContext& ctx, Real& sum,
                  Real& tail, int& used) {
  using std::abs;
  const Real tol(ctx.series_tol);
  const int edge = dir > 0 ? ctx.lattice_hi : ctx.lattice_lo;
  Real biggest(0), prev(-1), last(0);
  int quiet = 0;
  for (int n = start;; n += dir) {
    Real yn = ipow(q, n);
    Real t = yn * g(yn);
    if (!is_finite(t)) throw NonConvergence("jackson_integral: non-finite lattice term");
    sum += t;
    ++used;
    Real at = abs(t);
    biggest = std::max(biggest, at);
    quiet = at <= tol * biggest ? quiet + 1 : 0;
    if (quiet >= 3) {
      last = at;
      break;
    }
    const bool past = dir > 0 ? n >= edge : n <= edge;
    if (past) {
      if (prev >= Real(0) && at >= prev && at > tol * biggest)
        throw NonConvergence("jackson_integral: terms not decaying at window edge");
      if (std::abs(n - edge) >= ctx.max_terms)
        throw NonConvergence("jackson_integral: window extension exhausted");
    }
    prev = at;
    last = at;
  }
  // Geometric extrapolation from the last ratio, or the last term itself.
  Real r = prev > Real(0) ? last / prev : Real(0);
  tail += r < Real(1) ? last * r / (Real(1) - r) : last;
}

}  // namespace detail

template <class Real>
TruncatedValue<Real> jackson_integral(const BasicFunction<Real>& f, JacksonDomain domain,
                                      const QContext& ctx) {
  const Real q(ctx.q);
  auto g = [&](Real y) -> Real {
    if (domain == JacksonDomain::line) return f(y) + f(-y);
    return f(y);
  };
  Real sum(0), tail(0);
  int used = 0;
  detail::jackson_walk(g, q, 0, +1, ctx, sum, tail, used);
  detail::jackson_walk(g, q, -1, -1, ctx, sum, tail, used);
  TruncatedValue<Real> r;
  r.value = (Real(1) - q) * sum;
  r.tail_bound = (Real(1) - q) * tail;
  r.terms_used = used;
  return r;
}

// Wynn epsilon algorithm. Returns the even-column estimates built from the
// tail of the table, starting with the last partial sum itself.
template <class Real>
std::vector<Real> wynn_epsilon(const std::vector<Real>& S) {
  std::vector<Real> cur = S, prev(S.size() + 1, Real(0)), est{S.back()};
  int col = 0;
  while (cur.size() > 1) {
    std::vector<Real> nxt(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      Real d = cur[i + 1] - cur[i];
      if (d == Real(0)) return est;
      nxt[i] = prev[i + 1] + Real(1) / d;
    }
    prev = std::move(cur);
    cur = std::move(nxt);
    if (++col % 2 == 0) est.push_back(cur.back());
  }
  return est;
}

enum class SummationMethod { direct, wynn_epsilon };

inline const char* to_string(SummationMethod m) {
  return m == SummationMethod::direct ? "direct" : "wynn_epsilon";
}

template <class Real>
struct ContinuedValue {
  Real value{0};
  Real error_estimate{0};
  int terms_used = 0;
  SummationMethod method = SummationMethod::direct;
};

// Half-line Jackson integral for integrands that decay towards 0 but may grow
// geometrically towards infinity, as the q-Bessel kernels do when
// x^2 > q^{2alpha+1}. Convergent sums are returned as is; otherwise the
// partial sums over the outer lattice are accelerated with Wynn's epsilon
// algorithm, which yields the analytic continuation of the sum. The error
// estimate is the spread of the two best consecutive estimates, not a bound.
template <class Real>
ContinuedValue<Real> jackson_integral_continued(const BasicFunction<Real>& f,
                                                const QContext& ctx, int outer_max = 28) {
  using std::abs;
  const Real q(ctx.q);
  Real inner(0), tail(0);
  int used = 0;
  detail::jackson_walk(f, q, 0, +1, ctx, inner, tail, used);

  const Real tol(ctx.series_tol);
  std::vector<Real> S{inner};
  Real biggest = abs(inner);
  int quiet = 0;
  for (int k = 1; k <= outer_max; ++k) {
    Real yk = ipow(q, -k);
    Real t = yk * f(yk);
    if (!is_finite(t)) break;
    S.push_back(S.back() + t);
    ++used;
    biggest = std::max(biggest, abs(t));
    quiet = abs(t) <= tol * biggest ? quiet + 1 : 0;
    if (quiet >= 3) {
      ContinuedValue<Real> r;
      r.value = (Real(1) - q) * S.back();
      r.error_estimate = (Real(1) - q) * (tail + abs(t));
      r.terms_used = used;
      return r;
    }
  }

  // Pick the prefix length whose two leading estimates agree best.
  Real best_spread(-1), best_value(0);
  for (std::size_t len = 6; len <= S.size(); ++len) {
    std::vector<Real> head(S.begin(), S.begin() + static_cast<long>(len));
    auto est = wynn_epsilon(head);
    if (est.size() < 3) continue;
    Real a = est[est.size() - 1], b = est[est.size() - 2];
    Real spread = abs(a - b);
    if (!is_finite(spread)) continue;
    if (best_spread < Real(0) || spread < best_spread) {
      best_spread = spread;
      best_value = a;
    }
  }
  if (best_spread < Real(0)) throw NonConvergence("jackson_integral_continued: no usable estimate");
  ContinuedValue<Real> r;
  r.value = (Real(1) - q) * best_value;
  r.error_estimate = (Real(1) - q) * (best_spread + tail);
  r.terms_used = used;
  r.method = SummationMethod::wynn_epsilon;
  return r;
}

}  // namespace qlab
