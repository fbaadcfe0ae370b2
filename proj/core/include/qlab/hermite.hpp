#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "qlab/qfunctions.hpp"

namespace qlab {

inline constexpr int kDefaultNMax = 40;

// Polynomials h_{n,alpha}(x;q) with cached factorial tables.
//
// Two evaluations are offered. h() is the literal finite sum; its
// coefficients carry q^{-2nk} and overflow long before the kernel sums
// converge at q close to one. h_scaled() returns q^{n^2/2} h_n(x), whose
// summand exponents (n-2k)^2/2 + k are all nonnegative, and is what the
// bilinear and Bessel-expansion sums use.
template <class Real = double>
class HermiteFamily {
 public:
  explicit HermiteFamily(const QContext& ctx, int n_max = kDefaultNMax)
      : ctx_(ctx), q_(ctx.q), a_(ctx.alpha), n_max_(n_max) {
    using std::sqrt;
    ctx_.validate();
    sq_ = sqrt(q_);
    qq_.resize(n_max + 1);
    gq_.resize(n_max + 1);
    q2_.resize(n_max / 2 + 2);
    qq_[0] = gq_[0] = q2_[0] = Real(1);
    for (int n = 1; n <= n_max; ++n) {
      qq_[n] = qq_[n - 1] * (Real(1) - ipow(q_, n));
      gq_[n] = gq_[n - 1] * (Real(1) - pow_q(gen_exponent(n, a_)));
    }
    for (std::size_t k = 1; k < q2_.size(); ++k)
      q2_[k] = q2_[k - 1] * (Real(1) - ipow(q_, 2 * static_cast<long>(k)));
  }

  const QContext& context() const { return ctx_; }
  int n_max() const { return n_max_; }
  Real q() const { return q_; }
  Real alpha() const { return a_; }

  Real qq(int n) const { return qq_.at(check(n)); }     // (q;q)_n
  Real gq(int n) const { return gq_.at(check(n)); }     // (q;q)_{n,alpha}
  Real q2(int k) const { return q2_.at(check(2 * k) / 2); }  // (q^2;q^2)_k

  Real h(int n, Real x) const {
    check(n);
    Real s(0);
    for (int k = 0; 2 * k <= n; ++k) {
      long e = -2L * n * k + long(k) * (2 * k + 1);
      Real t = ipow(q_, e) * ipow(x, n - 2 * k) / (q2_[k] * gq_[n - 2 * k]);
      s += k % 2 ? -t : t;
    }
    return qq_[n] * s;
  }

  Real h_scaled(int n, Real x) const {
    check(n);
    Real s(0);
    for (int k = 0; 2 * k <= n; ++k) {
      long m = n - 2 * k;
      Real t = ipow(sq_, m * m + 2 * k) * ipow(x, m) / (q2_[k] * gq_[m]);
      s += k % 2 ? -t : t;
    }
    return qq_[n] * s;
  }

  // Route through the q-Laguerre polynomials, used as an independent oracle
  // for h().
  Real h_laguerre(int n, Real x) const;

  Real weight(Real x) const {
    using std::pow;
    Real z = -pow(q_, Real(-2) * a_ - Real(1)) * x * x;
    return qexp_small(z, q_ * q_, ctx_).value;
  }

 private:
  int check(int n) const {
    if (n < 0 || n > n_max_) throw DomainError("hermite: degree outside [0, N_max]");
    return n;
  }
  Real pow_q(Real e) const {
    using std::pow;
    return pow(q_, e);
  }

  QContext ctx_;
  Real q_, a_, sq_;
  int n_max_;
  std::vector<Real> qq_, gq_, q2_;
};

// L_n^{(order)}(x; q^2) written with generalized q-shifted factorials.
template <class Real>
Real qlaguerre(int n, Real order, Real x, const QContext& ctx) {
  using std::pow;
  if (n < 0 || n > kDefaultNMax) throw DomainError("qlaguerre: degree outside [0, N_max]");
  const Real q(ctx.q), q2 = q * q;
  Real s(0);
  for (int k = 0; k <= n; ++k) {
    Real t = pow(q, Real(2 * k) * (Real(k) + order)) * ipow(x, k) /
             (gen_qpoch(2 * k, q, order) * qpoch(q2, q2, n - k));
    s += k % 2 ? -t : t;
  }
  return qpoch(pow(q, Real(2) * order + Real(2)), q2, n) * s;
}

template <class Real>
Real HermiteFamily<Real>::h_laguerre(int n, Real x) const {
  using std::pow;
  check(n);
  const int m = n / 2;
  const Real q2 = q_ * q_;
  const Real arg = pow(q_, Real(-2) * a_ - Real(1)) * x * x;
  const Real sign = m % 2 ? Real(-1) : Real(1);
  const Real base = pow(q_, Real(2) * a_ + Real(2));
  if (n % 2 == 0) {
    return sign * ipow(q_, -long(m) * (2 * m - 1)) * qq_[n] / qpoch(base, q2, m) *
           qlaguerre(m, a_, arg, ctx_);
  }
  return sign * ipow(q_, -long(m) * (2 * m + 1)) * qq_[n] / qpoch(base, q2, m + 1) * x *
         qlaguerre(m, a_ + Real(1), arg, ctx_);
}

template <class Real = double>
Real hermite_h(int n, Real x, const QContext& ctx) {
  return HermiteFamily<Real>(ctx, std::max(n, 0)).h(n, x);
}

template <class Real = double>
Real weight(Real x, const QContext& ctx) {
  return HermiteFamily<Real>(ctx, 0).weight(x);
}

// ---------------------------------------------------------------------------
// Normalization constants
// ---------------------------------------------------------------------------

struct NormConstants {
  double d = 0;   // d_{n,alpha} as printed
  double C = 0;   // C_alpha as printed
  double c = 0;   // c_{q,alpha}
  // C_alpha that makes {phi_n} orthonormal. The printed constant is off by
  // the factor q^{(alpha+1)(alpha+1/2)/2}; see the orthogonality checks.
  double C_orthonormal = 0;
  double d_orthonormal = 0;
};

// Gamma(-alpha) Gamma(alpha+1) = -pi / sin(pi alpha). Throws PoleError at
// integer alpha.
double gamma_reflection(double alpha);

double c_constant(const QContext& ctx);
NormConstants norm_constants(int n, const QContext& ctx);

// ---------------------------------------------------------------------------
// Identity residuals (double precision drivers)
// ---------------------------------------------------------------------------

enum class RelationKind { generating, inversion, forward_shift, backward_shift, qdiff, rodrigues };

std::string to_string(RelationKind k);
RelationKind parse_relation_kind(const std::string& s);

// |LHS - RHS| scaled by max(1, sum of |terms| on both sides). For the
// generating relation `point` is x and `z` the series variable; n is unused.
double relation_residual(RelationKind kind, int n, double point, const QContext& ctx,
                         double z = 0.0);

enum class MomentForm { corrected, as_printed };

// Closed form of the half-line moment of e_{q^2}(-q y^2) y^{2n+2alpha+1}.
double moment_closed_form(int n, const QContext& ctx, MomentForm form = MomentForm::corrected);
double moment_jackson(int n, const QContext& ctx);
double moment_check(int n, const QContext& ctx, MomentForm form = MomentForm::corrected);

struct ContinuedResidual {
  double residual = 0;
  double lhs = 0;
  double rhs = 0;
  double error_estimate = 0;
  int terms_used = 0;
  SummationMethod method = SummationMethod::direct;
};

// Weight-Bessel transform: relative residual of the half-line Jackson
// integral of e_{q^2}(-q y^2) j_alpha(xy) y^{2alpha+1} against
// c_{q,alpha} omega_alpha(x). Evaluated in binary128.
ContinuedResidual bessel_weight_transform_detail(double x, const QContext& ctx);
double bessel_weight_transform(double x, const QContext& ctx);

enum class Parity { even, odd };

// q-integral representation of h_{2n} (even) or h_{2n+1} (odd); residual
// normalized by |h| + 1. Evaluated in binary128.
ContinuedResidual integral_representation_detail(int n, double x, Parity parity,
                                                 const QContext& ctx);
double integral_representation_residual(int n, double x, Parity parity, const QContext& ctx);

enum class OrthoMode { discrete_jackson, continuous_quadrature };
enum class Normalization { as_printed, orthonormal };

struct OrthoCheckParams {
  int n = 0;
  int m = 0;
  OrthoMode mode = OrthoMode::discrete_jackson;
  int quad_points = 400;      // subinterval budget of the adaptive scheme
  double quad_cutoff = 0.0;   // 0 selects X from the weight decay
  double tol = 1e-8;
  Normalization normalization = Normalization::as_printed;
};

struct CheckResult;
CheckResult orthogonality(const OrthoCheckParams& params, const QContext& ctx);

// Right-hand side of the discrete orthogonality relation for n = m.
double discrete_norm(int n, const QContext& ctx);

// d_n d_m times the weighted integral of h_n h_m over the real line.
double continuous_gram(int n, int m, const QContext& ctx, Normalization norm,
                       int quad_points = 400, double quad_cutoff = 0.0);

enum class KernelMode { general, half_integer_corollary };

struct SeriesResidual {
  double residual = 0;
  double lhs = 0;
  double rhs = 0;
  int terms_used = 0;
};

SeriesResidual poisson_kernel_detail(double x, double y, KernelMode which, const QContext& ctx);
double poisson_kernel_residual(double x, double y, KernelMode which, const QContext& ctx);

SeriesResidual bessel_expansion_detail(double x, const QContext& ctx);
double bessel_expansion_residual(double x, const QContext& ctx);

enum class RRForm { corrected, as_printed };

SeriesResidual rogers_ramanujan_detail(const QContext& ctx, RRForm form = RRForm::corrected);
double rogers_ramanujan_residual(const QContext& ctx, RRForm form = RRForm::corrected);

}  // namespace qlab
