#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qlab/check.hpp"
#include "qlab/hermite.hpp"
#include "qlab/quad.hpp"
#include "qlab/quadrature.hpp"

namespace qlab {

// Basis functions phi_n(x) = d_n sqrt(omega(x)) h_n(x), evaluated through the
// scaled polynomials so the normalization q^{n^2/2} never overflows.
template <class Real = double>
class WaveBasis {
 public:
  WaveBasis(const QContext& ctx, int n_max, Normalization norm = Normalization::orthonormal)
      : fam_(ctx, n_max) {
    NormConstants k = norm_constants(0, ctx);
    Real C(norm == Normalization::orthonormal ? k.C_orthonormal : k.C);
    using std::sqrt;
    coef_.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) coef_[n] = C * sqrt(fam_.gq(n)) / fam_.qq(n);
  }

  Real operator()(int n, Real x) const {
    using std::sqrt;
    return coef_.at(n) * sqrt(fam_.weight(x)) * fam_.h_scaled(n, x);
  }

  BasicFunction<Real> function(int n) const {
    WaveBasis self = *this;
    return [self, n](Real x) { return self(n, x); };
  }

  const HermiteFamily<Real>& family() const { return fam_; }
  int n_max() const { return fam_.n_max(); }

 private:
  HermiteFamily<Real> fam_;
  std::vector<Real> coef_;
};

template <class Real = double>
Real phi(int n, Real x, const QContext& ctx, Normalization norm = Normalization::orthonormal) {
  return WaveBasis<Real>(ctx, n, norm)(n, x);
}

enum class Ladder { a, a_plus, H };

std::string to_string(Ladder l);
Ladder parse_ladder(const std::string& s);

// Applies a, a+ or H to f at x != 0. The square-root factor sits to the
// right of the dilation by q^{-1} (multiply, then dilate) and to the left of
// the dilation by q (dilate, then multiply).
template <class Real>
Real apply_ladder(const BasicFunction<Real>& f, Ladder which, Real x, const QContext& ctx) {
  using std::pow;
  using std::sqrt;
  if (x == Real(0)) throw DomainError("apply_ladder: x = 0");
  const Real q(ctx.q), a(ctx.alpha), one(1);
  const Real r = pow(q, -Real(2) * a - one);  // q^{-2alpha-1}
  auto S = [&](Real y) { return sqrt(one + r * y * y); };
  auto even = [&](Real y) { return (f(y) + f(-y)) / Real(2); };
  auto odd = [&](Real y) { return (f(y) - f(-y)) / Real(2); };
  const Real up = x / q, dn = q * x;
  switch (which) {
    case Ladder::a: {
      Real s = S(up);
      return sqrt(q) / (sqrt(one - q) * x) *
             (s * even(up) - even(x) + s * odd(up) - odd(x) / r);
    }
    case Ladder::a_plus: {
      Real s = S(x);
      return pow(q, Real(2) * a + Real(1.5)) / (sqrt(one - q) * x) *
             (s * even(dn) - even(x) + s * odd(dn) - r * odd(x));
    }
    case Ladder::H:
    default: {
      Real su = S(up), sx = S(x);
      Real fe = even(x), fo = odd(x);
      Real pre = -(one / r) / ((one - q) * x * x);
      Real he = q * r * su * even(up) + sx * even(dn) - (one + q * r + r * x * x) * fe;
      Real ho = q * su * odd(up) + sx * odd(dn) / r - (one + q / r + r * x * x) * fo;
      return pre * (he + ho);
    }
  }
}

struct OperatorMatrix {
  std::string label;
  Eigen::MatrixXd entries;
  int dim() const { return static_cast<int>(entries.rows()); }
};

enum class MatrixKind { a, a_plus, N, parity_K, H, b, b_plus, K0, K_plus, K_minus, casimir };

std::string to_string(MatrixKind k);
MatrixKind parse_matrix_kind(const std::string& s);

OperatorMatrix build_matrix(MatrixKind which, int dim, const QContext& ctx);

// Applies the symmetric q-number entrywise to the diagonal of M.
OperatorMatrix sym_qbracket_diag(const OperatorMatrix& M, double base);

enum class AlgebraRelation {
  N_a,
  N_a_plus,
  K0_K_plus,
  K0_K_minus,
  Kminus_Kplus,
  casimir_even,
  casimir_odd,
  deformed_commut_plus,
  deformed_commut_minus,
  number_recovery,
  H_factorization
};

std::string to_string(AlgebraRelation r);
AlgebraRelation parse_algebra_relation(const std::string& s);
const std::vector<AlgebraRelation>& all_algebra_relations();

// Indices dropped at the truncation edge: 2 when K+ or (b+)^2 appears, 1 for
// single raising, 0 when the identity is exact on the whole section.
int safe_block(AlgebraRelation r);

// Max-norm of LHS - RHS on the leading block of size dim - safe_block.
double algebra_residual(AlgebraRelation rel, int dim, const QContext& ctx);

// Largest |L phi_n - expected| / max(1, |expected|) over x = +-q^k,
// k_lo <= k <= k_hi, where the expected image is sqrt([[n]]) phi_{n-1} for a,
// sqrt([[n+1]]) phi_{n+1} for a+ and [[n]] phi_n for H. Evaluated in binary128.
double ladder_pointwise_residual(int n, Ladder which, const QContext& ctx, int k_lo = -3,
                                 int k_hi = 10);

// phi_n against (n!_{q,alpha})^{-1/2} (a+)^n phi_0 on x = +-q^k. The n-fold
// difference quotient loses about n log10(1/x) digits near the origin, hence
// the shorter default range.
double repeated_raising_residual(int n, const QContext& ctx, int k_lo = -3, int k_hi = 4);

// Max-norm of b - q^{-(N+(K+1)(alpha+1/2))/4} a on a dim x dim section.
double b_scaling_residual(int dim, const QContext& ctx);

// <f, g> = integral of f g |x|^{2alpha+1}.
double inner_product(const FunctionHandle& f, const FunctionHandle& g, const QContext& ctx,
                     const QuadOptions& opt = {}, double inner = 0.0);

// |<Hf, g> - <f, Hg>|. A neighbourhood |x| < 1e-8 of the origin is left out:
// H divides by x^2 and double precision cancellation dominates there.
double selfadjoint_residual(const FunctionHandle& f, const FunctionHandle& g,
                            const QContext& ctx, const QuadOptions& opt = {});

// Same residual with H applied in binary128. Near the origin H divides by x^2,
// so in double the integrand carries noise of order eps/x^2 that defeats the
// adaptive error control when the weight |x|^{2alpha+1} does not damp it.
double selfadjoint_residual(const BasicFunction<quad>& f, const BasicFunction<quad>& g,
                            const QContext& ctx, const QuadOptions& opt = {});

// Coefficients <L phi_n, phi_m>, m = 0..mmax, of a ladder image by quadrature.
std::vector<double> ladder_projection(int n, Ladder which, int mmax, const QContext& ctx,
                                      const QuadOptions& opt = {});

}  // namespace qlab
