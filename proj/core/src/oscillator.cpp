#include "qlab/oscillator.hpp"

#include <cmath>
#include <map>
#include <memory>

#include <boost/multiprecision/eigen.hpp>

#include "qlab/quad.hpp"

namespace qlab {

namespace {

template <class Real>
using MatT = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

template <class Real, class F>
MatT<Real> diag_of(int dim, F f) {
  MatT<Real> M = MatT<Real>::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) M(n, n) = f(n);
  return M;
}

// Lowering matrix with entry sqrt(v(n)) at (n-1, n).
template <class Real, class F>
MatT<Real> lowering(int dim, F v) {
  using std::sqrt;
  MatT<Real> M = MatT<Real>::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) M(n - 1, n) = sqrt(v(n));
  return M;
}

template <class Real>
double block_norm(const MatT<Real>& D, int size) {
  return static_cast<double>(D.topLeftCorner(size, size).cwiseAbs().maxCoeff());
}

template <class Real>
void require_diagonal(const MatT<Real>& M) {
  using std::abs;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (i != j && abs(M(i, j)) > Real(1e-14)) throw NotDiagonal("matrix is not diagonal");
}

template <class Real>
MatT<Real> sym_bracket(const MatT<Real>& M, Real base) {
  require_diagonal(M);
  MatT<Real> R = MatT<Real>::Zero(M.rows(), M.cols());
  for (int n = 0; n < M.rows(); ++n) R(n, n) = sym_qnumber(M(n, n), base);
  return R;
}

template <class Real>
MatT<Real> build(MatrixKind which, int dim, const QContext& ctx) {
  using std::sqrt;
  ctx.validate();
  if (dim < 3) throw DimensionError("operator matrices need dim >= 3");
  const Real q(ctx.q), a(ctx.alpha), sq = sqrt(q);
  auto gen = [&](int n) { return gen_qint(n, q, a); };
  auto bval = [&](int n) { return sym_qnumber(gen_exponent(n, a), sq); };
  const Real gamma = Real(1) / sym_qnumber(Real(2), sq);
  switch (which) {
    case MatrixKind::a: return lowering<Real>(dim, gen);
    case MatrixKind::a_plus: return lowering<Real>(dim, gen).transpose();
    case MatrixKind::N: return diag_of<Real>(dim, [](int n) { return Real(n); });
    case MatrixKind::parity_K:
      return diag_of<Real>(dim, [](int n) { return n % 2 ? Real(-1) : Real(1); });
    case MatrixKind::H: return diag_of<Real>(dim, gen);
    case MatrixKind::b: return lowering<Real>(dim, bval);
    case MatrixKind::b_plus: return lowering<Real>(dim, bval).transpose();
    case MatrixKind::K0:
      return diag_of<Real>(dim, [&](int n) { return (Real(n) + a + Real(1)) / Real(2); });
    case MatrixKind::K_plus: {
      MatT<Real> bp = lowering<Real>(dim, bval).transpose();
      return gamma * bp * bp;
    }
    case MatrixKind::K_minus: {
      MatT<Real> b = lowering<Real>(dim, bval);
      return gamma * b * b;
    }
    case MatrixKind::casimir:
    default: {
      MatT<Real> shifted =
          build<Real>(MatrixKind::K0, dim, ctx) - Real(0.5) * MatT<Real>::Identity(dim, dim);
      MatT<Real> br = sym_bracket<Real>(shifted, q);
      return br * br - build<Real>(MatrixKind::K_plus, dim, ctx) *
                           build<Real>(MatrixKind::K_minus, dim, ctx);
    }
  }
}

}  // namespace

OperatorMatrix build_matrix(MatrixKind which, int dim, const QContext& ctx) {
  return {to_string(which), build<double>(which, dim, ctx)};
}

OperatorMatrix sym_qbracket_diag(const OperatorMatrix& M, double base) {
  return {"[" + M.label + "]", sym_bracket<double>(M.entries, base)};
}

int safe_block(AlgebraRelation r) {
  switch (r) {
    case AlgebraRelation::K0_K_plus:
    case AlgebraRelation::K0_K_minus:
    case AlgebraRelation::Kminus_Kplus:
    case AlgebraRelation::casimir_even:
    case AlgebraRelation::casimir_odd:
      return 2;
    case AlgebraRelation::H_factorization:
      return 0;
    default:
      return 1;
  }
}

// The entries grow like q^{-dim/2} and number_recovery takes logarithms of
// 1 - (1-q)[[n]], which carry only about q^n of the working digits, so the
// sections are formed in binary128.
double algebra_residual(AlgebraRelation rel, int dim, const QContext& ctx) {
  using Real = quad;
  using Mat = MatT<Real>;
  using std::abs;
  using std::log;
  using std::pow;
  ctx.validate();
  const int sb = safe_block(rel);
  if (dim < sb + 3) throw DimensionError("dim too small for the relation's safe block");
  const int size = dim - sb;
  auto M = [&](MatrixKind k) { return build<Real>(k, dim, ctx); };
  const Real q(ctx.q), a(ctx.alpha), nu = a + Real(0.5), one(1);
  const Mat I = Mat::Identity(dim, dim);
  switch (rel) {
    case AlgebraRelation::N_a: {
      Mat N = M(MatrixKind::N), A = M(MatrixKind::a);
      return block_norm<Real>(N * A - A * N + A, size);
    }
    case AlgebraRelation::N_a_plus: {
      Mat N = M(MatrixKind::N), A = M(MatrixKind::a_plus);
      return block_norm<Real>(N * A - A * N - A, size);
    }
    case AlgebraRelation::K0_K_plus: {
      Mat K0 = M(MatrixKind::K0), Kp = M(MatrixKind::K_plus);
      return block_norm<Real>(K0 * Kp - Kp * K0 - Kp, size);
    }
    case AlgebraRelation::K0_K_minus: {
      Mat K0 = M(MatrixKind::K0), Km = M(MatrixKind::K_minus);
      return block_norm<Real>(K0 * Km - Km * K0 + Km, size);
    }
    case AlgebraRelation::Kminus_Kplus: {
      Mat Kp = M(MatrixKind::K_plus), Km = M(MatrixKind::K_minus);
      Mat twoK0 = Real(2) * M(MatrixKind::K0);
      return block_norm<Real>(Km * Kp - Kp * Km - sym_bracket<Real>(twoK0, q), size);
    }
    case AlgebraRelation::casimir_even:
    case AlgebraRelation::casimir_odd: {
      const int parity = rel == AlgebraRelation::casimir_even ? 0 : 1;
      const Real s = sym_qnumber((a + Real(parity)) / Real(2), q);
      const Real ev = s * s;
      Mat C = M(MatrixKind::casimir);
      Real worst(0);
      for (int i = 0; i < size; ++i) {
        if (i % 2 != parity) continue;
        for (int j = 0; j < size; ++j) {
          Real d = abs(C(i, j) - (i == j ? ev : Real(0)));
          if (d > worst) worst = d;
        }
      }
      return static_cast<double>(worst);
    }
    case AlgebraRelation::deformed_commut_plus:
    case AlgebraRelation::deformed_commut_minus: {
      const Real s = rel == AlgebraRelation::deformed_commut_plus ? one : -one;
      Mat b = M(MatrixKind::b), bp = M(MatrixKind::b_plus);
      Mat lhs = b * bp, rhs = Mat::Zero(dim, dim);
      Mat btb = bp * b;
      for (int n = 0; n < dim; ++n) {
        const Real K = n % 2 ? -one : one;
        const Real c = pow(q, s * (one + Real(2) * nu * K) / Real(2));
        lhs.row(n) -= c * btb.row(n);
        rhs(n, n) = sym_qnumber(one + Real(2) * nu * K, Real(sqrt(q))) *
                    pow(q, -s * (Real(n) + nu - nu * K) / Real(2));
      }
      return block_norm<Real>(lhs - rhs, size);
    }
    case AlgebraRelation::number_recovery: {
      Mat A = M(MatrixKind::a), Ap = M(MatrixKind::a_plus);
      Mat D1 = I - (one - q) * A * Ap, D2 = I - (one - q) * Ap * A;
      require_diagonal<Real>(D1);
      require_diagonal<Real>(D2);
      Mat R = Mat::Zero(dim, dim);
      for (int n = 0; n < size; ++n) {
        if (!(D1(n, n) > 0 && D2(n, n) > 0)) throw DomainError("logarithm of a nonpositive entry");
        R(n, n) = (log(D1(n, n)) + log(D2(n, n))) / (Real(2) * log(q)) - (a + one) - Real(n);
      }
      return block_norm<Real>(R, size);
    }
    case AlgebraRelation::H_factorization:
    default: {
      Mat A = M(MatrixKind::a), Ap = M(MatrixKind::a_plus);
      return block_norm<Real>(M(MatrixKind::H) - Ap * A, size);
    }
  }
}

namespace {

std::vector<quad> ladder_points(const QContext& ctx, int k_lo, int k_hi) {
  if (k_lo > k_hi) throw ArgumentError("empty point range");
  std::vector<quad> xs;
  for (int k = k_lo; k <= k_hi; ++k) {
    quad x = ipow(quad(ctx.q), k);
    xs.push_back(x);
    xs.push_back(-x);
  }
  return xs;
}

double scaled_gap(quad lhs, quad rhs) {
  using std::abs;
  return static_cast<double>(abs(lhs - rhs) / std::max(quad(1), quad(abs(rhs))));
}

// Caches a function on the points it has been asked for; nested ladder images
// revisit the same lattice many times.
BasicFunction<quad> memoized(BasicFunction<quad> f) {
  auto cache = std::make_shared<std::map<quad, quad>>();
  return [f, cache](quad x) {
    auto it = cache->find(x);
    if (it != cache->end()) return it->second;
    quad v = f(x);
    cache->emplace(x, v);
    return v;
  };
}

}  // namespace

double ladder_pointwise_residual(int n, Ladder which, const QContext& ctx, int k_lo, int k_hi) {
  using std::sqrt;
  ctx.validate();
  if (n < 0) throw ArgumentError("ladder_pointwise_residual: negative n");
  WaveBasis<quad> basis(ctx, n + 1);
  const quad q(ctx.q), a(ctx.alpha);
  auto fn = basis.function(n);
  double worst = 0;
  for (quad x : ladder_points(ctx, k_lo, k_hi)) {
    quad lhs = apply_ladder(fn, which, x, ctx), rhs;
    switch (which) {
      case Ladder::a: rhs = n == 0 ? quad(0) : sqrt(gen_qint(n, q, a)) * basis(n - 1, x); break;
      case Ladder::a_plus: rhs = sqrt(gen_qint(n + 1, q, a)) * basis(n + 1, x); break;
      case Ladder::H: rhs = gen_qint(n, q, a) * basis(n, x); break;
    }
    worst = std::max(worst, scaled_gap(lhs, rhs));
  }
  return worst;
}

double repeated_raising_residual(int n, const QContext& ctx, int k_lo, int k_hi) {
  using std::sqrt;
  ctx.validate();
  if (n < 0) throw ArgumentError("repeated_raising_residual: negative n");
  WaveBasis<quad> basis(ctx, n);
  const quad q(ctx.q), a(ctx.alpha);
  BasicFunction<quad> g = memoized(basis.function(0));
  quad fact(1);
  for (int k = 1; k <= n; ++k) {
    fact *= gen_qint(k, q, a);
    g = memoized([g, ctx](quad x) { return apply_ladder(g, Ladder::a_plus, x, ctx); });
  }
  double worst = 0;
  for (quad x : ladder_points(ctx, k_lo, k_hi))
    worst = std::max(worst, scaled_gap(g(x) / sqrt(fact), basis(n, x)));
  return worst;
}

double b_scaling_residual(int dim, const QContext& ctx) {
  using Real = quad;
  using std::pow;
  MatT<Real> a = build<Real>(MatrixKind::a, dim, ctx), b = build<Real>(MatrixKind::b, dim, ctx);
  const Real nu = Real(ctx.alpha) + Real(0.5);
  for (int n = 0; n < dim; ++n) {
    const Real K = n % 2 ? Real(-1) : Real(1);
    a.row(n) *= pow(Real(ctx.q), -(Real(n) + (K + Real(1)) * nu) / Real(4));
  }
  return block_norm<Real>(b - a, dim);
}

double inner_product(const FunctionHandle& f, const FunctionHandle& g, const QContext& ctx,
                     const QuadOptions& opt, double inner) {
  auto fg = [&](double x) { return f(x) * g(x); };
  return integrate_weighted_line(fg, ctx.alpha, opt, 0.0, inner).value;
}

double selfadjoint_residual(const FunctionHandle& f, const FunctionHandle& g, const QContext& ctx,
                            const QuadOptions& opt) {
  FunctionHandle Hf = [&](double x) { return apply_ladder(f, Ladder::H, x, ctx); };
  FunctionHandle Hg = [&](double x) { return apply_ladder(g, Ladder::H, x, ctx); };
  const double inner = 1e-8;
  return std::abs(inner_product(Hf, g, ctx, opt, inner) - inner_product(f, Hg, ctx, opt, inner));
}

double selfadjoint_residual(const BasicFunction<quad>& f, const BasicFunction<quad>& g,
                            const QContext& ctx, const QuadOptions& opt) {
  auto pair = [&](const BasicFunction<quad>& u, const BasicFunction<quad>& v) {
    auto prod = [&](double x) {
      quad X(x);
      return static_cast<double>(apply_ladder(u, Ladder::H, X, ctx) * v(X));
    };
    return integrate_weighted_line(prod, ctx.alpha, opt, 0.0, 1e-8).value;
  };
  return std::abs(pair(f, g) - pair(g, f));
}

std::vector<double> ladder_projection(int n, Ladder which, int mmax, const QContext& ctx,
                                      const QuadOptions& opt) {
  WaveBasis<double> basis(ctx, std::max(n, mmax) + 1);
  FunctionHandle fn = basis.function(n);
  FunctionHandle image = [&](double x) { return apply_ladder(fn, which, x, ctx); };
  std::vector<double> out;
  for (int m = 0; m <= mmax; ++m)
    out.push_back(inner_product(image, basis.function(m), ctx, opt, 1e-8));
  return out;
}

}  // namespace qlab
