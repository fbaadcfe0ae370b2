#include <gtest/gtest.h>

#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "qlab/check.hpp"
#include "qlab/hermite.hpp"
#include "support.hpp"

using namespace qlab;
using qtest::ctx;
using qtest::rel;

namespace {

// Sum of the absolute summands of the defining finite sum; the literal sum
// cannot be more accurate than eps times this.
double term_scale(const HermiteFamily<double>& f, int n, double x) {
  double s = 0;
  for (int k = 0; 2 * k <= n; ++k)
    s += ipow(f.q(), -2L * n * k + long(k) * (2 * k + 1)) * ipow(std::abs(x), n - 2 * k) /
         (f.q2(k) * f.gq(n - 2 * k));
  return f.qq(n) * s;
}

}  // namespace

TEST(Hermite, Examples) {
  for (double x : {-1.0, 0.0, 2.5}) EXPECT_EQ(hermite_h(0, x, ctx(0.5, 0.25)), 1.0);
  EXPECT_DOUBLE_EQ(hermite_h(2, 0.0, ctx(0.5, 0.25)), -1.0);
  EXPECT_DOUBLE_EQ(hermite_h(1, 1.0, ctx(0.5, 0.0)), 2.0 / 3.0);
}

TEST(Hermite, ValueAtZeroClosedForm) {
  // h_{2n}(0) = (-1)^n q^{-2n^2+n} (q;q^2)_n
  for (double q : {0.3, 0.6})
    for (int n = 0; n <= 5; ++n) {
      double want = (n % 2 ? -1 : 1) * std::pow(q, -2.0 * n * n + n) * qpoch(q, q * q, n);
      EXPECT_LT(rel(hermite_h(2 * n, 0.0, ctx(q, 0.7)), want), 1e-13);
      EXPECT_EQ(hermite_h(2 * n + 1, 0.0, ctx(q, 0.7)), 0.0);
    }
}

TEST(Hermite, MatchesOracle) {
  for (const auto& o : oracle::kHermite) {
    HermiteFamily<double> f(ctx(o.q, o.alpha), 12);
    const int n = int(o.n);
    EXPECT_LE(std::abs(f.h(n, o.x) - o.value), 1e-14 * (1 + term_scale(f, n, o.x)))
        << "n=" << n << " x=" << o.x << " q=" << o.q << " a=" << o.alpha;
  }
}

TEST(Hermite, ScaledFormIsConsistent) {
  HermiteFamily<double> f(ctx(0.5, 0.25), 12);
  for (int n = 0; n <= 12; ++n)
    for (double x : {-1.3, 0.4, 2.0})
      EXPECT_LE(std::abs(f.h_scaled(n, x) - std::pow(0.5, n * n / 2.0) * f.h(n, x)),
                1e-14 * (1 + std::pow(0.5, n * n / 2.0) * term_scale(f, n, x)));
}

TEST(HermiteFamily, DegreeOutsideCacheIsRejected) {
  HermiteFamily<double> f(ctx(0.5, 0.25), 4);
  EXPECT_THROW(f.h(5, 0.3), DomainError);
  EXPECT_THROW(f.h(-1, 0.3), DomainError);
  EXPECT_THROW(qlaguerre(kDefaultNMax + 1, 0.2, 0.5, ctx(0.5, 0.0)), DomainError);
}

TEST(HermiteFamily, CachedFactorialsMatchFreshValues) {
  for (double q : qtest::kQ)
    for (double a : qtest::kAlpha) {
      HermiteFamily<double> f(ctx(q, a), kDefaultNMax);
      for (int n = 0; n <= kDefaultNMax; ++n) {
        EXPECT_LT(rel(f.gq(n), gen_qpoch(n, q, a)), 1e-14);
        EXPECT_LT(rel(f.qq(n), qpoch(q, q, n)), 1e-14);
      }
      for (int k = 0; 2 * k <= kDefaultNMax; ++k) EXPECT_LT(rel(f.q2(k), qpoch(q * q, q * q, k)), 1e-14);
    }
}

TEST(Laguerre, Examples) {
  EXPECT_EQ(qlaguerre(0, 0.3, 1.7, ctx(0.5, 0.0)), 1.0);
  // Only k=0 survives: (q^2;q^2)_1 / (q^2;q^2)_1.
  EXPECT_DOUBLE_EQ(qlaguerre(1, 0.0, 0.0, ctx(0.5, 0.0)), 1.0);
}

TEST(Laguerre, MatchesOracle) {
  for (const auto& o : oracle::kLaguerre)
    EXPECT_LT(rel(qlaguerre(int(o.n), o.order, o.x, ctx(o.q, 0.0)), o.value), 1e-13) << o.n << ' ' << o.order;
}

TEST(Laguerre, EvenHermiteCrossCheck) {
  for (double a : {0.25, 1.3}) {
    const QContext c = ctx(0.5, a);
    HermiteFamily<double> f(c, 12);
    for (int n = 0; n <= 6; ++n)
      for (double x : {0.3, 1.1}) {
        double want = (n % 2 ? -1 : 1) * std::pow(0.5, -n * (2.0 * n - 1)) * f.qq(2 * n) /
                      qpoch(std::pow(0.5, 2 * a + 2), 0.25, n) *
                      qlaguerre(n, a, std::pow(0.5, -2 * a - 1) * x * x, c);
        EXPECT_LE(std::abs(f.h(2 * n, x) - want), 1e-13 * (1 + term_scale(f, 2 * n, x)));
      }
  }
}

TEST(Weight, Examples) {
  const QContext c = ctx(0.5, 0.25);
  EXPECT_EQ(weight(0.0, c), 1.0);
  for (double x : {0.3, 1.7}) EXPECT_EQ(weight(x, c), weight(-x, c));
  double p = 1;
  for (int k = 0; k < 80; ++k) p *= 1 + std::pow(0.5, 2 * k);
  EXPECT_LT(rel(weight(1.0, ctx(0.5, -0.5)), 1 / p), 1e-14);
}

TEST(Weight, MatchesOracleAndIsPositive) {
  for (const auto& o : oracle::kWeight) {
    double w = weight(o.x, ctx(o.q, o.alpha));
    EXPECT_GT(w, 0);
    EXPECT_LT(rel(w, o.value), 1e-13) << o.x << ' ' << o.q << ' ' << o.alpha;
  }
}

TEST(NormConstants, GammaReflection) {
  EXPECT_NEAR(gamma_reflection(-0.5), boost::math::constants::pi<double>(), 1e-15);
  EXPECT_THROW(gamma_reflection(0.0), PoleError);
  EXPECT_THROW(gamma_reflection(1.0), PoleError);
  EXPECT_THROW(norm_constants(0, ctx(0.5, 2.0)), PoleError);
}

TEST(NormConstants, DegreeRatios) {
  const QContext c = ctx(0.5, 0.25);
  auto k0 = norm_constants(0, c), k1 = norm_constants(1, c);
  EXPECT_LT(rel(k1.d / k0.d, std::sqrt(0.5) * std::sqrt(gen_qpoch(1, c)) / qpoch(0.5, 0.5, 1)), 1e-14);
  for (int n = 1; n <= 8; ++n) {
    double dn = norm_constants(n, c).d, dm = norm_constants(n - 1, c).d;
    double f = std::pow(0.5, n - 0.5) * std::sqrt(gen_qint(n, c)) / (std::sqrt(0.5) * qnumber(double(n), 0.5));
    EXPECT_LT(rel(dn, f * dm), 1e-13) << n;
  }
}

TEST(NormConstants, MatchOracle) {
  for (const auto& o : oracle::kConstants) {
    const QContext c = ctx(o.q, o.alpha);
    auto k = norm_constants(0, c);
    EXPECT_LT(rel(k.c, o.c), 1e-13) << o.q << ' ' << o.alpha;
    EXPECT_LT(rel(c_constant(c), o.c), 1e-13);
    EXPECT_LT(rel(k.C_orthonormal, o.C_orthonormal), 1e-11) << o.q << ' ' << o.alpha;
    // The printed constant differs from the orthonormalizing one by a fixed power of q.
    EXPECT_LT(rel(k.C, o.C_orthonormal * std::pow(o.q, (o.alpha + 1) * (o.alpha + 0.5) / 2)), 1e-11);
  }
}

TEST(DiscreteNorm, MatchesBilateralSum) {
  for (const auto& o : oracle::kDiscreteNorm)
    EXPECT_LT(rel(discrete_norm(int(o.n), ctx(o.q, o.alpha)), o.value), 1e-12) << o.n << ' ' << o.q;
}

TEST(Relations, Examples) {
  const QContext c = ctx(0.5, 0.25);
  EXPECT_EQ(relation_residual(RelationKind::forward_shift, 0, 0.7, c), 0.0);
  EXPECT_LT(relation_residual(RelationKind::inversion, 5, 0.7, c), 1e-11);
  EXPECT_LT(relation_residual(RelationKind::qdiff, 4, 0.9, c), 1e-11);
  EXPECT_THROW(relation_residual(RelationKind::rodrigues, 3, 0.0, c), DomainError);
  EXPECT_THROW(relation_residual(RelationKind::inversion, -1, 0.5, c), ArgumentError);
  for (auto k : {RelationKind::generating, RelationKind::inversion, RelationKind::forward_shift,
                 RelationKind::backward_shift, RelationKind::qdiff, RelationKind::rodrigues})
    EXPECT_EQ(parse_relation_kind(to_string(k)), k);
}

TEST(Moments, Examples) {
  EXPECT_LT(moment_check(0, ctx(0.5, 0.0)), 1e-10);
  EXPECT_LT(moment_check(3, ctx(0.5, 0.25)), 1e-10);
  const QContext h = ctx(0.5, -0.5);
  EXPECT_LT(rel(moment_jackson(0, h), moment_closed_form(0, h, MomentForm::corrected)), 1e-10);
  // At n=0 the printed exponent only differs by q^{-2 alpha}.
  EXPECT_NEAR(moment_closed_form(0, h, MomentForm::as_printed) / moment_closed_form(0, h, MomentForm::corrected),
              0.5, 1e-14);
}

TEST(Moments, PrintedExponentDisagreesBeyondDegreeZero) {
  const QContext c = ctx(0.5, 0.25);
  EXPECT_GT(moment_check(2, c, MomentForm::as_printed), 1e-3);
  EXPECT_LT(moment_check(2, c, MomentForm::corrected), 1e-10);
}

TEST(BesselWeightTransform, Examples) {
  const QContext c = ctx(0.5, 0.25);
  auto d0 = bessel_weight_transform_detail(0.0, c);
  EXPECT_LT(d0.residual, 1e-12);
  EXPECT_LT(rel(d0.lhs, moment_jackson(0, c)), 1e-12);
  EXPECT_LT(bessel_weight_transform(0.5, c), 1e-9);
  EXPECT_LT(bessel_weight_transform(1.5, ctx(0.6, 1.0)), 1e-9);
}

TEST(IntegralRepresentation, Examples) {
  const QContext c = ctx(0.5, 0.25);
  EXPECT_LT(integral_representation_residual(0, 0.4, Parity::even, c), 1e-9);
  EXPECT_LT(integral_representation_residual(2, 0.8, Parity::even, c), 1e-8);
  EXPECT_LT(integral_representation_residual(1, 0.6, Parity::odd, c), 1e-8);
}

TEST(Orthogonality, Examples) {
  const QContext c = ctx(0.5, 0.25);
  for (auto mode : {OrthoMode::discrete_jackson, OrthoMode::continuous_quadrature}) {
    OrthoCheckParams p;
    p.n = 0;
    p.m = 1;
    p.mode = mode;
    p.normalization = Normalization::orthonormal;
    auto r = orthogonality(p, c);
    EXPECT_TRUE(r.pass) << r.residual;
    EXPECT_LT(r.residual, 1e-12);
  }
  OrthoCheckParams d;
  d.n = d.m = 2;
  EXPECT_LT(orthogonality(d, c).residual, 1e-8);
  OrthoCheckParams k;
  k.n = k.m = 3;
  k.mode = OrthoMode::continuous_quadrature;
  k.normalization = Normalization::orthonormal;
  k.tol = 1e-6;
  auto r = orthogonality(k, c);
  EXPECT_TRUE(r.pass);
  EXPECT_LT(std::abs(continuous_gram(3, 3, c, Normalization::orthonormal) - 1), 1e-6);
}

TEST(Orthogonality, RejectsTooFewQuadraturePanels) {
  EXPECT_THROW(continuous_gram(1, 1, ctx(0.5, 0.25), Normalization::orthonormal, 32), ArgumentError);
}

TEST(Orthogonality, PrintedConstantLeavesAFixedOffset) {
  const QContext c = ctx(0.5, 0.25);
  const double offset = std::pow(0.5, (1.25) * (0.75));
  for (int n : {0, 2, 5})
    EXPECT_LT(std::abs(continuous_gram(n, n, c, Normalization::as_printed) - offset), 1e-6) << n;
}

TEST(Poisson, Examples) {
  EXPECT_LT(poisson_kernel_residual(0.8, 0.3, KernelMode::general, ctx(0.5, 0.25)), 1e-8);
  EXPECT_LT(poisson_kernel_residual(0.8, 0.3, KernelMode::half_integer_corollary, ctx(0.5, 0.25)), 1e-8);
}

TEST(Poisson, RightSideIsSymmetric) {
  for (auto mode : {KernelMode::general, KernelMode::half_integer_corollary}) {
    const QContext c = ctx(0.5, 0.25);
    auto a = poisson_kernel_detail(0.8, 0.3, mode, c), b = poisson_kernel_detail(0.3, 0.8, mode, c);
    EXPECT_LT(rel(a.rhs, b.rhs), 1e-14);
  }
}

TEST(Poisson, DomainChecks) {
  const QContext c = ctx(0.5, 0.25);
  EXPECT_THROW(poisson_kernel_residual(0.5, 0.5, KernelMode::general, c), DomainError);
  EXPECT_THROW(poisson_kernel_residual(0.5, 0.5 + 1e-9, KernelMode::half_integer_corollary, c), DomainError);
  EXPECT_THROW(poisson_kernel_residual(-0.5, 0.3, KernelMode::general, c), DomainError);
}

TEST(Poisson, SeriesSideMatchesOracle) {
  for (const auto& o : oracle::kPoisson) {
    auto d = poisson_kernel_detail(o.x, o.y, KernelMode::general, ctx(o.q, o.alpha));
    EXPECT_LT(rel(d.lhs, o.series), 1e-12) << o.x << ' ' << o.y << ' ' << o.q;
    EXPECT_LT(rel(d.rhs, o.series), 1e-12);
  }
}

TEST(BesselExpansion, Examples) {
  EXPECT_LT(bessel_expansion_residual(0.5, ctx(0.5, 0.25)), 1e-9);
  EXPECT_LT(bessel_expansion_residual(1.2, ctx(0.6, 0.0)), 1e-9);
  EXPECT_LT(bessel_expansion_residual(1e-3, ctx(0.5, 0.25)), 1e-6);
  EXPECT_THROW(bessel_expansion_residual(0.0, ctx(0.5, 0.25)), DomainError);
}

TEST(BesselExpansion, SeriesSideMatchesOracle) {
  for (const auto& o : oracle::kBesselExpansion) {
    auto d = bessel_expansion_detail(o.x, ctx(o.q, o.alpha));
    EXPECT_LT(rel(d.lhs, o.series), 1e-12) << o.x << ' ' << o.q;
  }
}

TEST(RogersRamanujan, Examples) {
  EXPECT_LT(rogers_ramanujan_residual(ctx(0.5, 0.25)), 1e-12);
  EXPECT_LT(rogers_ramanujan_residual(ctx(0.8, 0.0)), 1e-10);
  EXPECT_LT(rogers_ramanujan_residual(ctx(0.5, -0.5)), 1e-12);
}

TEST(RogersRamanujan, MatchesOracle) {
  for (const auto& o : oracle::kRogersRamanujan) {
    auto d = rogers_ramanujan_detail(ctx(o.q, o.alpha));
    EXPECT_LT(rel(d.lhs, o.series), 1e-13) << o.q << ' ' << o.alpha;
    EXPECT_LT(rel(d.rhs, o.series), 1e-13);
  }
}

TEST(RogersRamanujan, PrintedSummandDoesNotSumToTheProduct) {
  EXPECT_GT(rogers_ramanujan_residual(ctx(0.5, 0.25), RRForm::as_printed), 1e-3);
}
