#include <gtest/gtest.h>

#include <cmath>

#include "qlab/qcore.hpp"
#include "qlab/qfunctions.hpp"
#include "qlab/quad.hpp"
#include "support.hpp"

using namespace qlab;
using qtest::ctx;
using qtest::rel;

TEST(QContext, RejectsOutOfRangeParameters) {
  EXPECT_THROW(QContext::make(1.0, 0.0), ConfigError);
  EXPECT_THROW(QContext::make(0.0, 0.0), ConfigError);
  EXPECT_THROW(QContext::make(0.5, -1.0), ConfigError);
  QContext c = ctx(0.5, 0.0);
  c.lattice_lo = 3;
  EXPECT_THROW(c.validate(), ConfigError);
  c = ctx(0.5, 0.0);
  c.max_terms = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = ctx(0.5, 0.0);
  c.series_tol = 0;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Qpoch, Examples) {
  const QContext c = ctx(0.5, 0.0);
  EXPECT_EQ(qpoch(0.7, 0, c), 1.0);
  EXPECT_EQ(qpoch(1.0, 3, c), 0.0);
  EXPECT_DOUBLE_EQ(qpoch(0.5, 2, c), 0.375);
}

TEST(QpochInf, ZeroArgumentIsExact) {
  auto v = qpoch_inf(0.0, ctx(0.5, 0.0));
  EXPECT_EQ(v.value, 1.0);
  EXPECT_EQ(v.tail_bound, 0.0);
}

TEST(QpochInf, MatchesOracleWithinTailBound) {
  for (const auto& o : oracle::kQpochInf) {
    QContext c = ctx(o.q, 0.0);
    auto v = qpoch_inf(o.a, c);
    EXPECT_LE(v.tail_bound, c.series_tol * std::max(1.0, std::abs(v.value)));
    EXPECT_LE(v.terms_used, c.max_terms);
    EXPECT_NEAR(v.value, o.value, v.tail_bound + 4e-16 * std::abs(o.value) * v.terms_used)
        << "a=" << o.a << " q=" << o.q;
  }
}

TEST(QpochInf, SpecExampleAtQ) {
  // (q;q)_inf at q = 1/2.
  EXPECT_NEAR(qpoch_inf(0.5, ctx(0.5, 0.0)).value, 0.2887880950866024, 1e-14);
}

TEST(QpochInf, NonConvergenceAtTermCap) {
  QContext c = ctx(0.8, 0.0);
  c.max_terms = 5;
  EXPECT_THROW(qpoch_inf(0.5, c), NonConvergence);
}

TEST(QNumber, Examples) {
  EXPECT_EQ(qnumber(0.0, 0.5), 0.0);
  EXPECT_DOUBLE_EQ(qnumber(1.0, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(qnumber(2.0, 0.5), 1.5);
}

TEST(SymQNumber, ExamplesAndOddness) {
  EXPECT_EQ(sym_qnumber(0.0, 0.3), 0.0);
  EXPECT_DOUBLE_EQ(sym_qnumber(1.0, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(sym_qnumber(2.0, 0.25), 4.25);
  for (double x : {0.4, 1.7, 3.2}) EXPECT_DOUBLE_EQ(sym_qnumber(-x, 0.6), -sym_qnumber(x, 0.6));
  // Tends to x as the base approaches one.
  EXPECT_NEAR(sym_qnumber(2.5, 1 - 1e-6), 2.5, 1e-6);
}

TEST(GenQInt, Examples) {
  EXPECT_EQ(gen_qint(0, 0.5, 0.3), 0.0);
  for (double a : {-0.5, 0.25, 1.3}) EXPECT_DOUBLE_EQ(gen_qint(4, 0.5, a), qnumber(4.0, 0.5));
  EXPECT_DOUBLE_EQ(gen_qint(1, 0.5, 0.0), 1.5);
  EXPECT_DOUBLE_EQ(gen_qint(3, 0.5, 0.25), qnumber(3 + 2 * 0.25 + 1, 0.5));
}

TEST(GenQpoch, Examples) {
  EXPECT_EQ(gen_qpoch(0, 0.5, 0.25), 1.0);
  EXPECT_DOUBLE_EQ(gen_qpoch(2, 0.5, 0.0), 0.5625);
  for (double q : {0.3, 0.5, 0.8}) EXPECT_LT(rel(gen_qpoch(3, q, -0.5), qpoch(q, q, 3)), 1e-15);
}

TEST(GenQpoch, MatchesOracle) {
  for (const auto& o : oracle::kGenQpoch)
    EXPECT_LT(rel(gen_qpoch(int(o.n), o.q, o.alpha), o.value), 1e-14) << o.n << ' ' << o.q;
}

TEST(GenQpoch, IsScaledFactorial) {
  const double q = 0.6, a = 0.7;
  double f = 1;
  for (int n = 1; n <= 10; ++n) {
    f *= gen_qint(n, q, a);
    EXPECT_LT(rel(gen_qpoch(n, q, a), std::pow(1 - q, n) * f), 1e-14);
  }
}

TEST(Theta, Values) {
  EXPECT_EQ(theta(0), 1);
  EXPECT_EQ(theta(1), 0);
  EXPECT_EQ(theta(7), 0);
  EXPECT_EQ(theta(10), 1);
}

TEST(ParitySplit, Examples) {
  auto sq = parity_split<double>([](double x) { return x * x; });
  auto cube = parity_split<double>([](double x) { return x * x * x; });
  auto lin = parity_split<double>([](double x) { return 1 + x; });
  for (double x : {-1.2, 0.3, 2.0}) {
    EXPECT_DOUBLE_EQ(sq.even(x), x * x);
    EXPECT_EQ(sq.odd(x), 0.0);
    EXPECT_EQ(cube.even(x), 0.0);
    EXPECT_DOUBLE_EQ(cube.odd(x), x * x * x);
  }
  EXPECT_DOUBLE_EQ(lin.even(2), 1.0);
  EXPECT_DOUBLE_EQ(lin.odd(2), 2.0);
}

TEST(QDeriv, Examples) {
  const QContext c = ctx(0.5, 0.0);
  FunctionHandle one = [](double) { return 1.0; };
  FunctionHandle id = [](double x) { return x; };
  for (double x : {-0.7, 0.4, 3.0}) EXPECT_EQ(qderiv(one, x, DerivVariant::backward, c), 0.0);
  EXPECT_DOUBLE_EQ(qderiv(id, 1.0, DerivVariant::backward, c), 1.0);
  EXPECT_DOUBLE_EQ(qderiv(id, 1.0, DerivVariant::backward_alpha, c), 1.5);
}

TEST(QDeriv, ZeroIsADomainError) {
  FunctionHandle id = [](double x) { return x; };
  for (auto v : {DerivVariant::backward, DerivVariant::forward, DerivVariant::backward_alpha,
                 DerivVariant::forward_alpha, DerivVariant::delta_alpha, DerivVariant::delta_alpha_plus})
    EXPECT_THROW(qderiv(id, 0.0, v, ctx(0.5, 0.25)), DomainError);
}

TEST(QDeriv, VariantNamesRoundTrip) {
  for (auto v : {DerivVariant::backward, DerivVariant::forward, DerivVariant::backward_alpha,
                 DerivVariant::forward_alpha, DerivVariant::delta_alpha, DerivVariant::delta_alpha_plus})
    EXPECT_EQ(parse_deriv_variant(to_string(v)), v);
  EXPECT_THROW(parse_deriv_variant("sideways"), ArgumentError);
}

TEST(QDerivPow, OrderZeroIsIdentityAndNegativeRejected) {
  const QContext c = ctx(0.5, 0.25);
  FunctionHandle f = [](double x) { return std::exp(x); };
  auto g = qderiv_pow(f, 0, DerivVariant::delta_alpha, c);
  for (double x : {-1.0, 0.0, 0.6}) EXPECT_EQ(g(x), f(x));
  EXPECT_THROW(qderiv_pow(f, -1, DerivVariant::delta_alpha, c), ArgumentError);
}

TEST(QDerivPow, MonomialRuleSpotValues) {
  const QContext c = ctx(0.5, 0.25);
  EXPECT_LT(monomial_delta_residual(5, 3, 0.7, c), 1e-13);
  EXPECT_LT(monomial_delta_residual(6, 6, -1.1, c), 1e-13);
  EXPECT_THROW(monomial_delta_residual(3, 4, 0.5, c), ArgumentError);
}

TEST(Jackson, ZeroFunction) {
  FunctionHandle z = [](double) { return 0.0; };
  EXPECT_EQ(jackson_integral(z, JacksonDomain::line, ctx(0.5, 0.0)).value, 0.0);
}

TEST(Jackson, OddFunctionOnLineVanishes) {
  FunctionHandle f = [](double y) { return y * std::exp(-y * y); };
  EXPECT_EQ(jackson_integral(f, JacksonDomain::line, ctx(0.5, 0.0)).value, 0.0);
}

TEST(Jackson, WeightMomentMatchesBilateralSum) {
  for (const auto& o : oracle::kConstants) {
    const QContext c = ctx(o.q, o.alpha);
    FunctionHandle f = [&](double y) {
      return qexp_small(-o.q * y * y, o.q * o.q, c).value * std::pow(y, 2 * o.alpha + 1);
    };
    auto v = jackson_integral(f, JacksonDomain::halfline, c);
    EXPECT_LT(rel(v.value, o.c), 1e-13) << o.q << ' ' << o.alpha;
    EXPECT_LE(v.tail_bound, 1e-13 * v.value);
  }
}

TEST(Jackson, DivergentIntegrandIsReported) {
  FunctionHandle one = [](double) { return 1.0; };
  EXPECT_THROW(jackson_integral(one, JacksonDomain::halfline, ctx(0.5, 0.0)), NonConvergence);
}

TEST(Jackson, ContinuedSumAgreesWhereDirectConverges) {
  const QContext c = ctx(0.5, 0.25);
  BasicFunction<quad> f = [](quad y) { return exp(-y * y) * y; };
  FunctionHandle g = [](double y) { return std::exp(-y * y) * y; };
  auto a = jackson_integral_continued(f, c);
  auto b = jackson_integral(g, JacksonDomain::halfline, c);
  EXPECT_LT(rel(static_cast<double>(a.value), b.value), 1e-13);
}
