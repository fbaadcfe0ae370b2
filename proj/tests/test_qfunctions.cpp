#include <gtest/gtest.h>

#include <cmath>

#include "qlab/qfunctions.hpp"
#include "qlab/quad.hpp"
#include "support.hpp"

using namespace qlab;
using qtest::ctx;
using qtest::rel;

TEST(QExpBig, Examples) {
  EXPECT_EQ(qexp_big(0.0, 0.5).value, 1.0);
  EXPECT_EQ(qexp_big(-1.0, 0.5).value, 0.0);
  EXPECT_LT(rel(qexp_big(0.3, 0.5).value, qexp_big_series(0.3, 0.5).value), 1e-13);
}

TEST(QExpSmall, Examples) {
  EXPECT_EQ(qexp_small(0.0, 0.5).value, 1.0);
  EXPECT_THROW(qexp_small(1.0, 0.5), PoleError);
  EXPECT_THROW(qexp_small(4.0, 0.5), PoleError);  // z = base^-2
  EXPECT_LT(rel(qexp_small(0.5, 0.5).value, qexp_small_series(0.5, 0.5).value), 1e-13);
  EXPECT_THROW(qexp_small_series(1.5, 0.5), DomainError);
}

TEST(QExp, MatchOracle) {
  for (const auto& o : oracle::kQExp) {
    EXPECT_LT(rel(qexp_big(o.z, o.base).value, o.big), 1e-13) << o.z << ' ' << o.base;
    EXPECT_LT(rel(qexp_small(o.z, o.base).value, o.small), 1e-13) << o.z << ' ' << o.base;
  }
}

TEST(QExpSmall, DecaysForLargeNegativeArgument) {
  double prev = 1;
  for (double z : {-1.0, -10.0, -100.0, -1000.0}) {
    double v = qexp_small(z, 0.5).value;
    EXPECT_GT(v, 0);
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_LT(prev, 1e-8);
}

TEST(QTrig, Examples) {
  EXPECT_EQ(qtrig(0.0, TrigKind::cos, 0.5), 1.0);
  EXPECT_EQ(qtrig(0.0, TrigKind::sin, 0.5), 0.0);
}

TEST(QTrig, MatchOracle) {
  for (const auto& o : oracle::kQTrig) {
    EXPECT_LT(rel(qtrig(o.z, TrigKind::cos, o.base), o.cos), 1e-13) << o.z;
    EXPECT_LT(rel(qtrig(o.z, TrigKind::sin, o.base), o.sin), 1e-13) << o.z;
  }
}

TEST(QTrig, ParityPartsOfTheExponentialSeries) {
  // E_q(iz) = sum q^{k(k-1)/2} (iz)^k/(q;q)_k; its real part is Cos_q(z) and
  // its imaginary part Sin_q(z).
  const double q = 0.5, z = 0.7;
  double re = 0, im = 0, t = 1;
  for (int k = 0; k < 80; ++k) {
    if (k > 0) t *= std::pow(q, k - 1) * z / (1 - std::pow(q, k));
    switch (k % 4) {
      case 0: re += t; break;
      case 1: im += t; break;
      case 2: re -= t; break;
      default: im -= t; break;
    }
  }
  EXPECT_LT(rel(qtrig(z, TrigKind::cos, q), re), 1e-14);
  EXPECT_LT(rel(qtrig(z, TrigKind::sin, q), im), 1e-14);
}

TEST(QExpGen, Examples) {
  EXPECT_EQ(qexp_gen(0.0, ctx(0.5, 0.25)), 1.0);
  EXPECT_LT(rel(qexp_gen(0.4, ctx(0.5, -0.5)), qexp_big(0.4, 0.5).value), 1e-14);
  // Refinement: a tighter truncation does not move the value.
  QContext fine = ctx(0.5, 0.25);
  fine.series_tol = 1e-28;
  EXPECT_LT(rel(qexp_gen(0.4, ctx(0.5, 0.25)), qexp_gen(0.4, fine)), 1e-14);
}

TEST(QExpGen, MatchOracle) {
  for (const auto& o : oracle::kQExpGen)
    EXPECT_LT(rel(qexp_gen(o.z, ctx(o.q, o.alpha)), o.value), 1e-13) << o.z << ' ' << o.q;
}

TEST(QBessel, MatchOracle) {
  for (const auto& o : oracle::kBessel) {
    const QContext c = ctx(o.q, 0.0);
    EXPECT_LT(rel(qbessel(o.x, o.order, BesselKind::second_jackson, c), o.second_jackson), 1e-13);
    EXPECT_LT(rel(qbessel(o.x, o.order, BesselKind::hahn_exton, c), o.hahn_exton), 1e-13);
    EXPECT_LT(rel(qbessel(o.x, o.order, BesselKind::modified, c), o.modified), 1e-13);
  }
}

TEST(QBessel, ModifiedAtZeroIsOne) {
  EXPECT_EQ(qbessel(0.0, 0.25, BesselKind::modified, ctx(0.5, 0.0)), 1.0);
  EXPECT_EQ(jmod(0.0, ctx(0.5, 1.3)), 1.0);
}

TEST(QBessel, DomainChecks) {
  const QContext c = ctx(0.5, 0.0);
  EXPECT_THROW(qbessel(-0.5, 0.25, BesselKind::second_jackson, c), DomainError);
  EXPECT_THROW(qbessel(0.0, 0.25, BesselKind::hahn_exton, c), DomainError);
  EXPECT_THROW(qbessel(0.5, -1.0, BesselKind::modified, c), DomainError);
  EXPECT_NO_THROW(qbessel(-0.5, 2.0, BesselKind::second_jackson, c));
  EXPECT_NO_THROW(qbessel(-0.5, 0.25, BesselKind::modified, c));
}

TEST(QBessel, KindNamesRoundTrip) {
  for (auto k : {BesselKind::second_jackson, BesselKind::hahn_exton, BesselKind::modified})
    EXPECT_EQ(parse_bessel_kind(to_string(k)), k);
  EXPECT_THROW(parse_bessel_kind("first"), ArgumentError);
}

TEST(QBessel, ModifiedIsNormalizedHahnExton) {
  for (double q : {0.3, 0.7})
    for (double a : {-0.5, 0.25, 1.3})
      for (double x : {0.2, 0.9, 2.5}) {
        const QContext c = ctx(q, a);
        double pref = qpinf(q * q, q * q, c) / qpinf(std::pow(q, 2 * a + 2), q * q, c);
        double j3 = qbessel(x, a, BesselKind::hahn_exton, c);
        EXPECT_LT(rel(jmod(x, c), pref * std::pow(x, -a) * j3), 1e-13);
      }
}

TEST(QBessel, HalfOrderTrigonometricForms) {
  const double q = 0.5, x = 0.6;
  const QContext c = ctx(q, 0.0);
  const double pref = qpinf(q, q * q, c) / (qpinf(q * q, q * q, c) * std::sqrt(x));
  EXPECT_LT(rel(qbessel(2 * x, -0.5, BesselKind::second_jackson, c), pref * qtrig(x, TrigKind::cos, q, c)),
            1e-14);
  EXPECT_LT(rel(qbessel(2 * x, 0.5, BesselKind::second_jackson, c), pref * qtrig(x, TrigKind::sin, q, c)),
            1e-14);
}

TEST(BesselDelta, Examples) {
  const QContext c = ctx(0.5, 0.25);
  EXPECT_EQ(bessel_delta_residual(0, 1.0, 0.5, BesselParity::even_order, c), 0.0);
  EXPECT_LT(bessel_delta_residual(1, 1.0, 0.5, BesselParity::even_order, c), 1e-10);
  EXPECT_LT(bessel_delta_residual(0, 1.0, 0.8, BesselParity::odd_order, c), 1e-10);
  EXPECT_THROW(bessel_delta_residual(-1, 1.0, 0.5, BesselParity::even_order, c), ArgumentError);
  EXPECT_THROW(bessel_delta_residual(1, 1.0, 0.0, BesselParity::even_order, c), DomainError);
}

TEST(BesselDelta, HigherOrdersInBinary128) {
  QContext c = ctx(0.5, 0.25);
  c.series_tol = 1e-30;
  c.max_terms = 4000;
  for (int n = 1; n <= 3; ++n)
    for (auto p : {BesselParity::even_order, BesselParity::odd_order})
      EXPECT_LT(bessel_delta_residual<quad>(n, quad(1), quad(0.9), p, c), 1e-10) << n;
}
