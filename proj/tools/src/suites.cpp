#include "qlab_cli/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

#include "qlab/hermite.hpp"
#include "qlab/oscillator.hpp"
#include "qlab/quad.hpp"

namespace qlab::cli {

namespace {

using Items = std::vector<SuiteItem>;

long long I(int v) { return v; }

double gap(double lhs, double rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)); }

double rel_gap(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
}

bool is_half(double alpha) { return alpha == -0.5; }

QContext make_ctx(const SuiteConfig& cfg, double q, double a) {
  QContext c = QContext::make(q, a);
  c.max_terms = cfg.max_terms;
  return c;
}

ParamList qa(double q, double a) { return {{"q", q}, {"alpha", a}}; }

ParamList with(ParamList p, const ParamList& more) {
  p.insert(p.end(), more.begin(), more.end());
  return p;
}

const double kSignedX[] = {0.3, -0.3, 0.7, -0.7, 1.5, -1.5};

// Discrete q-Hermite II polynomials from their three-term recurrence; the
// alpha = -1/2 collapse is checked against these.
double classical_hermite(int n, double x, double q) {
  double prev = 1, cur = x;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    double next = x * cur - std::pow(q, -2.0 * k + 1) * (1 - ipow(q, k)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// ---------------------------------------------------------------------------

void qcalculus(Items& out, const SuiteConfig& cfg, double q, double a, bool first_alpha) {
  const QContext c = make_ctx(cfg, q, a);
  for (int n = 0; n <= 12; ++n) {
    out.push_back({"monomial_delta", with(qa(q, a), {{"n", I(n)}}), 1e-12, [c, n] {
                     double w = 0;
                     for (int k = 0; k <= n; ++k)
                       for (double x : {0.3, -0.3, 1.1, -1.1})
                         w = std::max(w, monomial_delta_residual(n, k, x, c));
                     return Outcome{w};
                   }});
  }
  out.push_back({"gen_qpoch_products", qa(q, a), 1e-13, [c, q, a] {
                   double w = 0;
                   for (int n = 0; n <= 20; ++n) {
                     const int m = n / 2;
                     double pr = qpoch(q * q, q * q, m) *
                                 qpoch(std::pow(q, 2 * a + 2), q * q, n % 2 ? m + 1 : m);
                     w = std::max(w, rel_gap(gen_qpoch(n, c), pr));
                   }
                   return Outcome{w};
                 }});
  out.push_back({"delta_parity_split", qa(q, a), 1e-13, [c] {
                   FunctionHandle even = [](double x) { return 1 / (1 + x * x); };
                   FunctionHandle odd = [](double x) { return x / (1 + x * x); };
                   double w = 0;
                   for (double x : {0.3, -0.3, 0.9, -0.9}) {
                     w = std::max(w, gap(qderiv(even, x, DerivVariant::delta_alpha, c),
                                         qderiv(even, x, DerivVariant::backward, c)));
                     w = std::max(w, gap(qderiv(odd, x, DerivVariant::delta_alpha, c),
                                         qderiv(odd, x, DerivVariant::backward_alpha, c)));
                   }
                   return Outcome{w};
                 }});
  // Judged against its own tail budget: the residual is the discrepancy
  // divided by the summed tail bounds, so the tolerance is one.
  out.push_back({"jackson_linearity", qa(q, a), 1.0, [c, a] {
                   const double p = 2 * a + 1;
                   FunctionHandle f = [&](double y) { return qexp_small(-c.q * y * y, c.q * c.q, c).value * std::pow(y, p); };
                   FunctionHandle g = [&](double y) { return f(y) * y * y; };
                   FunctionHandle h = [&](double y) { return 2 * f(y) - 0.7 * g(y); };
                   auto If = jackson_integral(f, JacksonDomain::halfline, c);
                   auto Ig = jackson_integral(g, JacksonDomain::halfline, c);
                   auto Ih = jackson_integral(h, JacksonDomain::halfline, c);
                   double diff = std::abs(Ih.value - (2 * If.value - 0.7 * Ig.value));
                   double allowed = 2 * If.tail_bound + 0.7 * Ig.tail_bound + Ih.tail_bound +
                                    1e-14 * (2 * std::abs(If.value) + 0.7 * std::abs(Ig.value));
                   return Outcome{diff / allowed, Ih.terms_used, {{"allowed", allowed}}};
                 }});
  out.push_back({"qnumber_bridge", qa(q, a), 1e-13, [q, a] {
                   double w = 0;
                   for (double x : {1.0, 2.0, 2 * a + 2, 7.3})
                     w = std::max(w, rel_gap(sym_qnumber(x, std::sqrt(q)),
                                             std::pow(q, -(x - 1) / 2) * qnumber(x, q)));
                   return Outcome{w};
                 }});
  if (first_alpha) {
    const std::uint64_t seed = cfg.seed;
    out.push_back({"qnumber_addition", {{"q", q}, {"seed", static_cast<long long>(seed)}, {"triples", I(50)}},
                   1e-12, [q, seed] {
                     std::mt19937_64 rng(seed);
                     std::uniform_real_distribution<double> u(-5, 5);
                     double w = 0;
                     for (int i = 0; i < 50; ++i) {
                       double A = u(rng), B = u(rng), C = u(rng);
                       auto s = [q](double x) { return sym_qnumber(x, q); };
                       double t1 = s(A) * s(B - C), t2 = s(B) * s(C - A), t3 = s(C) * s(A - B);
                       double scale = std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3)});
                       w = std::max(w, std::abs(t1 + t2 + t3) / scale);
                     }
                     return Outcome{w};
                   }});
  }
  if (is_half(a)) {
    out.push_back({"alpha_half_collapse_derivatives", qa(q, a), 1e-14, [c] {
                     FunctionHandle f = [](double x) { return std::exp(x) / (2 + x); };
                     const std::pair<DerivVariant, DerivVariant> pairs[] = {
                         {DerivVariant::backward_alpha, DerivVariant::backward},
                         {DerivVariant::forward_alpha, DerivVariant::forward},
                         {DerivVariant::delta_alpha, DerivVariant::backward},
                         {DerivVariant::delta_alpha_plus, DerivVariant::forward}};
                     double w = 0;
                     for (double x : {0.3, -0.3, 1.1, -1.1})
                       for (auto [g, p] : pairs) w = std::max(w, gap(qderiv(f, x, g, c), qderiv(f, x, p, c)));
                     return Outcome{w};
                   }});
    out.push_back({"alpha_half_collapse_factorials", qa(q, a), 1e-12, [c, q] {
                     double w = 0;
                     for (int n = 0; n <= 20; ++n) w = std::max(w, rel_gap(gen_qpoch(n, c), qpoch(q, q, n)));
                     for (double z : {-0.8, 0.3, 1.5}) w = std::max(w, rel_gap(qexp_gen(z, c), qexp_big(z, q, c).value));
                     return Outcome{w};
                   }});
  }
}

// ---------------------------------------------------------------------------

void special_functions(Items& out, const SuiteConfig& cfg, double q, double a, bool first_alpha) {
  const QContext c = make_ctx(cfg, q, a);
  if (first_alpha) {
    out.push_back({"exp_reciprocal", {{"q", q}}, 1e-13, [c, q] {
                     double w = 0;
                     for (double z : {-3.0, -0.5, 0.2, 0.9})
                       w = std::max(w, std::abs(qexp_small(z, q, c).value * qpoch_inf(z, q, c).value - 1));
                     return Outcome{w};
                   }});
    out.push_back({"exp_two_routes", {{"q", q}}, 1e-13, [c, q] {
                     double w = 0;
                     for (double z : {-0.5, 0.3, 2.0})
                       w = std::max(w, rel_gap(qexp_big(z, q, c).value, qexp_big_series(z, q, c).value));
                     for (double z : {-0.5, 0.3, 0.9})
                       w = std::max(w, rel_gap(qexp_small(z, q, c).value, qexp_small_series(z, q, c).value));
                     return Outcome{w};
                   }});
  }
  for (int n = 0; n <= 3; ++n) {
    for (auto par : {BesselParity::even_order, BesselParity::odd_order}) {
      const char* pn = par == BesselParity::even_order ? "even_order" : "odd_order";
      // Delta^k with k up to 7 cancels about k digits per step in double;
      // both sides are formed in binary128 with a matching series tolerance.
      out.push_back({"bessel_delta", with(qa(q, a), {{"n", I(n)}, {"parity", pn}}), 1e-10, [c, n, par] {
                       QContext e = c;
                       e.series_tol = 1e-30;
                       e.max_terms = std::max(c.max_terms, 4000);
                       double w = 0;
                       for (double l : {0.5, 1.0, 2.0})
                         for (double x : {0.3, -0.3, 0.9, -0.9})
                           w = std::max(w, static_cast<double>(
                                               bessel_delta_residual<quad>(n, quad(l), quad(x), par, e)));
                       return Outcome{w};
                     }});
    }
  }
  out.push_back({"bessel_contiguous", qa(q, a), 1e-11, [c, q, a] {
                   // Divided by x^alpha: q^{2a+2} x^2 R_{a+2} = (1-q^{2a+2}) R_{a+1} - R_a,
                   // where R_nu(2x) is J^{(2)}_nu(2x; q^2) without its x^nu factor.
                   auto R = [&](double x, double nu) { return qbessel_reduced(2 * x, nu, BesselKind::second_jackson, c); };
                   const double s = std::pow(q, 2 * a + 2);
                   double w = 0;
                   for (double x : {0.25, 0.5, 1.0}) {
                     double l = s * x * x * R(x, a + 2), r = (1 - s) * R(x, a + 1) - R(x, a);
                     w = std::max(w, gap(l, r));
                   }
                   return Outcome{w};
                 }});
  // y^{-alpha} J_{alpha+1}(2y) is exactly y times an entire function, so its
  // vanishing is tested through that rate: y^{-alpha-1} J_{alpha+1}(2y) must
  // approach the order alpha+1 prefactor.
  out.push_back({"bessel_small_argument", qa(q, a), 1e-6, [c, q, a] {
                   const double y = 1e-4;
                   auto reduced = [&](double nu) { return qbessel_reduced(2 * y, nu, BesselKind::second_jackson, c); };
                   auto limit = [&](double nu) {
                     return qpinf(std::pow(q, 2 * nu + 2), q * q, c) / qpinf(q * q, q * q, c);
                   };
                   double r0 = rel_gap(reduced(a), limit(a)), r1 = rel_gap(reduced(a + 1), limit(a + 1));
                   return Outcome{std::max(r0, r1), std::nullopt, {{"y_alpha_J_alpha1", y * reduced(a + 1)}}};
                 }});
}

// ---------------------------------------------------------------------------

void hermite_identities(Items& out, const SuiteConfig& cfg, double q, double a) {
  const QContext c = make_ctx(cfg, q, a);
  const int N = cfg.n_max;
  out.push_back({"hermite_parity", qa(q, a), 1e-13, [c] {
                   HermiteFamily<double> f(c, 12);
                   double w = 0;
                   for (int n = 0; n <= 12; ++n)
                     for (double x : {0.3, 0.9, 2.0})
                       w = std::max(w, gap(f.h(n, -x), (n % 2 ? -1 : 1) * f.h(n, x)));
                   return Outcome{w};
                 }});
  for (int n = 0; n <= 12; ++n) {
    out.push_back({"two_route", with(qa(q, a), {{"n", I(n)}}), 1e-11, [c, n] {
                     HermiteFamily<double> f(c, n);
                     double w = 0;
                     for (int i = 0; i <= 20; ++i) {
                       double x = (i - 10) / 5.0, d = f.h(n, x), l = f.h_laguerre(n, x);
                       double s = std::max({std::abs(d), std::abs(l), 1e-300});
                       w = std::max(w, std::abs(d - l) / s);
                     }
                     return Outcome{w};
                   }});
  }
  out.push_back({"relation_generating", qa(q, a), cfg.tol, [c] {
                   double w = 0;
                   for (double x : kSignedX)
                     for (double z : {0.2, -0.2, 0.4, -0.4})
                       w = std::max(w, relation_residual(RelationKind::generating, 0, x, c, z));
                   return Outcome{w};
                 }});
  for (auto kind : {RelationKind::inversion, RelationKind::forward_shift, RelationKind::backward_shift,
                    RelationKind::qdiff, RelationKind::rodrigues}) {
    for (int n = 0; n <= N; ++n) {
      out.push_back({"relation_" + to_string(kind), with(qa(q, a), {{"n", I(n)}}), cfg.tol, [c, kind, n] {
                       double w = 0;
                       for (double x : kSignedX) w = std::max(w, relation_residual(kind, n, x, c));
                       return Outcome{w};
                     }});
    }
  }
  if (is_half(a)) {
    out.push_back({"alpha_half_collapse_hermite", qa(q, a), 1e-12, [c, q] {
                     HermiteFamily<double> f(c, 12);
                     double w = 0;
                     for (int n = 0; n <= 12; ++n)
                       for (double x : {-1.7, -0.6, 0.25, 0.9, 2.0})
                         w = std::max(w, gap(f.h(n, x), classical_hermite(n, x, q)));
                     return Outcome{w};
                   }});
  }
  out.push_back({"weight_integrability", qa(q, a), c.series_tol, [c, a] {
                   HermiteFamily<double> f(c, 0);
                   FunctionHandle g = [&](double x) { return f.weight(x) * std::pow(std::abs(x), 2 * a + 1); };
                   auto I = jackson_integral(g, JacksonDomain::line, c);
                   return Outcome{I.tail_bound / std::abs(I.value), I.terms_used, {{"value", I.value}}};
                 }});
  for (int n = 0; n <= std::min(4, N); ++n) {
    out.push_back({"moment", with(qa(q, a), {{"n", I(n)}}), cfg.tol, [c, n] {
                     double r = moment_check(n, c, MomentForm::corrected);
                     double p = moment_check(n, c, MomentForm::as_printed);
                     return Outcome{r, std::nullopt, {{"as_printed_residual", p}}};
                   }});
  }
  for (double x : {0.4, 0.8, 1.5}) {
    out.push_back({"weight_bessel_transform", with(qa(q, a), {{"x", x}}), cfg.tol, [c, x] {
                     auto d = bessel_weight_transform_detail(x, c);
                     return Outcome{d.residual, d.terms_used, {{"method", to_string(d.method)}}};
                   }});
  }
  for (int n = 0; n <= std::min(4, N); ++n) {
    for (auto par : {Parity::even, Parity::odd}) {
      const char* pn = par == Parity::even ? "even" : "odd";
      for (double x : {0.4, 0.8, 1.5}) {
        out.push_back({"integral_representation", with(qa(q, a), {{"n", I(n)}, {"parity", pn}, {"x", x}}),
                       cfg.tol, [c, n, par, x] {
                         auto d = integral_representation_detail(n, x, par, c);
                         return Outcome{d.residual, d.terms_used, {{"method", to_string(d.method)}}};
                       }});
      }
    }
  }
}

// ---------------------------------------------------------------------------

void orthogonality_suite(Items& out, const SuiteConfig& cfg, double q, double a) {
  const QContext c = make_ctx(cfg, q, a);
  const int N = cfg.n_max;
  for (int n = 0; n <= N; ++n) {
    for (int m = n; m <= N; ++m) {
      out.push_back({"discrete_orthogonality", with(qa(q, a), {{"n", I(n)}, {"m", I(m)}}), cfg.tol,
                     [c, n, m, tol = cfg.tol] {
                       OrthoCheckParams p;
                       p.n = n;
                       p.m = m;
                       p.tol = tol;
                       CheckResult r = orthogonality(p, c);
                       return Outcome{r.residual, r.terms_used, r.params};
                     }});
    }
  }
  const int Nc = std::min(6, N);
  for (int n = 0; n <= Nc; ++n) {
    for (int m = n; m <= Nc; ++m) {
      out.push_back({"continuous_orthonormality", with(qa(q, a), {{"n", I(n)}, {"m", I(m)}}), cfg.quad_tol,
                     [c, n, m, tol = cfg.quad_tol] {
                       OrthoCheckParams p;
                       p.n = n;
                       p.m = m;
                       p.mode = OrthoMode::continuous_quadrature;
                       p.normalization = Normalization::orthonormal;
                       p.tol = tol;
                       CheckResult r = orthogonality(p, c);
                       return Outcome{r.residual, std::nullopt, r.params};
                     }});
    }
  }
  // The printed normalization leaves a constant on the diagonal; report it
  // and check that it does not depend on n.
  for (int n = 1; n <= Nc; ++n) {
    out.push_back({"continuous_offset", with(qa(q, a), {{"n", I(n)}}), cfg.quad_tol,
                   [c, n, q, a, tol = cfg.quad_tol] {
                     OrthoCheckParams p;
                     p.n = p.m = n;
                     p.mode = OrthoMode::continuous_quadrature;
                     p.normalization = Normalization::as_printed;
                     p.tol = tol;
                     CheckResult r = orthogonality(p, c);
                     ParamList extra = r.params;
                     extra.emplace_back("predicted_offset", std::pow(q, (a + 1) * (a + 0.5)));
                     return Outcome{r.residual, std::nullopt, extra};
                   }});
  }
  for (int n = 0; n <= std::min(3, N); ++n) {
    for (int m = n; m <= std::min(3, N); ++m) {
      out.push_back({"wavefunction_inner_product", with(qa(q, a), {{"n", I(n)}, {"m", I(m)}}), cfg.quad_tol,
                     [c, n, m] {
                       WaveBasis<double> b(c, m);
                       double v = inner_product(b.function(n), b.function(m), c);
                       return Outcome{std::abs(v - (n == m ? 1.0 : 0.0)), std::nullopt, {{"value", v}}};
                     }});
    }
  }
}

// ---------------------------------------------------------------------------

void kernels(Items& out, const SuiteConfig& cfg, double q, double a, bool first_alpha) {
  const QContext c = make_ctx(cfg, q, a);
  const std::pair<double, double> pts[] = {{0.8, 0.3}, {1.2, 0.5}};
  for (auto [x, y] : pts) {
    out.push_back({"poisson_kernel", with(qa(q, a), {{"x", x}, {"y", y}}), cfg.tol, [c, x, y] {
                     auto d = poisson_kernel_detail(x, y, KernelMode::general, c);
                     return Outcome{d.residual, d.terms_used};
                   }});
  }
  if (first_alpha) {
    for (auto [x, y] : pts) {
      out.push_back({"poisson_corollary", {{"q", q}, {"x", x}, {"y", y}}, cfg.tol, [c, x, y] {
                       auto d = poisson_kernel_detail(x, y, KernelMode::half_integer_corollary, c);
                       return Outcome{d.residual, d.terms_used};
                     }});
      out.push_back({"corollary_matches_general", {{"q", q}, {"x", x}, {"y", y}}, 1e-8, [c, x, y] {
                       QContext h = c.with_alpha(-0.5);
                       auto g = poisson_kernel_detail(x, y, KernelMode::general, h);
                       auto k = poisson_kernel_detail(x, y, KernelMode::half_integer_corollary, h);
                       return Outcome{std::max(gap(g.rhs, k.rhs), gap(g.lhs, k.lhs))};
                     }});
    }
  }
  for (double x : {0.5, 1.2}) {
    out.push_back({"bessel_expansion", with(qa(q, a), {{"x", x}}), std::min(cfg.tol, 1e-9), [c, x] {
                     auto d = bessel_expansion_detail(x, c);
                     return Outcome{d.residual, d.terms_used};
                   }});
  }
  out.push_back({"rogers_ramanujan", qa(q, a), q <= 0.5 ? 1e-12 : 1e-10, [c] {
                   auto d = rogers_ramanujan_detail(c, RRForm::corrected);
                   double p = rogers_ramanujan_residual(c, RRForm::as_printed);
                   return Outcome{d.residual, d.terms_used, {{"as_printed_residual", p}}};
                 }});
}

// ---------------------------------------------------------------------------

double algebra_tolerance(AlgebraRelation r) {
  switch (r) {
    case AlgebraRelation::N_a:
    case AlgebraRelation::N_a_plus:
      return 1e-13;
    case AlgebraRelation::Kminus_Kplus:
    case AlgebraRelation::deformed_commut_plus:
    case AlgebraRelation::deformed_commut_minus:
      return 1e-11;
    default:
      return 1e-12;
  }
}

void oscillator_algebra(Items& out, const SuiteConfig& cfg, double q, double a) {
  const QContext c = make_ctx(cfg, q, a);
  const int dim = cfg.dim;
  for (auto rel : all_algebra_relations()) {
    out.push_back({"algebra_" + to_string(rel),
                   with(qa(q, a), {{"dim", I(dim)}, {"block", I(dim - safe_block(rel))}}),
                   algebra_tolerance(rel), [c, rel, dim] { return Outcome{algebra_residual(rel, dim, c)}; }});
  }
  out.push_back({"b_scaling", with(qa(q, a), {{"dim", I(dim)}}), 1e-13,
                 [c, dim] { return Outcome{b_scaling_residual(dim, c)}; }});
  out.push_back({"eigenvalue_split", with(qa(q, a), {{"dim", I(dim)}}), 1e-13, [c, q, a, dim] {
                   Eigen::MatrixXd H = build_matrix(MatrixKind::H, dim, c).entries;
                   double w = 0;
                   for (int n = 0; n < dim; ++n) {
                     const int m = n / 2;
                     double want = n % 2 ? qnumber(2 * m + 2 * a + 2, q) : qnumber(2.0 * m, q);
                     w = std::max(w, gap(H(n, n), want));
                   }
                   return Outcome{w};
                 }});
  const int Nl = std::min(8, cfg.n_max);
  for (auto which : {Ladder::a, Ladder::a_plus, Ladder::H}) {
    for (int n = 0; n <= Nl; ++n) {
      const double tol = which == Ladder::a && n == 0 ? 1e-11 : 1e-9;
      out.push_back({"ladder_" + to_string(which), with(qa(q, a), {{"n", I(n)}}), tol,
                     [c, which, n] { return Outcome{ladder_pointwise_residual(n, which, c)}; }});
    }
  }
  for (int n = 1; n <= std::min(6, cfg.n_max); ++n) {
    out.push_back({"repeated_raising", with(qa(q, a), {{"n", I(n)}}), 1e-8,
                   [c, n] { return Outcome{repeated_raising_residual(n, c)}; }});
  }
  for (auto which : {Ladder::a, Ladder::a_plus}) {
    for (int n = 0; n <= std::min(6, cfg.n_max); ++n) {
      out.push_back({"ladder_projection_" + to_string(which), with(qa(q, a), {{"n", I(n)}}), cfg.quad_tol,
                     [c, which, n, q, a] {
                       const int mmax = n + 2;
                       auto col = ladder_projection(n, which, mmax, c);
                       double w = 0;
                       for (int m = 0; m <= mmax; ++m) {
                         double want = 0;
                         if (which == Ladder::a && m == n - 1) want = std::sqrt(gen_qint(n, q, a));
                         if (which == Ladder::a_plus && m == n + 1) want = std::sqrt(gen_qint(n + 1, q, a));
                         w = std::max(w, std::abs(col[m] - want));
                       }
                       return Outcome{w};
                     }});
    }
  }
  if (cfg.n_max >= 3) {
    // The tolerance is 1e-7, so the quadrature targets are relaxed to match.
    QuadOptions opt;
    opt.abs_tol = 1e-11;
    opt.rel_tol = 1e-9;
    out.push_back({"selfadjoint", with(qa(q, a), {{"f", "phi0+phi2"}, {"g", "phi2"}}), 1e-7, [c, opt] {
                     WaveBasis<quad> b(c, 2);
                     BasicFunction<quad> f = [b](quad x) { return b(0, x) + b(2, x); };
                     return Outcome{selfadjoint_residual(f, b.function(2), c, opt)};
                   }});
    out.push_back({"selfadjoint", with(qa(q, a), {{"f", "phi1"}, {"g", "phi3"}}), 1e-7, [c, opt] {
                     WaveBasis<quad> b(c, 3);
                     return Outcome{selfadjoint_residual(b.function(1), b.function(3), c, opt)};
                   }});
  }
}

}  // namespace

std::vector<SuiteItem> build_suite(Suite s, const SuiteConfig& cfg) {
  Items out;
  if (s == Suite::all) {
    for (Suite t : concrete_suites()) {
      Items part = build_suite(t, cfg);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  for (double q : cfg.q_values) {
    for (std::size_t i = 0; i < cfg.alpha_values.size(); ++i) {
      const double a = cfg.alpha_values[i];
      const bool first = i == 0;
      switch (s) {
        case Suite::qcalculus: qcalculus(out, cfg, q, a, first); break;
        case Suite::special_functions: special_functions(out, cfg, q, a, first); break;
        case Suite::hermite_identities: hermite_identities(out, cfg, q, a); break;
        case Suite::orthogonality: orthogonality_suite(out, cfg, q, a); break;
        case Suite::kernels: kernels(out, cfg, q, a, first); break;
        case Suite::oscillator_algebra: oscillator_algebra(out, cfg, q, a); break;
        case Suite::all: break;
      }
    }
  }
  return out;
}

std::vector<CheckResult> run_items(const std::vector<SuiteItem>& items, int jobs) {
  std::vector<CheckResult> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      const SuiteItem& it = items[i];
      CheckResult& r = results[i];
      r.name = it.name;
      r.params = it.params;
      r.tolerance = it.tolerance;
      auto t0 = std::chrono::steady_clock::now();
      try {
        Outcome o = it.body();
        r.judge(o.residual, it.tolerance);
        r.terms_used = o.terms_used;
        r.params.insert(r.params.end(), o.extra.begin(), o.extra.end());
      } catch (const Error& e) {
        r.residual = std::nan("");
        r.pass = false;
        r.error = std::string(e.name()) + ": " + e.what();
      } catch (const std::exception& e) {
        r.residual = std::nan("");
        r.pass = false;
        r.error = std::string("Error: ") + e.what();
      }
      r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

VerificationReport run_verification(const SuiteConfig& cfg, int jobs) {
  cfg.validate();
  VerificationReport rep;
  rep.config = cfg;
  rep.results = run_items(build_suite(cfg.suite, cfg), jobs);
  rep.tally();
  return rep;
}

}  // namespace qlab::cli
