#include "qlab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

#include "qlab/errors.hpp"

namespace qlab {

namespace {

// Kronrod 15-point nodes (nonnegative half) with the embedded Gauss 7 weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double kron = fc * kWgk[7], gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    double dx = h * kXgk[j];
    double s = f(c - dx) + f(c + dx);
    kron += kWgk[j] * s;
    if (j % 2 == 1) gauss += kWg[j / 2] * s;
  }
  return {a, b, kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              const std::vector<double>& breakpoints, const QuadOptions& opt) {
  std::priority_queue<Panel> heap;
  double total = 0, err = 0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i + 1] > breakpoints[i])) continue;
    Panel p = gk15(f, breakpoints[i], breakpoints[i + 1]);
    total += p.value;
    err += p.error;
    heap.push(p);
  }
  int panels = static_cast<int>(heap.size());
  while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
    if (!std::isfinite(total)) throw QuadratureFailure("integrand is not finite");
    if (panels >= opt.max_panels)
      throw QuadratureFailure("adaptive quadrature exhausted its subinterval budget");
    Panel worst = heap.top();
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    Panel l = gk15(f, worst.a, mid), r = gk15(f, mid, worst.b);
    total += l.value + r.value - worst.value;
    err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
    ++panels;
  }
  // Re-add from the panels to shed the drift of the running updates.
  total = 0;
  err = 0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {total, err, panels};
}

QuadResult integrate_weighted_line(const std::function<double(double)>& f, double alpha,
                                   const QuadOptions& opt, double cutoff, double inner) {
  const double p = 2 * alpha + 1;
  auto g = [&](double x) {
    if (x <= 0) return 0.0;
    double s = f(x) + f(-x);
    return s == 0 ? 0.0 : s * std::pow(x, p);
  };
  // Magnitude profile x |g(x)| on a doubling grid.
  double peak = 0;
  for (double x = 1.0 / 1024; x <= 1024; x *= 2) peak = std::max(peak, x * std::abs(g(x)));
  const double floor_ = 1e-18 * peak;

  double X = cutoff;
  if (X <= 0) {
    X = 1;
    while (X < 1e6 && !(X * std::abs(g(X)) < floor_ && X > 1)) X *= 2;
  }
  double lo = std::max(inner, 0.0);
  std::vector<double> pts{X};
  double x = X;
  while (x / 2 > lo && x / 2 > 1e-300) {
    x /= 2;
    pts.push_back(x);
    if (x < 1 && x * std::abs(g(x)) < floor_ && std::pow(x, p + 1) < 1e-18) break;
  }
  pts.push_back(lo);
  std::reverse(pts.begin(), pts.end());
  if (peak == 0) return {0, 0, 0};
  return integrate_adaptive(g, pts, opt);
}

}  // namespace qlab
