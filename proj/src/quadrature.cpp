#include "navdop/quadrature.hpp"

#include <cmath>

namespace navdop::quad {

namespace {

// Legendre P_n and P_n' by recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

GaussLegendre64 build_gl64() {
  constexpr int n = 64;
  GaussLegendre64 rule{};
  for (int i = 0; i < n / 2; ++i) {
    // Tricomi initial guess, then Newton.
    double x = std::cos(constants::kPi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [p, dp] = legendre(n, x);
    (void)p;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

Mat4 integrate_panels(const std::function<Mat4(double)>& f,
                      const std::vector<std::pair<double, double>>& panels, int split) {
  const auto& rule = gl64();
  Mat4 acc = Mat4::Zero();
  for (const auto& [a, b] : panels) {
    const double step = (b - a) / split;
    for (int s = 0; s < split; ++s) {
      const double lo = a + s * step;
      const double mid = lo + 0.5 * step;
      const double half = 0.5 * step;
      for (int q = 0; q < 64; ++q) acc += (half * rule.weights[q]) * f(mid + half * rule.nodes[q]);
    }
  }
  return acc;
}

}  // namespace

const GaussLegendre64& gl64() {
  static const GaussLegendre64 rule = build_gl64();
  return rule;
}

PanelResult integrate_matrix(const std::function<Mat4(double)>& f,
                             const std::vector<std::pair<double, double>>& panels, double rel_tol,
                             const char* context) {
  const Mat4 coarse = integrate_panels(f, panels, 1);
  const Mat4 fine = integrate_panels(f, panels, 2);
  PanelResult out;
  out.value = fine;
  const double scale = fine.norm();
  out.achieved_rel = (scale > 0.0) ? (fine - coarse).norm() / scale : 0.0;
  if (out.achieved_rel > rel_tol)
    throw NumericalError(std::string(context) + ": quadrature did not converge", out.achieved_rel);
  return out;
}

}  // namespace navdop::quad
