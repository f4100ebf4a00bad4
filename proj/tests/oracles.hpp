#pragma once

// Independent numerical reference implementations for the tests: quadrature
// and a generic RK4 stepper, deliberately sharing no code with the library.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

struct GaussLegendre {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

// Nodes by Newton iteration on P_n (three-term recurrence), weights from P_n'.
inline const GaussLegendre& gl64() {
  static const GaussLegendre rule = [] {
    const int n = 64;
    GaussLegendre r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
      double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      r.nodes[i] = x;
      r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

// Composite 64-point rule; `panels` subdivisions of [a, b].
template <class F>
auto integrate(F&& f, double a, double b, int panels = 8) {
  using R = decltype(f(a));
  const GaussLegendre& rule = gl64();
  R total{};
  double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double mid = a + (p + 0.5) * h;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
      total += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
  }
  return total * (0.5 * h);
}

// Classical RK4 with fixed step on a std::array state.
template <size_t N, class F>
std::array<double, N> rk4(F&& f, double t0, std::array<double, N> u, double t1, int steps) {
  double h = (t1 - t0) / steps;
  for (int s = 0; s < steps; ++s) {
    double t = t0 + s * h;
    auto k1 = f(t, u);
    std::array<double, N> v;
    for (size_t i = 0; i < N; ++i) v[i] = u[i] + 0.5 * h * k1[i];
    auto k2 = f(t + 0.5 * h, v);
    for (size_t i = 0; i < N; ++i) v[i] = u[i] + 0.5 * h * k2[i];
    auto k3 = f(t + 0.5 * h, v);
    for (size_t i = 0; i < N; ++i) v[i] = u[i] + h * k3[i];
    auto k4 = f(t + h, v);
    for (size_t i = 0; i < N; ++i) u[i] += (h / 6.0) * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  return u;
}

}  // namespace oracle
