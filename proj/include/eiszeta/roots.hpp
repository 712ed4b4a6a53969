#pragma once

// Simultaneous (Aberth-Ehrlich) iteration for all complex roots of a real
// polynomial given by exact rational coefficients.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "eiszeta/error.hpp"
#include "eiszeta/poly.hpp"

namespace eiszeta {

struct RootFinderOptions {
  double step_tol = 1e-15;      // relative correction size at convergence
  double residual_tol = 1e-12;  // relative backward error accepted
  int max_iterations = 10000;
};

/// Roots of p(T) found on the rescaled monic polynomial in s = T / scale.
/// Choosing scale near the root modulus keeps the iteration well conditioned.
inline std::vector<std::complex<double>> find_roots(const UniPoly& p, double scale = 1.0,
                                                    const RootFinderOptions& opt = {}) {
  using C = std::complex<double>;
  const int m = p.degree();
  if (m <= 0) return {};

  std::vector<double> c(m + 1);
  double sp = 1.0;
  for (int k = 0; k <= m; ++k) {
    c[k] = p.coeffs()[k].get_d() * sp;
    sp *= scale;
  }
  const double lead = c[m];
  for (auto& v : c) v /= lead;

  auto eval = [&](C z, C& deriv) {
    C val = c[m];
    deriv = 0.0;
    for (int k = m - 1; k >= 0; --k) {
      deriv = deriv * z + val;
      val = val * z + c[k];
    }
    return val;
  };
  auto magnitude_sum = [&](double r) {
    double acc = 0.0;
    for (int k = m; k >= 0; --k) acc = acc * r + std::abs(c[k]);
    return acc;
  };

  double r0 = std::pow(std::max(std::abs(c[0]), 1e-300), 1.0 / m);
  if (!(r0 > 0.0) || !std::isfinite(r0)) r0 = 1.0;
  std::vector<C> z(m);
  for (int k = 0; k < m; ++k) {
    double angle = 2.0 * std::numbers::pi * k / m + std::numbers::pi / (2.0 * m) + 0.01 * k / m;
    z[k] = std::polar(r0 * (1.0 + 0.001 * (k % 3)), angle);
  }

  bool converged = false;
  for (int it = 0; it < opt.max_iterations && !converged; ++it) {
    double worst = 0.0;
    for (int k = 0; k < m; ++k) {
      C d;
      C v = eval(z[k], d);
      if (v == C(0.0)) continue;
      C ratio = v / d;
      C repulsion = 0.0;
      for (int j = 0; j < m; ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      C w = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[k])));
    }
    converged = worst <= opt.step_tol;
  }

  for (const auto& root : z) {
    C d;
    double residual = std::abs(eval(root, d)) / magnitude_sum(std::abs(root));
    if (!converged && residual > opt.residual_tol)
      throw Error(Errc::RootFindingDiverged, "root iteration did not converge");
    if (residual > opt.residual_tol)
      throw Error(Errc::RootFindingDiverged, "root residual above tolerance");
  }

  std::vector<C> roots(z.size());
  std::transform(z.begin(), z.end(), roots.begin(), [&](C s) { return s * scale; });
  std::sort(roots.begin(), roots.end(), [](C x, C y) {
    if (std::arg(x) != std::arg(y)) return std::arg(x) < std::arg(y);
    return std::abs(x) < std::abs(y);
  });
  return roots;
}

}  // namespace eiszeta
