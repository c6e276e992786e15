#include "dlra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dlra {

SymbolPoint symbol_point(int alpha, const Grid1D& grid, double dt) {
  SymbolPoint p;
  p.alpha = alpha;
  p.theta = alpha * std::numbers::pi * grid.dx();
  p.d_avg = std::cos(p.theta);
  p.d_diff_mag = (dt / grid.dx()) * std::abs(std::sin(p.theta));
  return p;
}

double amplification(Scheme scheme, double c, double theta) {
  if (!(c >= 0.0)) {
    throw std::invalid_argument("amplification: CFL number must be non-negative");
  }
  const double s2 = std::sin(theta) * std::sin(theta);
  const double base = 1.0 - (1.0 - c * c) * s2; // cos^2 + c^2 sin^2
  switch (scheme) {
    case Scheme::Full:
    case Scheme::Unconventional:
      return std::sqrt(base);
    case Scheme::PsNaive:
      return (1.0 + c * c * s2) * std::sqrt(base);
    case Scheme::PsStabilized:
      return base * std::sqrt(base);
    case Scheme::PsDiscrete:
      throw std::invalid_argument(
          "amplification: no closed-form factor for the discrete splitting");
  }
  throw std::invalid_argument("amplification: unknown scheme");
}

double max_amplification(Scheme scheme, double c) {
  constexpr int kGridPoints = 10001;
  double best = 0.0;
  for (int i = 0; i < kGridPoints; ++i) {
    const double theta = std::numbers::pi * i / (kGridPoints - 1);
    best = std::max(best, amplification(scheme, c, theta));
  }
  // Interior stationary point of the naive factor in t = sin^2(theta):
  // d/dt [(1 + c^2 t)^2 (1 - (1 - c^2) t)] = 0 at
  // t* = (3 c^2 - 1) / (3 c^2 (1 - c^2)).
  if (scheme == Scheme::PsNaive && c > 0.0 && c < 1.0) {
    const double t_star = (3.0 * c * c - 1.0) / (3.0 * c * c * (1.0 - c * c));
    if (t_star > 0.0 && t_star < 1.0) {
      const double theta = std::asin(std::sqrt(t_star));
      best = std::max(best, amplification(scheme, c, theta));
    }
  }
  return best;
}

double stability_threshold(Scheme scheme) {
  const auto stable = [scheme](double c) {
    return max_amplification(scheme, c) <= 1.0 + 1e-12;
  };
  double lo = 1e-3;
  double hi = 2.0;
  if (!stable(lo)) return 0.0;
  while (hi - lo > 1e-7) {
    const double mid = 0.5 * (lo + hi);
    (stable(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double scattering_threshold(ScatteringMode mode) {
  if (mode == ScatteringMode::None) {
    throw std::invalid_argument("scattering_threshold: no relaxation configured");
  }
  // Worst-entry factor of the scalar update at y = dt |g|; both variants are
  // non-expanding on [0, 1] and grow monotonically past y = 1, so the
  // threshold is the root of factor(y) = 1 above 1.
  const auto factor = [mode](double y) {
    if (mode == ScatteringMode::FullSplit3Step) {
      return std::abs((1.0 - y) * (1.0 - y) * (1.0 + y));
    }
    return std::abs(1.0 - y);
  };
  double lo = 1.0;
  double hi = 4.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (factor(mid) <= 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Matrix nyquist_mode(const Grid1D& grid, const Vector& w) {
  if (grid.n_cells % 2 != 0) {
    throw std::invalid_argument("nyquist_mode: alternating mode needs an even cell count");
  }
  Matrix u(grid.n_cells, w.size());
  for (Index j = 0; j < grid.n_cells; ++j) {
    u.row(j) = (j % 2 == 0 ? 1.0 : -1.0) * w.transpose();
  }
  return u;
}

AmplificationProfile amplification_profile(Scheme scheme, double cfl,
                                           const Grid1D& grid) {
  AmplificationProfile profile;
  profile.scheme = scheme;
  profile.cfl = cfl;
  const double dt = cfl * grid.dx(); // unit wave speed for the tabulation
  for (int alpha = 0; alpha <= grid.n_cells / 2; ++alpha) {
    const SymbolPoint p = symbol_point(alpha, grid, dt);
    profile.points.push_back(p);
    profile.factors.push_back(amplification(scheme, cfl, p.theta));
  }
  profile.max_factor = *std::max_element(profile.factors.begin(), profile.factors.end());
  return profile;
}

} // namespace dlra
