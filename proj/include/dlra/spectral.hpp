#pragma once

#include "dlra/scheme.hpp"
#include "dlra/stencil.hpp"
#include "dlra/types.hpp"

#include <vector>

namespace dlra {

/// Stencil symbols of one Fourier mode with phase angle theta = alpha pi dx:
/// the averaging stencil contributes cos(theta), the central difference
/// contributes a purely imaginary factor of magnitude (dt/dx) sin(theta).
struct SymbolPoint {
  int alpha = 0;
  double theta = 0.0;
  double d_avg = 0.0;
  double d_diff_mag = 0.0;
};
SymbolPoint symbol_point(int alpha, const Grid1D& grid, double dt);

/// Per-step growth factor of a single Fourier mode with phase angle theta at
/// CFL number c (all moment directions at the extreme wave speed):
///   Full           sqrt(cos^2 + c^2 sin^2)
///   PsNaive        (1 + c^2 sin^2) sqrt(cos^2 + c^2 sin^2)
///   PsStabilized   (cos^2 + c^2 sin^2)^{3/2}
///   Unconventional (cos^2 + c^2 sin^2)^{1/2}
/// PsDiscrete admits no such closed form (its instability is shown directly on
/// the alternating mode) and is rejected.
double amplification(Scheme scheme, double c, double theta);

/// max over theta in [0, pi] of amplification(), evaluated on a 10001-point
/// grid plus the analytic stationary points.
double max_amplification(Scheme scheme, double c);

/// Largest CFL number c with max_amplification(c) <= 1 + 1e-12, found by
/// bisection to 1e-7.
double stability_threshold(Scheme scheme);

/// Largest y = dt * max|g| for which the scalar relaxation update is
/// non-expanding: the root of (1-y)^2 (1+y) = 1 above 1 for the three-substep
/// split (the golden ratio), and 2 for the single L update.  Found by
/// bisection to 1e-12.
double scattering_threshold(ScatteringMode mode);

/// The grid's alternating (Nyquist) mode u_{jk} = (-1)^j w_k; the averaging
/// stencil negates it and the central difference annihilates it.  Requires an
/// even cell count.
Matrix nyquist_mode(const Grid1D& grid, const Vector& w);

/// Amplification factors of a scheme across the resolvable wave numbers of a
/// grid, for CSV output.
struct AmplificationProfile {
  Scheme scheme;
  double cfl;
  std::vector<SymbolPoint> points;
  std::vector<double> factors;
  double max_factor = 0.0;
};
AmplificationProfile amplification_profile(Scheme scheme, double cfl,
                                           const Grid1D& grid);

} // namespace dlra
