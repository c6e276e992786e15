#pragma once

#include "dlra/types.hpp"

namespace dlra {

enum class Boundary {
  Periodic,
  DirichletZero, // ghost cells outside the domain hold zero
};

/// Uniform 1-d finite volume grid.
struct Grid1D {
  double x_left = 0.0;
  double x_right = 1.0;
  Index n_cells = 0;

  Grid1D() = default;
  Grid1D(double xl, double xr, Index n);

  double dx() const { return (x_right - x_left) / static_cast<double>(n_cells); }
  double center(Index j) const {
    return x_left + (static_cast<double>(j) + 0.5) * dx();
  }
};

/// Matrix-free application of the two spatial stencils of the Lax-Friedrichs
/// update u^{n+1} = average(u) - central_diff(u) * A^T:
///   average:      (v_{j-1} + v_{j+1}) / 2            (the stabilizing part)
///   central_diff: dt/(2 dx) * (v_{j+1} - v_{j-1})    (the transport part)
/// Both act row-wise on n_cells x m matrices under the configured boundary
/// policy.
struct StencilOperators {
  Grid1D grid;
  double dt = 0.0;
  Boundary boundary = Boundary::Periodic;

  StencilOperators(const Grid1D& g, double dt_, Boundary b);

  Matrix average(const Matrix& v) const;
  Matrix central_diff(const Matrix& v) const;

  /// Galerkin projections X^T average(X) (symmetric) and
  /// X^T central_diff(X) (antisymmetric) for a basis X with orthonormal
  /// columns.
  Matrix project_average(const Matrix& x) const;
  Matrix project_central_diff(const Matrix& x) const;
};

} // namespace dlra
