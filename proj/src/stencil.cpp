#include "dlra/stencil.hpp"

#include <stdexcept>
#include <string>

namespace dlra {

Grid1D::Grid1D(double xl, double xr, Index n) : x_left(xl), x_right(xr), n_cells(n) {
  if (n < 4) {
    throw std::invalid_argument("Grid1D: need at least 4 cells, got " +
                                std::to_string(n));
  }
  if (!(xr > xl)) {
    throw std::invalid_argument("Grid1D: domain must have positive width");
  }
}

StencilOperators::StencilOperators(const Grid1D& g, double dt_, Boundary b)
    : grid(g), dt(dt_), boundary(b) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("StencilOperators: dt must be positive");
  }
}

Matrix StencilOperators::average(const Matrix& v) const {
  const Index n = v.rows();
  if (n != grid.n_cells) {
    throw std::invalid_argument("average: row count does not match the grid");
  }
  Matrix out(n, v.cols());
  out.middleRows(1, n - 2) = 0.5 * (v.topRows(n - 2) + v.bottomRows(n - 2));
  if (boundary == Boundary::Periodic) {
    out.row(0) = 0.5 * (v.row(n - 1) + v.row(1));
    out.row(n - 1) = 0.5 * (v.row(n - 2) + v.row(0));
  } else {
    out.row(0) = 0.5 * v.row(1);
    out.row(n - 1) = 0.5 * v.row(n - 2);
  }
  return out;
}

Matrix StencilOperators::central_diff(const Matrix& v) const {
  const Index n = v.rows();
  if (n != grid.n_cells) {
    throw std::invalid_argument("central_diff: row count does not match the grid");
  }
  const double scale = dt / (2.0 * grid.dx());
  Matrix out(n, v.cols());
  out.middleRows(1, n - 2) = scale * (v.bottomRows(n - 2) - v.topRows(n - 2));
  if (boundary == Boundary::Periodic) {
    out.row(0) = scale * (v.row(1) - v.row(n - 1));
    out.row(n - 1) = scale * (v.row(0) - v.row(n - 2));
  } else {
    out.row(0) = scale * v.row(1);
    out.row(n - 1) = -scale * v.row(n - 2);
  }
  return out;
}

Matrix StencilOperators::project_average(const Matrix& x) const {
  return x.transpose() * average(x);
}

Matrix StencilOperators::project_central_diff(const Matrix& x) const {
  return x.transpose() * central_diff(x);
}

} // namespace dlra
