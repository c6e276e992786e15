#include "dlra/bases.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dlra {

Quadrature gauss_legendre(int n) {
  if (n < 1) {
    throw std::invalid_argument("gauss_legendre: need at least one node");
  }
  Quadrature quad;
  quad.nodes = Vector::Zero(n);
  quad.weights = Vector::Zero(n);
  // Newton iteration on P_n from the usual cosine initial guess; roots come
  // in +/- pairs so only half need to be found.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 1; k < n; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    quad.nodes(i) = -x; // ascending order
    quad.nodes(n - 1 - i) = x;
    quad.weights(i) = w;
    quad.weights(n - 1 - i) = w;
  }
  if (n % 2 == 1) quad.nodes(n / 2) = 0.0;
  return quad;
}

double legendre(int k, double x) {
  if (k < 0) throw std::invalid_argument("legendre: negative degree");
  if (k == 0) return 1.0;
  double p0 = 1.0, p1 = x;
  for (int j = 1; j < k; ++j) {
    const double p2 = ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double legendre_normalized(int k, double x) {
  return std::sqrt((2.0 * k + 1.0) / 2.0) * legendre(k, x);
}

Matrix build_pn_flux(Index order) {
  if (order < 0) throw std::invalid_argument("build_pn_flux: negative order");
  const Index n = order + 1;
  // Integrand mu p_k p_m has degree <= 2 order + 1.
  const int nq = static_cast<int>(order) + 1;
  const Quadrature quad = gauss_legendre(std::max(nq, 2));
  Matrix basis(quad.nodes.size(), n);
  for (Index q = 0; q < quad.nodes.size(); ++q) {
    for (Index k = 0; k < n; ++k) {
      basis(q, k) = legendre_normalized(static_cast<int>(k), quad.nodes(q));
    }
  }
  const Vector scaled = quad.weights.cwiseProduct(quad.nodes);
  Matrix a = basis.transpose() * scaled.asDiagonal() * basis;
  a = 0.5 * (a + a.transpose()).eval();
  return a;
}

Matrix build_sg_flux(Index order, const std::function<double(double)>& a,
                     double lo, double hi, int poly_degree) {
  if (order < 0) throw std::invalid_argument("build_sg_flux: negative order");
  if (!(hi > lo)) {
    throw std::invalid_argument("build_sg_flux: support must have positive width");
  }
  const Index n = order + 1;
  // Chaos basis: Legendre in eta, xi = mid + half*eta, orthonormal w.r.t. the
  // uniform probability density on [lo, hi].  Quadrature exact for
  // a(xi) p_l p_m when a is polynomial of degree <= poly_degree.
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const int degree = poly_degree + 2 * static_cast<int>(order);
  const int nq = degree / 2 + 2;
  const Quadrature quad = gauss_legendre(nq);
  Matrix basis(quad.nodes.size(), n);
  Vector scaled(quad.nodes.size());
  for (Index q = 0; q < quad.nodes.size(); ++q) {
    const double xi = mid + half * quad.nodes(q);
    // probability measure: d xi / (hi - lo) = d eta / 2
    scaled(q) = 0.5 * quad.weights(q) * a(xi);
    for (Index l = 0; l < n; ++l) {
      basis(q, l) = std::sqrt(2.0 * l + 1.0) * legendre(static_cast<int>(l), quad.nodes(q));
    }
  }
  Matrix flux = basis.transpose() * scaled.asDiagonal() * basis;
  flux = 0.5 * (flux + flux.transpose()).eval();
  return flux;
}

Vector build_scattering_diag(const ScatteringSpec& spec, Index order) {
  if (spec.sigma_s < 0.0 || spec.sigma_a < 0.0) {
    throw std::invalid_argument("build_scattering_diag: negative cross section");
  }
  Vector g = Vector::Constant(order + 1, -spec.sigma_s - spec.sigma_a);
  g(0) = -spec.sigma_a;
  return g;
}

double lambda_max(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("lambda_max: matrix must be square");
  }
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("lambda_max: matrix must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(a, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().cwiseAbs().maxCoeff();
}

MomentSystem make_pn_system(Index order, const ScatteringSpec& spec) {
  MomentSystem sys;
  sys.A = build_pn_flux(order);
  sys.g_diag = build_scattering_diag(spec, order);
  sys.lambda_max = lambda_max(sys.A);
  sys.basis = "legendre moments, order " + std::to_string(order);
  return sys;
}

MomentSystem make_sg_system(Index order, const std::function<double(double)>& a,
                            double lo, double hi, int poly_degree) {
  MomentSystem sys;
  sys.A = build_sg_flux(order, a, lo, hi, poly_degree);
  sys.g_diag = Vector::Zero(order + 1);
  sys.lambda_max = lambda_max(sys.A);
  sys.basis = "uniform chaos on [" + std::to_string(lo) + ", " +
              std::to_string(hi) + "], order " + std::to_string(order);
  return sys;
}

} // namespace dlra
