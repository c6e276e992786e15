#include "dlra/bases.hpp"

#include "dlra/lowrank.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>

using namespace dlra;
using namespace dlra::testing;

TEST_CASE("gauss_legendre: weights sum to the interval length") {
  for (int n : {1, 2, 5, 20, 101}) {
    const Quadrature q = gauss_legendre(n);
    CHECK(q.weights.sum() == doctest::Approx(2.0).epsilon(1e-13));
  }
}

TEST_CASE("gauss_legendre: exact for polynomials up to degree 2n-1") {
  const Quadrature q = gauss_legendre(5);
  double x2 = 0.0, x8 = 0.0, x9 = 0.0;
  for (Index i = 0; i < 5; ++i) {
    x2 += q.weights(i) * std::pow(q.nodes(i), 2);
    x8 += q.weights(i) * std::pow(q.nodes(i), 8);
    x9 += q.weights(i) * std::pow(q.nodes(i), 9);
  }
  CHECK(x2 == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(x8 == doctest::Approx(2.0 / 9.0).epsilon(1e-13));
  CHECK(x9 == doctest::Approx(0.0).epsilon(1e-13)); // odd integrand
}

TEST_CASE("legendre recurrence values") {
  CHECK(legendre(0, 0.3) == doctest::Approx(1.0));
  CHECK(legendre(1, 0.3) == doctest::Approx(0.3));
  CHECK(legendre(2, 0.3) == doctest::Approx(0.5 * (3.0 * 0.09 - 1.0)).epsilon(1e-14));
  CHECK(legendre(3, -1.0) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("normalized legendre basis is orthonormal under quadrature") {
  const Quadrature q = gauss_legendre(12);
  for (int k = 0; k <= 6; ++k) {
    for (int m = 0; m <= 6; ++m) {
      double acc = 0.0;
      for (Index i = 0; i < q.nodes.size(); ++i) {
        acc += q.weights(i) * legendre_normalized(k, q.nodes(i)) *
               legendre_normalized(m, q.nodes(i));
      }
      CHECK(acc == doctest::Approx(k == m ? 1.0 : 0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("moment flux: first order is the classic 1/sqrt(3) coupling") {
  const Matrix a = build_pn_flux(1);
  CHECK(a.rows() == 2);
  CHECK(a(0, 0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(a(1, 1) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(a(0, 1) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(a(1, 0) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("moment flux: tridiagonal with the closed-form off-diagonal") {
  const Index order = 20;
  const Matrix a = build_pn_flux(order);
  for (Index k = 0; k <= order; ++k) {
    for (Index m = 0; m <= order; ++m) {
      const double expected =
          (m == k + 1) ? (k + 1.0) / std::sqrt((2.0 * k + 1.0) * (2.0 * k + 3.0))
          : (k == m + 1) ? (m + 1.0) / std::sqrt((2.0 * m + 1.0) * (2.0 * m + 3.0))
                         : 0.0;
      CHECK(std::abs(a(k, m) - expected) <= 1e-13);
    }
  }
  CHECK((a - a.transpose()).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("moment flux: spectral radius stays below one") {
  for (Index order : {3, 9, 99}) {
    const double lm = lambda_max(build_pn_flux(order));
    CHECK(lm < 1.0);
    CHECK(lm > 0.5);
  }
  CHECK(lambda_max(build_pn_flux(99)) > 0.999);
}

TEST_CASE("chaos flux: constant coefficient gives the identity") {
  const Matrix a = build_sg_flux(5, [](double) { return 1.0; }, 0.2, 1.0, 0);
  CHECK((a - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("chaos flux: linear coefficient moments") {
  const Matrix a = build_sg_flux(3, [](double xi) { return xi; }, 0.2, 1.0, 1);
  // E[xi] = 0.6 and E[xi p_0 p_1] = 0.4 E[eta^2] sqrt(3) = 0.4/sqrt(3)
  CHECK(a(0, 0) == doctest::Approx(0.6).epsilon(1e-13));
  CHECK(a(0, 1) == doctest::Approx(0.4 / std::sqrt(3.0)).epsilon(1e-13));
}

TEST_CASE("chaos flux: cubic wave speed on [0.2, 1]") {
  const Matrix a = build_sg_flux(19, [](double xi) { return xi * xi * xi; }, 0.2, 1.0, 3);
  // E[xi^3] = (1^4 - 0.2^4) / (4 * 0.8)
  CHECK(a(0, 0) == doctest::Approx(0.312).epsilon(1e-12));
  CHECK((a - a.transpose()).cwiseAbs().maxCoeff() <= 1e-13);
  // Rayleigh quotients of a multiplication operator live inside the range of a(xi)
  Eigen::SelfAdjointEigenSolver<Matrix> eig(a, Eigen::EigenvaluesOnly);
  CHECK(eig.eigenvalues().minCoeff() >= 0.2 * 0.2 * 0.2 - 1e-10);
  CHECK(eig.eigenvalues().maxCoeff() <= 1.0 + 1e-10);
  CHECK(lambda_max(a) < 1.0);
}

TEST_CASE("scattering diagonal: isotropic kernel") {
  const Vector g = build_scattering_diag({1.0, 0.0}, 4);
  CHECK(g(0) == doctest::Approx(0.0));
  for (Index k = 1; k <= 4; ++k) CHECK(g(k) == doctest::Approx(-1.0));

  const Vector g2 = build_scattering_diag({2.0, 0.5}, 2);
  CHECK(g2(0) == doctest::Approx(-0.5));
  CHECK(g2(1) == doctest::Approx(-2.5));
  CHECK_THROWS_AS(build_scattering_diag({-1.0, 0.0}, 2), std::invalid_argument);
}

TEST_CASE("lambda_max: diagonal example and symmetry rejection") {
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = -3.0;
  d(2, 2) = 2.0;
  CHECK(lambda_max(d) == doctest::Approx(3.0).epsilon(1e-14));

  Matrix ns = Matrix::Zero(2, 2);
  ns(0, 1) = 1.0;
  CHECK_THROWS_AS(lambda_max(ns), std::invalid_argument);
  CHECK_THROWS_AS(lambda_max(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("projection cannot enlarge the spectral radius") {
  const Matrix a = random_symmetric(8, 101, 1.0);
  const double lm = lambda_max(a);
  for (unsigned seed : {1u, 2u, 3u, 4u}) {
    const Matrix w = random_orthonormal(8, 4, seed);
    CHECK(lambda_max((w.transpose() * a * w).eval()) <= lm + 1e-12);
  }
}

TEST_CASE("moment system bundles") {
  const MomentSystem pn = make_pn_system(7, {1.0, 0.0});
  CHECK(pn.A.rows() == 8);
  CHECK(pn.g_diag.size() == 8);
  CHECK(pn.lambda_max == doctest::Approx(lambda_max(pn.A)));

  const MomentSystem sg =
      make_sg_system(7, [](double xi) { return xi * xi * xi; }, 0.2, 1.0);
  CHECK(sg.A.rows() == 8);
  CHECK(sg.g_diag.cwiseAbs().maxCoeff() == 0.0);
}
