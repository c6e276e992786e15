#pragma once

#include "dlra/types.hpp"

#include <functional>
#include <string>

namespace dlra {

/// Gauss-Legendre quadrature on [-1, 1]; exact for polynomials up to degree
/// 2 n - 1.
struct Quadrature {
  Vector nodes;
  Vector weights;
};
Quadrature gauss_legendre(int n);

/// Classic Legendre polynomial P_k and the L2([-1,1])-orthonormal variant
/// sqrt((2k+1)/2) P_k.
double legendre(int k, double x);
double legendre_normalized(int k, double x);

/// Isotropic relaxation: sigma_s picks out the zeroth coefficient,
/// sigma_a absorbs uniformly.
struct ScatteringSpec {
  double sigma_s = 0.0;
  double sigma_a = 0.0;
};

/// Symmetric flux matrix plus the diagonal relaxation operator of a moment
/// system u_t + A u_x = u G.
struct MomentSystem {
  Matrix A;           // (N+1) x (N+1), symmetric
  Vector g_diag;      // diagonal of G, all <= 0 for physical inputs
  double lambda_max;  // spectral radius of A
  std::string basis;  // short description of the angular/stochastic basis
};

/// Flux matrix of the spherical-harmonics (here: Legendre) moment system for
/// free streaming transport, a_{km} = \int mu p_k(mu) p_m(mu) dmu over the
/// orthonormal basis.  Tridiagonal with zero diagonal; off-diagonal entries
/// equal (k+1)/sqrt((2k+1)(2k+3)).
Matrix build_pn_flux(Index order);

/// Flux matrix of a stochastic Galerkin expansion for advection with an
/// uncertain coefficient a(xi), xi uniformly distributed on [lo, hi]:
/// a_{lm} = E[a(xi) p_l(xi) p_m(xi)] over the orthonormal (shifted Legendre)
/// chaos basis.  poly_degree bounds the polynomial degree of a() so the
/// quadrature can be made exact.
Matrix build_sg_flux(Index order, const std::function<double(double)>& a,
                     double lo, double hi, int poly_degree = 3);

/// Diagonal of G = sigma_s diag(g_k) - sigma_a I with the isotropic kernel
/// g_k = delta_{k0} - 1.
Vector build_scattering_diag(const ScatteringSpec& spec, Index order);

/// Spectral radius of a symmetric matrix; rejects non-symmetric input.
double lambda_max(const Matrix& a);

MomentSystem make_pn_system(Index order, const ScatteringSpec& spec);
MomentSystem make_sg_system(Index order, const std::function<double(double)>& a,
                            double lo, double hi, int poly_degree = 3);

} // namespace dlra
