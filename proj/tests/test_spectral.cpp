#include "dlra/spectral.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace dlra;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
} // namespace

TEST_CASE("symbol_point carries the stencil symbols of one mode") {
  const Grid1D grid(-1.0, 1.0, 16);
  const double dt = 0.05;

  const SymbolPoint p0 = symbol_point(0, grid, dt);
  CHECK(p0.theta == 0.0);
  CHECK(p0.d_avg == 1.0);
  CHECK(p0.d_diff_mag == 0.0);

  const SymbolPoint p2 = symbol_point(2, grid, dt);
  CHECK(p2.alpha == 2);
  CHECK(p2.theta == doctest::Approx(kPi / 4.0).epsilon(1e-15));
  CHECK(p2.d_avg == doctest::Approx(std::cos(kPi / 4.0)).epsilon(1e-15));
  // dt / dx = 0.05 / 0.125 = 0.4
  CHECK(p2.d_diff_mag == doctest::Approx(0.4 * std::sin(kPi / 4.0)).epsilon(1e-15));

  // The Nyquist wave number alpha = n/2 has theta = pi: averaging flips the
  // sign, the difference stencil vanishes.
  const SymbolPoint pn = symbol_point(8, grid, dt);
  CHECK(pn.d_avg == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(pn.d_diff_mag < 1e-15);
}

TEST_CASE("amplification matches the closed forms at theta = pi/2") {
  // At theta = pi/2 the averaging symbol vanishes, leaving pure powers of c.
  CHECK(amplification(Scheme::Full, 0.3, kHalfPi) ==
        doctest::Approx(0.3).epsilon(1e-14));
  CHECK(amplification(Scheme::Unconventional, 0.3, kHalfPi) ==
        doctest::Approx(0.3).epsilon(1e-14));
  CHECK(amplification(Scheme::PsNaive, 0.3, kHalfPi) ==
        doctest::Approx(0.327).epsilon(1e-14));
  CHECK(amplification(Scheme::PsStabilized, 0.3, kHalfPi) ==
        doctest::Approx(0.027).epsilon(1e-13));
  CHECK(amplification(Scheme::PsNaive, 0.9, kHalfPi) ==
        doctest::Approx(1.629).epsilon(1e-14));
  CHECK(amplification(Scheme::PsStabilized, 0.9, kHalfPi) ==
        doctest::Approx(0.729).epsilon(1e-14));
}

TEST_CASE("amplification matches frozen values at generic angles") {
  CHECK(amplification(Scheme::Full, 0.85, 0.7) ==
        doctest::Approx(0.9406555911051655).epsilon(1e-15));
  CHECK(amplification(Scheme::PsNaive, 0.85, 0.7) ==
        doctest::Approx(1.2227105771344333).epsilon(1e-15));
  CHECK(amplification(Scheme::PsStabilized, 0.85, 0.7) ==
        doctest::Approx(0.83232305321849165).epsilon(1e-15));
  CHECK(amplification(Scheme::Full, 0.4, 2.3) ==
        doctest::Approx(0.72999721827365682).epsilon(1e-15));
  CHECK(amplification(Scheme::PsNaive, 0.4, 2.3) ==
        doctest::Approx(0.7949466783503456).epsilon(1e-15));
  CHECK(amplification(Scheme::PsStabilized, 0.4, 2.3) ==
        doctest::Approx(0.38901255287104142).epsilon(1e-15));

  // Independent re-derivation from the trigonometric form.
  for (const double c : {0.2, 0.6, 1.0}) {
    for (const double theta : {0.1, 0.9, 2.0, 3.0}) {
      const double cs = std::cos(theta);
      const double sn = std::sin(theta);
      const double base = std::sqrt(cs * cs + c * c * sn * sn);
      CHECK(amplification(Scheme::Full, c, theta) ==
            doctest::Approx(base).epsilon(1e-13));
      CHECK(amplification(Scheme::PsNaive, c, theta) ==
            doctest::Approx((1.0 + c * c * sn * sn) * base).epsilon(1e-13));
      CHECK(amplification(Scheme::PsStabilized, c, theta) ==
            doctest::Approx(base * base * base).epsilon(1e-13));
    }
  }
}

TEST_CASE("amplification rejects the discrete splitting and negative CFL") {
  CHECK_THROWS_AS(amplification(Scheme::PsDiscrete, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(amplification(Scheme::Full, -0.1, 1.0), std::invalid_argument);
}

TEST_CASE("max_amplification at the critical CFL numbers") {
  // All modes are neutral for the schemes stable at c = 1.
  CHECK(max_amplification(Scheme::Full, 1.0) == 1.0);
  CHECK(max_amplification(Scheme::Unconventional, 1.0) == 1.0);
  CHECK(max_amplification(Scheme::PsStabilized, 1.0) == 1.0);
  // The naive splitting doubles the quarter-wavelength mode at c = 1.
  CHECK(max_amplification(Scheme::PsNaive, 1.0) == doctest::Approx(2.0).epsilon(1e-14));

  // Below their thresholds the maxima sit at theta = 0.
  CHECK(max_amplification(Scheme::Full, 0.5) == 1.0);
  CHECK(max_amplification(Scheme::PsStabilized, 0.5) == 1.0);
  CHECK(max_amplification(Scheme::PsNaive, 0.5) == 1.0);

  // Slightly above 1/sqrt(3) an interior mode is amplified; the maximum is a
  // stationary point between grid nodes (frozen value).
  CHECK(max_amplification(Scheme::PsNaive, 0.6) ==
        doctest::Approx(1.0023442173431003).epsilon(1e-12));
  CHECK(max_amplification(Scheme::PsNaive, 0.6) > 1.0 + 1e-6);

  // Above c = 1 every scheme amplifies.
  for (const Scheme s : {Scheme::Full, Scheme::PsNaive, Scheme::PsStabilized,
                         Scheme::Unconventional}) {
    CHECK(max_amplification(s, 1.05) > 1.0 + 1e-3);
  }
}

TEST_CASE("max_amplification grows with the CFL number") {
  for (const Scheme s : {Scheme::Full, Scheme::PsNaive, Scheme::PsStabilized,
                         Scheme::Unconventional}) {
    double prev = max_amplification(s, 0.2);
    for (const double c : {0.7, 1.2, 1.7}) {
      const double cur = max_amplification(s, c);
      CHECK(cur >= prev - 1e-14);
      prev = cur;
    }
  }
}

TEST_CASE("stability thresholds recover the theoretical CFL limits") {
  CHECK(stability_threshold(Scheme::Full) == doctest::Approx(1.0).epsilon(2e-6));
  CHECK(stability_threshold(Scheme::Unconventional) ==
        doctest::Approx(1.0).epsilon(2e-6));
  CHECK(stability_threshold(Scheme::PsStabilized) ==
        doctest::Approx(1.0).epsilon(2e-6));
  CHECK(stability_threshold(Scheme::PsNaive) ==
        doctest::Approx(0.57735026918962584).epsilon(3e-6));
  // No closed-form factor to bisect on for the discrete splitting.
  CHECK_THROWS_AS(stability_threshold(Scheme::PsDiscrete), std::invalid_argument);
}

TEST_CASE("scattering thresholds") {
  // Root of (1-y)^2 (1+y) = 1 above 1 is the golden ratio.
  CHECK(scattering_threshold(ScatteringMode::FullSplit3Step) ==
        doctest::Approx(1.6180339887498949).epsilon(1e-9));
  CHECK(scattering_threshold(ScatteringMode::LStepOnly) ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK_THROWS_AS(scattering_threshold(ScatteringMode::None), std::invalid_argument);
}

TEST_CASE("nyquist_mode builds the alternating rank-one matrix") {
  const Grid1D grid(0.0, 1.0, 6);
  Vector w(3);
  w << 1.0, -2.0, 0.5;
  const Matrix u = nyquist_mode(grid, w);
  REQUIRE(u.rows() == 6);
  REQUIRE(u.cols() == 3);
  for (Index j = 0; j < 6; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    for (Index k = 0; k < 3; ++k) CHECK(u(j, k) == sign * w(k));
  }
  // The alternating mode does not exist on grids with an odd cell count.
  CHECK_THROWS_AS(nyquist_mode(Grid1D(0.0, 1.0, 7), w), std::invalid_argument);
}

TEST_CASE("amplification_profile tabulates the resolvable wave numbers") {
  const Grid1D grid(-1.0, 1.0, 16);

  const AmplificationProfile stab = amplification_profile(Scheme::PsStabilized, 1.0, grid);
  REQUIRE(stab.points.size() == 9); // alpha = 0 .. n/2
  REQUIRE(stab.factors.size() == 9);
  CHECK(stab.max_factor <= 1.0 + 1e-12);
  for (size_t i = 0; i < stab.points.size(); ++i) {
    CHECK(stab.points[i].alpha == static_cast<int>(i));
    CHECK(stab.factors[i] ==
          amplification(Scheme::PsStabilized, 1.0, stab.points[i].theta));
  }

  // At c = 1 the grid contains theta = pi/2 (alpha = n/4), where the naive
  // factor peaks at exactly two.
  const AmplificationProfile naive = amplification_profile(Scheme::PsNaive, 1.0, grid);
  CHECK(naive.max_factor == doctest::Approx(2.0).epsilon(1e-14));

  const AmplificationProfile full = amplification_profile(Scheme::Full, 0.5, grid);
  CHECK(full.max_factor == 1.0); // theta = 0 mode is exactly neutral
  CHECK(full.factors.back() ==
        doctest::Approx(1.0).epsilon(1e-12)); // theta = pi likewise
}

TEST_CASE("closed-form factors agree with the helper's time-domain rig") {
  // Spot check here at a single configuration; the systematic sweep lives in
  // the integrator tests.
  const double got = dlra::testing::single_mode_growth(Scheme::PsStabilized, 0.8,
                                                       3, 32, 99u);
  const double want =
      amplification(Scheme::PsStabilized, 0.8, dlra::testing::mode_theta(3, 32));
  CHECK(got == doctest::Approx(want).epsilon(1e-10));
}
