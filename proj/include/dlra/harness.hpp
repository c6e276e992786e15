#pragma once

#include "dlra/integrators.hpp"
#include "dlra/spectral.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dlra {

/// Benchmark parameters.  The defaults of plane_source() and
/// uncertain_advection() reproduce the two reference setups; every field can
/// be overridden before building.
struct ProblemConfig {
  enum class Kind { PlaneSource, UncertainAdvection };

  Kind kind = Kind::PlaneSource;
  double x_left = -1.5;
  double x_right = 1.5;
  Index n_cells = 800;
  Index order = 99;       // N; the system carries N+1 coefficients
  double end_time = 1.0;
  Boundary boundary = Boundary::DirichletZero;

  // plane source
  double sigma_s = 1.0;
  double sigma_a = 0.0;
  double ic_variance = 0.03 * 0.03;

  // uncertain advection
  double xi_min = 0.2;
  double xi_max = 1.0;
  double jump_left = -1.0;
  double jump_right = 0.0;

  static ProblemConfig plane_source();
  static ProblemConfig uncertain_advection();
};

/// Spatial profile of the plane-source initial condition: a normalized
/// Gaussian of variance delta floored at 1e-4.
double plane_source_profile(double x, double delta);

/// Isotropic kinetic transport: Legendre moment system with scattering, the
/// floored Gaussian times the isotropic moment vector as initial data (exactly
/// rank one).
ProblemSetup build_plane_source(const ProblemConfig& config);

/// Advection with uncertain wave speed a(xi) = xi^3, xi uniform on
/// [xi_min, xi_max]: chaos expansion flux matrix, cell-averaged indicator of
/// [jump_left, jump_right] as deterministic initial data (exactly rank one).
ProblemSetup build_uncertain_advection(const ProblemConfig& config);

/// Zeroth-coefficient profile X S (row 0 of W)^T.  With physical_normalization
/// the result is scaled by sqrt(2), the angular integral of the normalized
/// isotropic basis function.
Vector scalar_flux(const LowRankState& state, bool physical_normalization = false);

/// Pointwise mean and standard deviation of a chaos expansion, computed in
/// factored form: mean is the zeroth coefficient, sd the l2 norm of the rest.
std::pair<Vector, Vector> expectation_and_sd(const LowRankState& state);

/// Grid-weighted discrete L2 distance sqrt(dx * sum (a-b)^2); pass
/// grid_weighted = false for the plain l2 distance.
double l2_error(const Vector& a, const Vector& b, double dx, bool grid_weighted = true);

/// Checks every step ratio of a trace against the worst-case per-step factor
/// of the scheme at this CFL (streaming bound; relaxation never expands).
/// Returns false and the first offending row for violations.  Schemes without
/// a closed-form bound are accepted as long as the run did not diverge.
bool trace_within_bound(const NormTrace& trace, Scheme scheme, double cfl,
                        int* first_bad_row = nullptr);

struct SweepRecord {
  Scheme scheme;
  Index rank;
  double cfl;
  double error; // NaN when diverged
  bool diverged;
};

/// Runs every (scheme, rank, cfl) combination against a Full-scheme reference
/// computed at the smallest requested CFL.  Errors compare the zeroth
/// coefficient profile (scalar flux / expectation).  Points execute
/// concurrently; the result order is deterministic.
std::vector<SweepRecord> cfl_sweep(const ProblemConfig& config,
                                   const std::vector<Scheme>& schemes,
                                   const std::vector<Index>& ranks,
                                   const std::vector<double>& cfls,
                                   ScatteringMode scattering);

// ---- CSV output -----------------------------------------------------------
// All writers emit a header row and deterministic 17-significant-digit
// numbers, so identical inputs give byte-identical files.

std::string trace_csv(const NormTrace& trace);
std::string moments_csv(const Grid1D& grid, const std::vector<Vector>& columns,
                        const std::vector<std::string>& names);
std::string sweep_csv(const std::vector<SweepRecord>& records);
std::string thresholds_csv();
std::string amplification_csv(const AmplificationProfile& profile);

void write_file(const std::string& path, const std::string& contents);

} // namespace dlra
