#pragma once

#include "dlra/bases.hpp"
#include "dlra/lowrank.hpp"
#include "dlra/scheme.hpp"
#include "dlra/stencil.hpp"
#include "dlra/types.hpp"

#include <vector>

namespace dlra {

/// One time-stepping configuration.  rank and scattering are ignored by the
/// dense Full scheme where they do not apply.
struct SchemeSpec {
  Scheme scheme = Scheme::Full;
  ScatteringMode scattering = ScatteringMode::None;
  Index rank = 1;
  double cfl = 1.0;      // dt = cfl * dx / lambda_max(A)
  double end_time = 1.0;
};

/// Everything run() needs: initial coefficients, the moment system and the
/// spatial discretization.
struct ProblemSetup {
  Matrix u0;          // n_cells x (N+1)
  MomentSystem system;
  Grid1D grid;
  Boundary boundary = Boundary::Periodic;
};

struct TraceRow {
  int step;
  double time;
  double frob_norm;
  bool ok;
};

/// Frobenius norms per step; for low-rank runs the norm of S, for dense runs
/// the norm of the coefficient matrix.
struct NormTrace {
  std::vector<TraceRow> rows;
  bool diverged = false;
  int divergence_step = -1;
};

struct RunResult {
  NormTrace trace;
  LowRankState state; // valid when !is_dense
  Matrix dense;       // valid when is_dense
  bool is_dense = false;
  double dt = 0.0;
  int steps = 0;
};

/// Dense Lax-Friedrichs update u <- average(u) - central_diff(u) * A^T.
Matrix full_step(const Matrix& u, const StencilOperators& ops, const Matrix& a);

/// Projector splitting applied to the fully discrete update (K forward,
/// S backward, L forward on the discrete increments).  Not stable: the grid's
/// alternating mode grows by a factor of three per step.
LowRankState ps_discrete_step(const LowRankState& state, const StencilOperators& ops,
                              const Matrix& a);

/// Projector splitting of the semi-discrete system with forward-Euler
/// substeps; the S- and L-substeps drop the stabilizing average.
LowRankState ps_naive_step(const LowRankState& state, const StencilOperators& ops,
                           const Matrix& a);

/// As ps_naive_step but every substep keeps the averaging stencil, restoring
/// the full CFL range of the dense scheme.
LowRankState ps_stabilized_step(const LowRankState& state, const StencilOperators& ops,
                                const Matrix& a);

/// Basis-update & Galerkin step: K- and L-updates from the old state, then a
/// Galerkin update of S in the new bases.
LowRankState unconventional_step(const LowRankState& state, const StencilOperators& ops,
                                 const Matrix& a);

/// Relaxation substeps for u_t = u G, G = diag(g).
/// Dense variant: column scaling by the combined three-substep factor
/// (1 + dt g)^2 (1 - dt g).
Matrix scattering_full_split(const Matrix& u, double dt, const Vector& g_diag);
/// Low-rank variant: projected K (forward), S (backward), L (forward) substeps.
LowRankState scattering_full_split(const LowRankState& state, double dt,
                                   const Vector& g_diag);

/// Single forward update of the coefficient matrix L = S W^T:
/// L <- L (I + dt G); columns with g = 0 are untouched bit for bit.
Matrix scattering_l_only(const Matrix& l, double dt, const Vector& g_diag);

/// Applies the configured relaxation to a low-rank state (QR refactorization
/// included).  ScatteringMode::None returns the state unchanged.
LowRankState apply_scattering(const LowRankState& state, double dt,
                              const Vector& g_diag, ScatteringMode mode);

/// Advances the problem to spec.end_time, one streaming step plus one
/// scattering step per dt (final step shortened to land on end_time exactly).
/// Divergence -- non-finite entries or norm growth beyond 1e12 of the initial
/// norm -- halts the run and is reported in the trace, not thrown.
RunResult run(const ProblemSetup& problem, const SchemeSpec& spec);

} // namespace dlra
