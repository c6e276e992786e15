#include "dlra/integrators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dlra {

namespace {

// Flux matrix seen through the current moment basis: W^T A^T W.
Matrix projected_flux(const Matrix& a, const Matrix& w) {
  return w.transpose() * a.transpose() * w;
}

void check_state(const LowRankState& state, const Matrix& a) {
  if (state.W.rows() != a.rows()) {
    throw std::invalid_argument("integrator step: W rows must match the flux matrix");
  }
  if (state.X.cols() != state.rank() || state.W.cols() != state.rank()) {
    throw std::invalid_argument("integrator step: inconsistent factor ranks");
  }
}

} // namespace

Matrix full_step(const Matrix& u, const StencilOperators& ops, const Matrix& a) {
  if (u.cols() != a.rows()) {
    throw std::invalid_argument("full_step: column count must match the flux matrix");
  }
  return ops.average(u) - ops.central_diff(u) * a.transpose();
}

LowRankState ps_discrete_step(const LowRankState& state, const StencilOperators& ops,
                              const Matrix& a) {
  check_state(state, a);
  const Index r = state.rank();
  const Matrix a_proj = projected_flux(a, state.W);

  // K-step, forward increment: K + (average - I)K - central_diff(K) a_proj.
  const Matrix k0 = state.X * state.S;
  const Matrix k1 = ops.average(k0) - ops.central_diff(k0) * a_proj;
  const QrFactors kqr = orthonormalize(k1);

  const Matrix p_avg = ops.project_average(kqr.Q);
  const Matrix p_diff = ops.project_central_diff(kqr.Q);

  // S-step runs on the negated increment of the same right-hand side:
  // S - [(p_avg - I) S - p_diff S a_proj].  This is the substep that amplifies
  // the grid's alternating mode.
  const Matrix s1 = 2.0 * kqr.R - p_avg * kqr.R + p_diff * kqr.R * a_proj;

  // L-step, forward again: L + (p_avg - I) L - p_diff L A^T with L = S W^T.
  const Matrix l0 = s1 * state.W.transpose();
  const Matrix l1 = p_avg * l0 - p_diff * l0 * a.transpose();
  const QrFactors lqr = orthonormalize(l1.transpose());
  (void)r;
  return {kqr.Q, lqr.R.transpose(), lqr.Q};
}

LowRankState ps_naive_step(const LowRankState& state, const StencilOperators& ops,
                           const Matrix& a) {
  check_state(state, a);
  const Matrix a_proj = projected_flux(a, state.W);

  const Matrix k0 = state.X * state.S;
  const Matrix k1 = ops.average(k0) - ops.central_diff(k0) * a_proj;
  const QrFactors kqr = orthonormalize(k1);

  // Forward-Euler S- and L-substeps of the split semi-discrete system; only
  // the transport part appears, the averaging is missing here.
  const Matrix p_diff = ops.project_central_diff(kqr.Q);
  const Matrix s1 = kqr.R + p_diff * kqr.R * a_proj;

  const Matrix l0 = s1 * state.W.transpose();
  const Matrix l1 = l0 - p_diff * l0 * a.transpose();
  const QrFactors lqr = orthonormalize(l1.transpose());
  return {kqr.Q, lqr.R.transpose(), lqr.Q};
}

LowRankState ps_stabilized_step(const LowRankState& state, const StencilOperators& ops,
                                const Matrix& a) {
  check_state(state, a);
  const Matrix a_proj = projected_flux(a, state.W);

  const Matrix k0 = state.X * state.S;
  const Matrix k1 = ops.average(k0) - ops.central_diff(k0) * a_proj;
  const QrFactors kqr = orthonormalize(k1);

  // Same splitting, but every substep keeps the averaging stencil.
  const Matrix p_avg = ops.project_average(kqr.Q);
  const Matrix p_diff = ops.project_central_diff(kqr.Q);
  const Matrix s1 = p_avg * kqr.R + p_diff * kqr.R * a_proj;

  const Matrix l0 = s1 * state.W.transpose();
  const Matrix l1 = p_avg * l0 - p_diff * l0 * a.transpose();
  const QrFactors lqr = orthonormalize(l1.transpose());
  return {kqr.Q, lqr.R.transpose(), lqr.Q};
}

LowRankState unconventional_step(const LowRankState& state, const StencilOperators& ops,
                                 const Matrix& a) {
  check_state(state, a);
  const Matrix a_proj = projected_flux(a, state.W);

  // K- and L-updates both start from the old state.
  const Matrix k0 = state.X * state.S;
  const Matrix k1 = ops.average(k0) - ops.central_diff(k0) * a_proj;
  const QrFactors kqr = orthonormalize(k1);
  const Matrix m = kqr.Q.transpose() * state.X;

  const Matrix q_avg = ops.project_average(state.X);
  const Matrix q_diff = ops.project_central_diff(state.X);
  const Matrix l0 = state.S * state.W.transpose();
  const Matrix l1 = q_avg * l0 - q_diff * l0 * a.transpose();
  const QrFactors lqr = orthonormalize(l1.transpose());
  const Matrix n = lqr.Q.transpose() * state.W;

  // Galerkin update of S in the new bases.
  const Matrix s_bar = m * state.S * n.transpose();
  const Matrix p_avg = ops.project_average(kqr.Q);
  const Matrix p_diff = ops.project_central_diff(kqr.Q);
  const Matrix a_proj_new = projected_flux(a, lqr.Q);
  const Matrix s1 = p_avg * s_bar - p_diff * s_bar * a_proj_new;
  return {kqr.Q, s1, lqr.Q};
}

Matrix scattering_full_split(const Matrix& u, double dt, const Vector& g_diag) {
  if (u.cols() != g_diag.size()) {
    throw std::invalid_argument("scattering_full_split: column count must match G");
  }
  Matrix out = u;
  for (Index j = 0; j < g_diag.size(); ++j) {
    const double y = dt * g_diag(j);
    out.col(j) *= (1.0 + y) * (1.0 - y) * (1.0 + y);
  }
  return out;
}

LowRankState scattering_full_split(const LowRankState& state, double dt,
                                   const Vector& g_diag) {
  if (state.W.rows() != g_diag.size()) {
    throw std::invalid_argument("scattering_full_split: W rows must match G");
  }
  const Index r = state.rank();
  const Matrix g_proj = state.W.transpose() * g_diag.asDiagonal() * state.W;
  const Matrix eye = Matrix::Identity(r, r);

  const Matrix k1 = state.X * state.S * (eye + dt * g_proj);
  const QrFactors kqr = orthonormalize(k1);
  const Matrix s1 = kqr.R * (eye - dt * g_proj);
  const Matrix l1 = scattering_l_only(s1 * state.W.transpose(), dt, g_diag);
  const QrFactors lqr = orthonormalize(l1.transpose());
  return {kqr.Q, lqr.R.transpose(), lqr.Q};
}

Matrix scattering_l_only(const Matrix& l, double dt, const Vector& g_diag) {
  if (l.cols() != g_diag.size()) {
    throw std::invalid_argument("scattering_l_only: column count must match G");
  }
  Matrix out = l;
  for (Index j = 0; j < g_diag.size(); ++j) {
    out.col(j) *= 1.0 + dt * g_diag(j);
  }
  return out;
}

LowRankState apply_scattering(const LowRankState& state, double dt,
                              const Vector& g_diag, ScatteringMode mode) {
  switch (mode) {
    case ScatteringMode::None:
      return state;
    case ScatteringMode::FullSplit3Step:
      return scattering_full_split(state, dt, g_diag);
    case ScatteringMode::LStepOnly: {
      const Matrix l1 = scattering_l_only(state.S * state.W.transpose(), dt, g_diag);
      const QrFactors lqr = orthonormalize(l1.transpose());
      return {state.X, lqr.R.transpose(), lqr.Q};
    }
  }
  throw std::invalid_argument("apply_scattering: unknown mode");
}

RunResult run(const ProblemSetup& problem, const SchemeSpec& spec) {
  const Index n_cells = problem.grid.n_cells;
  const Index n_coeff = problem.system.A.rows();
  if (problem.u0.rows() != n_cells || problem.u0.cols() != n_coeff) {
    throw std::invalid_argument("run: initial data does not match grid/system");
  }
  if (problem.system.g_diag.size() != n_coeff) {
    throw std::invalid_argument("run: scattering diagonal does not match system");
  }
  if (!(spec.cfl > 0.0) || !(spec.end_time > 0.0)) {
    throw std::invalid_argument("run: cfl and end_time must be positive");
  }
  const bool dense = spec.scheme == Scheme::Full;
  if (!dense && (spec.rank < 1 || spec.rank > std::min(n_cells, n_coeff))) {
    throw std::invalid_argument("run: rank outside problem dimensions");
  }

  const double dt = spec.cfl * problem.grid.dx() / problem.system.lambda_max;
  const double end_time = spec.end_time;
  int n_steps = static_cast<int>(std::ceil(end_time / dt - 1e-12));
  n_steps = std::max(n_steps, 1);

  RunResult res;
  res.dt = dt;
  res.steps = n_steps;
  res.is_dense = dense;

  double norm0 = 0.0;
  if (dense) {
    res.dense = problem.u0;
    norm0 = res.dense.norm();
  } else {
    res.state = truncated_init(problem.u0, spec.rank);
    norm0 = res.state.frobenius_norm();
  }
  res.trace.rows.push_back({0, 0.0, norm0, true});

  const double guard = 1e12 * std::max(norm0, std::numeric_limits<double>::min());
  for (int k = 1; k <= n_steps; ++k) {
    const double step_dt = (k == n_steps) ? end_time - dt * (n_steps - 1) : dt;
    const double t = (k == n_steps) ? end_time : dt * k;
    const StencilOperators ops(problem.grid, step_dt, problem.boundary);
    double norm = std::numeric_limits<double>::infinity();
    bool ok = true;
    try {
      if (dense) {
        res.dense = full_step(res.dense, ops, problem.system.A);
        if (spec.scattering == ScatteringMode::FullSplit3Step) {
          res.dense = scattering_full_split(res.dense, step_dt, problem.system.g_diag);
        } else if (spec.scattering == ScatteringMode::LStepOnly) {
          res.dense = scattering_l_only(res.dense, step_dt, problem.system.g_diag);
        }
        ok = res.dense.allFinite();
        norm = res.dense.norm();
      } else {
        switch (spec.scheme) {
          case Scheme::PsDiscrete:
            res.state = ps_discrete_step(res.state, ops, problem.system.A);
            break;
          case Scheme::PsNaive:
            res.state = ps_naive_step(res.state, ops, problem.system.A);
            break;
          case Scheme::PsStabilized:
            res.state = ps_stabilized_step(res.state, ops, problem.system.A);
            break;
          case Scheme::Unconventional:
            res.state = unconventional_step(res.state, ops, problem.system.A);
            break;
          default:
            throw std::invalid_argument("run: unknown low-rank scheme");
        }
        res.state = apply_scattering(res.state, step_dt, problem.system.g_diag,
                                     spec.scattering);
        ok = res.state.S.allFinite();
        norm = res.state.frobenius_norm();
      }
    } catch (const std::invalid_argument&) {
      // Non-finite intermediates rejected by the QR: divergence, not a crash.
      ok = false;
    }
    if (!ok || !(norm <= guard)) {
      res.trace.rows.push_back({k, t, norm, false});
      res.trace.diverged = true;
      res.trace.divergence_step = k;
      return res;
    }
    res.trace.rows.push_back({k, t, norm, true});
  }
  return res;
}

} // namespace dlra
