// Command line front end: simulate | sweep | spectral | mode-test.
// Exit code 0 covers successful runs including detected divergence (which is
// data, written to the trace); usage, config and I/O errors exit non-zero.

#include "dlra/harness.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace {

using namespace dlra;

struct SimulateArgs {
  std::string problem = "plane-source";
  std::string scheme = "ps-stabilized";
  std::string scattering = "auto";
  std::string boundary = "auto";
  Index rank = 10;
  double cfl = 1.0;
  double end_time = -1.0; // <0: problem default
  Index cells = -1;
  Index order = -1;
  bool normalized_flux = false;
  std::string trace_out = "trace.csv";
  std::string moments_out = "moments.csv";
};

struct SweepArgs {
  std::string problem = "plane-source";
  std::vector<std::string> schemes{"full", "ps-stabilized", "unconventional"};
  std::vector<Index> ranks{5, 10, 15};
  std::vector<double> cfls{0.2, 0.4, 0.6, 0.8, 1.0};
  std::string scattering = "auto";
  double end_time = -1.0;
  Index cells = -1;
  Index order = -1;
  std::string out = "sweep.csv";
};

struct SpectralArgs {
  std::string scheme = "all";
  double cfl = 1.0;
  Index cells = 400;
  std::string thresholds_out = "thresholds.csv";
  std::string amplification_out = "amplification.csv";
};

struct ModeTestArgs {
  Index cells = 64;
  int steps = 20;
  Index order = 3;
  double cfl = 1.0;
};

ProblemConfig make_config(const std::string& problem, double end_time, Index cells,
                          Index order) {
  ProblemConfig config;
  if (problem == "plane-source") {
    config = ProblemConfig::plane_source();
  } else if (problem == "uncertain-advection") {
    config = ProblemConfig::uncertain_advection();
  } else {
    throw CLI::ValidationError("--problem", "unknown problem: " + problem);
  }
  if (end_time > 0.0) config.end_time = end_time;
  if (cells > 0) config.n_cells = cells;
  if (order >= 0) config.order = order;
  return config;
}

ScatteringMode resolve_scattering(const std::string& name, const ProblemSetup& setup) {
  if (name != "auto") return parse_scattering(name);
  // default: relax through the L factor whenever the system has relaxation
  return setup.system.g_diag.cwiseAbs().maxCoeff() > 0.0 ? ScatteringMode::LStepOnly
                                                         : ScatteringMode::None;
}

int run_simulate(const SimulateArgs& args) {
  ProblemConfig config = make_config(args.problem, args.end_time, args.cells, args.order);
  if (args.boundary == "periodic") {
    config.boundary = Boundary::Periodic;
  } else if (args.boundary == "dirichlet") {
    config.boundary = Boundary::DirichletZero;
  } else if (args.boundary != "auto") {
    throw CLI::ValidationError("--boundary", "unknown boundary: " + args.boundary);
  }
  const ProblemSetup setup = config.kind == ProblemConfig::Kind::PlaneSource
                                 ? build_plane_source(config)
                                 : build_uncertain_advection(config);

  SchemeSpec spec;
  spec.scheme = parse_scheme(args.scheme);
  spec.scattering = resolve_scattering(args.scattering, setup);
  spec.rank = args.rank;
  spec.cfl = args.cfl;
  spec.end_time = config.end_time;

  const RunResult result = run(setup, spec);
  write_file(args.trace_out, trace_csv(result.trace));

  if (result.trace.diverged) {
    std::printf("divergence detected at step %d (norms in %s)\n",
                result.trace.divergence_step, args.trace_out.c_str());
  } else {
    std::vector<Vector> columns;
    std::vector<std::string> names;
    if (config.kind == ProblemConfig::Kind::PlaneSource) {
      names = {"phi"};
      Vector phi = result.is_dense ? Vector(result.dense.col(0))
                                   : scalar_flux(result.state, args.normalized_flux);
      if (result.is_dense && args.normalized_flux) phi *= std::sqrt(2.0);
      columns = {std::move(phi)};
    } else {
      names = {"expectation", "sd"};
      if (result.is_dense) {
        const Vector mean = result.dense.col(0);
        const Vector sd =
            result.dense.rightCols(result.dense.cols() - 1).rowwise().norm();
        columns = {mean, sd};
      } else {
        auto [mean, sd] = expectation_and_sd(result.state);
        columns = {std::move(mean), std::move(sd)};
      }
    }
    write_file(args.moments_out, moments_csv(setup.grid, columns, names));
    std::printf("completed %d steps, final norm %.12g (%s, %s)\n", result.steps,
                result.trace.rows.back().frob_norm, args.trace_out.c_str(),
                args.moments_out.c_str());
  }
  int bad_row = -1;
  if (!trace_within_bound(result.trace, spec.scheme, spec.cfl, &bad_row)) {
    std::printf("warning: norm trace exceeds the per-step bound at row %d\n", bad_row);
  }
  return 0;
}

int run_sweep(const SweepArgs& args) {
  const ProblemConfig config =
      make_config(args.problem, args.end_time, args.cells, args.order);
  const ProblemSetup setup = config.kind == ProblemConfig::Kind::PlaneSource
                                 ? build_plane_source(config)
                                 : build_uncertain_advection(config);
  const ScatteringMode scattering = resolve_scattering(args.scattering, setup);
  std::vector<Scheme> schemes;
  for (const std::string& name : args.schemes) schemes.push_back(parse_scheme(name));
  const std::vector<SweepRecord> records =
      cfl_sweep(config, schemes, args.ranks, args.cfls, scattering);
  write_file(args.out, sweep_csv(records));
  std::printf("wrote %zu sweep records to %s\n", records.size(), args.out.c_str());
  return 0;
}

int run_spectral(const SpectralArgs& args) {
  write_file(args.thresholds_out, thresholds_csv());
  const Grid1D grid(-1.0, 1.0, args.cells);
  std::string tables = "scheme,cfl,alpha,theta,factor\n";
  const std::vector<Scheme> all{Scheme::Full, Scheme::PsNaive, Scheme::PsStabilized,
                                Scheme::Unconventional};
  for (const Scheme scheme : all) {
    if (args.scheme != "all" && parse_scheme(args.scheme) != scheme) continue;
    const AmplificationProfile profile = amplification_profile(scheme, args.cfl, grid);
    const std::string csv = amplification_csv(profile);
    tables += csv.substr(csv.find('\n') + 1); // drop the repeated header
    std::printf("threshold %s %.6f\n", to_string(scheme).c_str(),
                stability_threshold(scheme));
  }
  if (args.scheme == "all" || args.scheme == "ps-discrete") {
    std::printf("threshold ps-discrete 0.000000 (alternating mode grows 3x per step "
                "at any dt)\n");
  }
  std::printf("scattering thresholds: full-split %.9f, l-only %.9f\n",
              scattering_threshold(ScatteringMode::FullSplit3Step),
              scattering_threshold(ScatteringMode::LStepOnly));
  write_file(args.amplification_out, tables);
  return 0;
}

int run_mode_test(const ModeTestArgs& args) {
  ProblemSetup setup;
  setup.grid = Grid1D(-1.0, 1.0, args.cells);
  setup.boundary = Boundary::Periodic;
  setup.system = make_pn_system(args.order, {0.0, 0.0});
  Vector w = Vector::Ones(args.order + 1);
  w /= w.norm();
  setup.u0 = nyquist_mode(setup.grid, w);

  const double dt = args.cfl * setup.grid.dx() / setup.system.lambda_max;
  const StencilOperators ops(setup.grid, dt, setup.boundary);
  LowRankState state = truncated_init(setup.u0, 1);
  double norm = state.frobenius_norm();
  std::printf("alternating-mode growth, %lld cells, %d steps:\n",
              static_cast<long long>(args.cells), args.steps);
  for (int k = 1; k <= args.steps; ++k) {
    state = ps_discrete_step(state, ops, setup.system.A);
    const double next = state.frobenius_norm();
    std::printf("step %3d: factor %.6f\n", k, next / norm);
    norm = next;
  }
  const double total = norm / truncated_init(setup.u0, 1).frobenius_norm();
  std::printf("total growth %.6e (3^%d = %.6e)\n", total, args.steps,
              std::pow(3.0, args.steps));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamical low-rank integrators for linear hyperbolic moment systems"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI file ([subcommand] sections)");

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "Run one scheme and write CSVs");
  simulate->add_option("--problem", sim.problem, "plane-source | uncertain-advection");
  simulate->add_option("--scheme", sim.scheme,
                       "full | ps-discrete | ps-naive | ps-stabilized | unconventional");
  simulate->add_option("--rank", sim.rank, "low-rank approximation rank");
  simulate->add_option("--cfl", sim.cfl, "CFL number (dt = cfl dx / lambda_max)");
  simulate->add_option("--end-time", sim.end_time, "final time (default per problem)");
  simulate->add_option("--cells", sim.cells, "spatial cells (default per problem)");
  simulate->add_option("--order", sim.order, "moment order N (default per problem)");
  simulate->add_option("--scattering", sim.scattering, "auto | none | full-split | l-only");
  simulate->add_option("--boundary", sim.boundary, "auto | dirichlet | periodic");
  simulate->add_flag("--normalized-flux", sim.normalized_flux,
                     "scale the scalar flux by sqrt(2)");
  simulate->add_option("--trace-out", sim.trace_out, "norm trace CSV path");
  simulate->add_option("--moments-out", sim.moments_out, "profile CSV path");

  SweepArgs swp;
  CLI::App* sweep = app.add_subcommand("sweep", "CFL/rank sweep against a reference");
  sweep->add_option("--problem", swp.problem, "plane-source | uncertain-advection");
  sweep->add_option("--schemes", swp.schemes, "schemes to sweep")->delimiter(',');
  sweep->add_option("--ranks", swp.ranks, "ranks to sweep")->delimiter(',');
  sweep->add_option("--cfls", swp.cfls, "CFL numbers to sweep")->delimiter(',');
  sweep->add_option("--scattering", swp.scattering, "auto | none | full-split | l-only");
  sweep->add_option("--end-time", swp.end_time, "final time (default per problem)");
  sweep->add_option("--cells", swp.cells, "spatial cells (default per problem)");
  sweep->add_option("--order", swp.order, "moment order N (default per problem)");
  sweep->add_option("--out", swp.out, "sweep CSV path");

  SpectralArgs spc;
  CLI::App* spectral = app.add_subcommand("spectral", "Stability thresholds and factors");
  spectral->add_option("--scheme", spc.scheme, "scheme name or 'all'");
  spectral->add_option("--cfl", spc.cfl, "CFL number for the amplification table");
  spectral->add_option("--cells", spc.cells, "grid resolution for the table");
  spectral->add_option("--thresholds-out", spc.thresholds_out, "thresholds CSV path");
  spectral->add_option("--amplification-out", spc.amplification_out,
                       "amplification table CSV path");

  ModeTestArgs mode;
  CLI::App* mode_test =
      app.add_subcommand("mode-test", "Growth of the alternating mode step by step");
  mode_test->add_option("--cells", mode.cells, "spatial cells (even)");
  mode_test->add_option("--steps", mode.steps, "number of steps");
  mode_test->add_option("--order", mode.order, "moment order N");
  mode_test->add_option("--cfl", mode.cfl, "CFL number");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return run_simulate(sim);
    if (sweep->parsed()) return run_sweep(swp);
    if (spectral->parsed()) return run_spectral(spc);
    if (mode_test->parsed()) return run_mode_test(mode);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
