#include "dlra/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <numbers>
#include <stdexcept>

namespace dlra {

namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

} // namespace

ProblemConfig ProblemConfig::plane_source() {
  ProblemConfig c;
  c.kind = Kind::PlaneSource;
  return c;
}

ProblemConfig ProblemConfig::uncertain_advection() {
  ProblemConfig c;
  c.kind = Kind::UncertainAdvection;
  c.n_cells = 2000;
  return c;
}

double plane_source_profile(double x, double delta) {
  const double gauss =
      std::exp(-x * x / (2.0 * delta)) / std::sqrt(2.0 * std::numbers::pi * delta);
  return std::max(1e-4, gauss);
}

ProblemSetup build_plane_source(const ProblemConfig& config) {
  ProblemSetup setup;
  setup.grid = Grid1D(config.x_left, config.x_right, config.n_cells);
  setup.boundary = config.boundary;
  setup.system = make_pn_system(config.order, {config.sigma_s, config.sigma_a});
  // The initial distribution is isotropic, so only the zeroth coefficient is
  // populated: profile times <1, p_0> = sqrt(2).  Exactly rank one.
  setup.u0 = Matrix::Zero(config.n_cells, config.order + 1);
  for (Index j = 0; j < config.n_cells; ++j) {
    setup.u0(j, 0) =
        std::sqrt(2.0) * plane_source_profile(setup.grid.center(j), config.ic_variance);
  }
  return setup;
}

ProblemSetup build_uncertain_advection(const ProblemConfig& config) {
  ProblemSetup setup;
  setup.grid = Grid1D(config.x_left, config.x_right, config.n_cells);
  setup.boundary = config.boundary;
  setup.system = make_sg_system(
      config.order, [](double xi) { return xi * xi * xi; }, config.xi_min,
      config.xi_max, 3);
  // Deterministic step profile: the chaos basis has p_0 == 1, so the zeroth
  // coefficient carries the cell average of the indicator function.
  setup.u0 = Matrix::Zero(config.n_cells, config.order + 1);
  const double dx = setup.grid.dx();
  for (Index j = 0; j < config.n_cells; ++j) {
    const double lo = config.x_left + j * dx;
    const double hi = lo + dx;
    const double overlap =
        std::max(0.0, std::min(hi, config.jump_right) - std::max(lo, config.jump_left));
    setup.u0(j, 0) = overlap / dx;
  }
  return setup;
}

Vector scalar_flux(const LowRankState& state, bool physical_normalization) {
  Vector flux = state.X * (state.S * state.W.row(0).transpose());
  if (physical_normalization) flux *= std::sqrt(2.0);
  return flux;
}

std::pair<Vector, Vector> expectation_and_sd(const LowRankState& state) {
  const Matrix xs = state.X * state.S;
  Vector mean = xs * state.W.row(0).transpose();
  // W has orthonormal columns, so the row norms of X S equal the row norms of
  // the represented matrix; the sd follows without forming it.
  Vector sd(xs.rows());
  for (Index j = 0; j < xs.rows(); ++j) {
    const double total = xs.row(j).squaredNorm();
    sd(j) = std::sqrt(std::max(0.0, total - mean(j) * mean(j)));
  }
  return {std::move(mean), std::move(sd)};
}

double l2_error(const Vector& a, const Vector& b, double dx, bool grid_weighted) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("l2_error: length mismatch");
  }
  const double sq = (a - b).squaredNorm();
  return grid_weighted ? std::sqrt(dx * sq) : std::sqrt(sq);
}

bool trace_within_bound(const NormTrace& trace, Scheme scheme, double cfl,
                        int* first_bad_row) {
  if (scheme == Scheme::PsDiscrete) return !trace.diverged; // no closed-form bound
  const double bound = max_amplification(scheme, cfl);
  for (size_t i = 1; i < trace.rows.size(); ++i) {
    const double prev = trace.rows[i - 1].frob_norm;
    const double cur = trace.rows[i].frob_norm;
    if (!(cur <= bound * prev * (1.0 + 1e-10))) {
      if (first_bad_row) *first_bad_row = static_cast<int>(i);
      return false;
    }
  }
  return true;
}

std::vector<SweepRecord> cfl_sweep(const ProblemConfig& config,
                                   const std::vector<Scheme>& schemes,
                                   const std::vector<Index>& ranks,
                                   const std::vector<double>& cfls,
                                   ScatteringMode scattering) {
  if (schemes.empty() || ranks.empty() || cfls.empty()) {
    throw std::invalid_argument("cfl_sweep: empty sweep axis");
  }
  const ProblemSetup setup = config.kind == ProblemConfig::Kind::PlaneSource
                                 ? build_plane_source(config)
                                 : build_uncertain_advection(config);

  SchemeSpec ref_spec;
  ref_spec.scheme = Scheme::Full;
  ref_spec.scattering = scattering;
  ref_spec.cfl = *std::min_element(cfls.begin(), cfls.end());
  ref_spec.end_time = config.end_time;
  const RunResult ref = run(setup, ref_spec);
  const Vector ref_profile = ref.dense.col(0);
  const double dx = setup.grid.dx();

  std::vector<SweepRecord> records(schemes.size() * ranks.size() * cfls.size());
  std::vector<std::future<void>> jobs;
  size_t idx = 0;
  for (const Scheme scheme : schemes) {
    for (const Index rank : ranks) {
      for (const double cfl : cfls) {
        const size_t slot = idx++;
        jobs.push_back(std::async(std::launch::async, [&, scheme, rank, cfl, slot] {
          SchemeSpec spec;
          spec.scheme = scheme;
          spec.scattering = scattering;
          spec.rank = rank;
          spec.cfl = cfl;
          spec.end_time = config.end_time;
          const RunResult result = run(setup, spec);
          SweepRecord rec{scheme, rank, cfl,
                          std::numeric_limits<double>::quiet_NaN(),
                          result.trace.diverged};
          if (!result.trace.diverged) {
            const Vector profile =
                result.is_dense ? Vector(result.dense.col(0)) : scalar_flux(result.state);
            rec.error = l2_error(profile, ref_profile, dx);
          }
          records[slot] = rec;
        }));
      }
    }
  }
  for (auto& job : jobs) job.get();
  return records;
}

std::string trace_csv(const NormTrace& trace) {
  std::string out = "step,time,frob_norm,status\n";
  for (const TraceRow& row : trace.rows) {
    out += std::to_string(row.step) + "," + fmt(row.time) + "," +
           fmt(row.frob_norm) + "," + (row.ok ? "ok" : "diverged") + "\n";
  }
  return out;
}

std::string moments_csv(const Grid1D& grid, const std::vector<Vector>& columns,
                        const std::vector<std::string>& names) {
  if (columns.size() != names.size() || columns.empty()) {
    throw std::invalid_argument("moments_csv: need one name per column");
  }
  for (const Vector& col : columns) {
    if (col.size() != grid.n_cells) {
      throw std::invalid_argument("moments_csv: column length does not match grid");
    }
  }
  std::string out = "x";
  for (const std::string& name : names) out += "," + name;
  out += "\n";
  for (Index j = 0; j < grid.n_cells; ++j) {
    out += fmt(grid.center(j));
    for (const Vector& col : columns) out += "," + fmt(col(j));
    out += "\n";
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::string out = "scheme,rank,cfl,error,diverged\n";
  for (const SweepRecord& rec : records) {
    out += to_string(rec.scheme) + "," + std::to_string(rec.rank) + "," +
           fmt(rec.cfl) + "," + fmt(rec.error) + "," +
           (rec.diverged ? "true" : "false") + "\n";
  }
  return out;
}

std::string thresholds_csv() {
  std::string out = "scheme,threshold\n";
  for (const Scheme s : {Scheme::Full, Scheme::PsNaive, Scheme::PsStabilized,
                         Scheme::Unconventional}) {
    out += to_string(s) + "," + fmt(stability_threshold(s)) + "\n";
  }
  // The discrete splitting amplifies the alternating mode for every dt.
  out += to_string(Scheme::PsDiscrete) + ",0\n";
  out += "scattering:" + to_string(ScatteringMode::FullSplit3Step) + "," +
         fmt(scattering_threshold(ScatteringMode::FullSplit3Step)) + "\n";
  out += "scattering:" + to_string(ScatteringMode::LStepOnly) + "," +
         fmt(scattering_threshold(ScatteringMode::LStepOnly)) + "\n";
  return out;
}

std::string amplification_csv(const AmplificationProfile& profile) {
  std::string out = "scheme,cfl,alpha,theta,factor\n";
  for (size_t i = 0; i < profile.points.size(); ++i) {
    out += to_string(profile.scheme) + "," + fmt(profile.cfl) + "," +
           std::to_string(profile.points[i].alpha) + "," +
           fmt(profile.points[i].theta) + "," + fmt(profile.factors[i]) + "\n";
  }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  out << contents;
  if (!out) {
    throw std::runtime_error("failed writing output file: " + path);
  }
}

} // namespace dlra
