#include "mbraid/sweep.hpp"

#include <cmath>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mbraid {

const std::array<std::string, 4>& sweep_channels() {
  static const std::array<std::string, 4> ch = {"b2", "11", "12", "21"};
  return ch;
}

void SweepSpec::validate() const {
  if (points < 2) throw ConfigError("sweep: points must be >= 2");
  if (!std::isfinite(start) || !std::isfinite(stop))
    throw ConfigError("sweep: range must be finite");
  if (log_scale && (start <= 0.0 || stop <= 0.0))
    throw ConfigError("sweep: log scale needs a positive range");
  if (sector != "max" && sector != "plus" && sector != "minus")
    throw ConfigError("sweep: sector must be max, plus or minus");
  if (variable == SweepVariable::detuning)
    throw ConfigError(
        "sweep: detuning grids belong to the readout subcommand");
  if (steps_per_leg < 0 || steps_per_leg % 2 != 0)
    throw ConfigError("sweep: steps_per_leg must be even (0 = adaptive)");
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / (points - 1);
    g[static_cast<std::size_t>(i)] =
        log_scale ? start * std::pow(stop / start, f)
                  : start + f * (stop - start);
  }
  return g;
}

SweepRow sweep_point(const SweepSpec& spec, int i) {
  const double x = spec.grid()[static_cast<std::size_t>(i)];
  double delta = spec.fixed_delta;
  PathSpec path = spec.path;
  double scale = 1.0;
  switch (spec.variable) {
    case SweepVariable::delta:
      delta = x;
      break;
    case SweepVariable::d_max:
      path.d_max = x;
      break;
    case SweepVariable::eps_11:
      scale = x;  // corrections are first order in the tunnel coupling
      break;
    case SweepVariable::detuning:
      throw ConfigError("sweep: detuning grids belong to the readout subcommand");
  }
  SweepRow row;
  row.x = x;
  row.converged = true;
  for (int k = 0; k < 4; ++k) {
    const std::string& which = sweep_channels()[static_cast<std::size_t>(k)];
    ChannelCorrection c =
        channel_correction(which, delta, path, spec.steps_per_leg);
    // The correction couples the two pair-parity sectors and its two
    // off-diagonal blocks are mutual adjoints, so the per-sector norms and
    // their maximum coincide; every sector setting reports this value.
    row.norm[static_cast<std::size_t>(k)] = scale * c.norm;
    row.analytic[static_cast<std::size_t>(k)] =
        scale * analytic_norm(which, delta, path.d_max);
    row.converged = row.converged && c.converged;
  }
  return row;
}

namespace {

std::vector<SweepRow> sweep_loop(const SweepSpec& spec, bool parallel) {
  spec.validate();
  const int n = spec.points;
  std::vector<SweepRow> rows(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errs(static_cast<std::size_t>(n));
  if (parallel) {
#ifdef _OPENMP
    const int nt = spec.workers > 0 ? spec.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
    for (int i = 0; i < n; ++i) {
      try {
        rows[static_cast<std::size_t>(i)] = sweep_point(spec, i);
      } catch (...) {
        errs[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
#else
    parallel = false;
#endif
  }
  if (!parallel) {
    for (int i = 0; i < n; ++i) {
      try {
        rows[static_cast<std::size_t>(i)] = sweep_point(spec, i);
      } catch (...) {
        errs[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (const auto& e : errs)  // first failing index wins, deterministically
    if (e) std::rethrow_exception(e);
  return rows;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  return sweep_loop(spec, true);
}

std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec) {
  return sweep_loop(spec, false);
}

}  // namespace mbraid
