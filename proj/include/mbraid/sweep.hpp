#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mbraid/propagation.hpp"

namespace mbraid {

enum class SweepVariable { delta, d_max, eps_11, detuning };

// Column order of the four independent channels in every interface.
const std::array<std::string, 4>& sweep_channels();  // b2, 11, 12, 21

struct SweepSpec {
  SweepVariable variable = SweepVariable::delta;
  double start = 0.0;
  double stop = 600.0;
  int points = 301;
  bool log_scale = false;
  PathSpec path;             // fixed path parameters
  int steps_per_leg = 0;     // 0 -> adaptive per point
  double fixed_delta = 50.0; // pair coupling for d_max / eps_11 sweeps
  std::string sector = "max";  // max | plus | minus (norm block; equal by adjoint symmetry)
  int workers = 1;           // <= 0 -> library default

  void validate() const;  // throws ConfigError
  std::vector<double> grid() const;
};

struct SweepRow {
  double x = 0.0;
  std::array<double, 4> norm{};      // b2, 11, 12, 21
  std::array<double, 4> analytic{};  // same order
  bool converged = false;
};

// One sweep point; index i into spec.grid().
SweepRow sweep_point(const SweepSpec& spec, int i);

// OpenMP work queue over point indices, single collector, rows in grid
// order regardless of worker count.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);
// Serial reference implementation (same rows, plain loop).
std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec);

}  // namespace mbraid
