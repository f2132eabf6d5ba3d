#include "mbraid/braid_schedule.hpp"

#include <algorithm>
#include <cmath>

namespace mbraid {

namespace {

CouplingSet forward_at(const PathSpec& path, double t) {
  const double T0 = path.T0;
  const double dmax = path.d_max;
  const double dmin = path.d_min_resolved();
  const double A = dmax - dmin;
  int leg = std::min(static_cast<int>(t / T0), 2);
  double s = (t - leg * T0) / T0;
  const int a = leg % 3;
  const int b = (leg + 1) % 3;
  double v[3] = {dmin, dmin, dmin};
  if (path.kind == PathKind::circular) {
    if (s <= 0.0) {
      v[a] = dmax;  // exact corner, so the cycle closes bit-exactly
    } else if (s >= 1.0) {
      v[b] = dmax;
    } else {
      const double th = 0.5 * M_PI * s;
      v[a] = dmin + A * std::cos(th);
      v[b] = dmin + A * std::sin(th);
    }
  } else {
    if (s < 0.5) {
      v[a] = dmax;
      v[b] = dmin + A * (2.0 * s);
    } else {
      v[a] = dmin + A * (2.0 - 2.0 * s);
      v[b] = dmax;
    }
  }
  return {v[0], v[1], v[2]};
}

}  // namespace

CouplingSet coupling_at(const PathSpec& path, double t) {
  const double T = path.t_cycle();
  if (path.T0 <= 0.0 || path.d_max <= 0.0 || path.d_min_resolved() < 0.0 ||
      path.d_min_resolved() >= path.d_max)
    throw ConfigError("coupling_at: need 0 <= d_min < d_max and T0 > 0");
  if (t < -1e-12 * T || t > T * (1.0 + 1e-12))
    throw ConfigError("coupling_at: t outside [0, T_cycle]");
  t = std::clamp(t, 0.0, T);
  if (path.direction == Direction::reversed) {
    CouplingSet c = forward_at(path, T - t);
    std::swap(c.d1, c.d3);
    return c;
  }
  return forward_at(path, t);
}

double flux_to_coupling(double phi, const FluxParams& fp) {
  if (!(std::abs(phi) < M_PI / 2.0))
    throw ConfigError("flux_to_coupling: |e*Phi/hbar| must be < pi/2");
  if (fp.EJ0 <= 0.0 || fp.EC <= 0.0)
    throw ConfigError("flux_to_coupling: EJ0 and EC must be positive");
  return fp.prefactor * std::exp(-std::sqrt(8.0 * fp.EJ0 * std::cos(phi) / fp.EC));
}

}  // namespace mbraid
