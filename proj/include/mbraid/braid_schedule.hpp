#pragma once
#include "mbraid/system_model.hpp"

namespace mbraid {

enum class PathKind { circular, square };
enum class Direction { forward, reversed };

// Closed three-leg schedule for the Coulomb couplings.  Time is measured in
// units of T0 (one leg), energies in units of D0 = hbar/T0; the cycle lasts
// T_cycle = 3*T0.  d_min < 0 requests the default floor 1e-4 * d_max.
struct PathSpec {
  PathKind kind = PathKind::circular;
  double d_max = 500.0;
  double d_min = -1.0;
  double T0 = 1.0;
  Direction direction = Direction::forward;

  double t_cycle() const { return 3.0 * T0; }
  double d_min_resolved() const { return d_min < 0.0 ? 1e-4 * d_max : d_min; }
};

// Couplings at time t in [0, T_cycle].  The forward schedule starts at the
// corner (d_max, d_min, d_min); leg j rotates axis j down and axis j+1 up —
// by a quarter circle (circular) or by half-leg linear ramps through the
// shared corner where both sit at d_max (square).  direction = reversed
// traverses the legs in reverse order with axes 1 and 3 relabeled.
CouplingSet coupling_at(const PathSpec& path, double t);

struct FluxParams {
  double EJ0 = 50.0;      // junction energy at zero flux
  double EC = 1.0;        // charging energy
  double prefactor = 1.0; // coupling scale
};

// Coupling induced by the flux phase x = e*Phi/hbar, |x| < pi/2:
// prefactor * exp(-sqrt(8 EJ0 cos(x) / EC)); increasing in |x|.
double flux_to_coupling(double phi, const FluxParams& fp);

}  // namespace mbraid
