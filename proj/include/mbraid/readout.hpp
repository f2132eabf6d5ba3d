#pragma once
#include "mbraid/majorana.hpp"

namespace mbraid {

// Cavity + transmon + Majorana register (qubit pair GA,GB; accidental pair
// g11,g12; bus pair gb1,gb2).  Kron order: photon (n_max+1) x transmon (2)
// x Majorana (8).
struct ReadoutParams {
  double omega0 = 50.0;      // cavity frequency
  double Omega0 = 60.0;      // transmon splitting
  double g = 0.5;            // cavity-transmon coupling
  double delta_plus = 1.0;   // parity shift of the transmon splitting
  double delta_minus = 0.3;  // parity shift of the island energy
  double eps11 = 0.0;        // tunnel coupling being probed
  double delta = 0.2;        // accidental-pair coupling
  double delta_b = 0.0;      // bus-pair coupling
  int n_max = 8;             // photon cutoff

  double detuning() const { return Omega0 - omega0; }
  long dim() const { return 16L * (n_max + 1); }
  void validate() const;  // throws ConfigError
};

// Six-operator register used by the readout model, trailing-string layout.
const MajoranaSet& readout_register();
// Qubit parity dressed by the bus pair: -i GA PI_b GB (8x8).
Mat readout_parity_op();

struct ReadoutModel {
  Mat H;
  Mat parity;    // readout parity embedded in the full space
  Mat n_photon;  // photon number in the full space
  Mat tz;        // transmon inversion in the full space
  long dim = 0;
};

ReadoutModel build_H_ro(const ReadoutParams& p);

// Signed dispersive shift g^2 / (detuning + 2*parity*delta_plus).  Throws
// NumericError when |detuning + 2*parity*delta_plus| < 10 g, where the
// closed form stops being quantitative.
double dispersive_shift(const ReadoutParams& p, int parity);
// Effective cavity frequency omega0 + tz * shift for transmon branch tz.
double effective_cavity_frequency(const ReadoutParams& p, int tz, int parity);
// Accuracy bound of the closed form: 5 g^4 / |detuning + 2*parity*delta_plus|^3.
double dispersive_shift_tolerance(const ReadoutParams& p, int parity);

struct DressedState {
  double energy = 0.0;
  double overlap = 0.0;  // squared overlap with the bare state
  Vec state;
};
// Eigenstate of H with the largest squared overlap against `bare`;
// overlap below 0.5 -> identification error.
DressedState dressed_state(const Mat& H, const Vec& bare);

// |n_photon> (x) |transmon level> (x) majorana_state (8-dim).
Vec bare_readout_state(const ReadoutParams& p, int n_photon,
                       bool transmon_excited, const Vec& majorana_state);

struct ShiftMeasurement {
  int tz = 0;      // transmon branch
  int parity = 0;  // readout parity of the Majorana branch
  double numeric = 0.0;      // E(n=1) - E(n=0) between dressed states
  double closed_form = 0.0;  // effective_cavity_frequency(p, tz, parity)
  double tolerance = 0.0;    // dispersive_shift_tolerance(p, parity)
  double overlap0 = 0.0, overlap1 = 0.0;
};
// Numeric effective cavity frequency for every (transmon branch, parity,
// pair branch) combination whose bare states keep dressed overlap >= 0.7;
// runs at eps11 = 0.  Throws NumericError outside the dispersive regime.
std::vector<ShiftMeasurement> measure_dispersive_shifts(const ReadoutParams& p);

struct MeasurementError {
  double value = 0.0;
  bool dispersive = true;  // false when the pair crossing defeats the readout
};
// Parity-misidentification amplitude induced by eps11: for each parity
// branch, track the lowest photon-vacuum transmon-ground eigenstate of the
// eps11 = 0 model into the perturbed spectrum and measure the weight on the
// wrong parity.  In the crossing regime |delta_plus - delta_minus - |delta||
// < |eps11| the dispersive readout fails and the error grows with the
// measurement time instead: returns eps11 * t_m with dispersive = false.
MeasurementError measurement_error(const ReadoutParams& p, double t_m = 1.0);

}  // namespace mbraid
