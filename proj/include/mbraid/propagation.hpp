#pragma once
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "mbraid/braid_schedule.hpp"

namespace mbraid {

using HFun = std::function<Mat(double)>;

// ---------------------------------------------------------------------------
// Generic propagators
// ---------------------------------------------------------------------------

// Propagator built by non-Abelian parallel transport of the two eigenvalue
// manifolds (the lowest ground_dim levels and the rest), with trapezoid
// dynamical phases of the manifold mean energies.  Returns samples on the
// uniform grid t_i = i*T/nsteps, i = 0..nsteps.  Errors: gap below
// gap_floor -> adiabaticity error; consecutive-frame principal angle
// >= pi/4 -> grid-too-coarse error.
std::vector<Mat> adiabatic_propagator(const HFun& H, double T, int nsteps,
                                      int ground_dim, double gap_floor = 1e-12);
// Same transport, final propagator only (no sample storage).
Mat adiabatic_endpoint(const HFun& H, double T, int nsteps, int ground_dim,
                       double gap_floor = 1e-12);

// Ordered product of midpoint exponentials exp(-i H(t_mid) h), each via the
// Hermitian eigendecomposition; second-order accurate.  Throws when a step
// violates h*max|eigenvalue| < 0.1.
Mat full_propagator(const HFun& H, double T, int nsteps);

// First-order cycle correction from unit-strength operator h_op given U0
// samples on a uniform grid with step dt:
//   dU = -i * U0(T) * sum_i w_i U0(t_i)^dag h_op U0(t_i)
// with composite-Simpson weights (odd sample count required).  Returns
// (dU, spectral norm).  Throws NumericError when Simpson and trapezoid
// results for the norm disagree by more than 1%.
std::pair<Mat, double> perturbative_correction(const std::vector<Mat>& U0,
                                               const Mat& h_op, double dt);

// Streaming variant for one full cycle: midpoint propagation of H (already
// at eps = 0) accumulating the correction integral on the fly.
struct FirstOrderCycle {
  Mat U0T;
  Mat dU;
  double norm;
  double rel_disagreement;  // Simpson vs trapezoid, relative
};
FirstOrderCycle first_order_cycle(const HFun& H, const Mat& h_op, double T,
                                  int nsteps);

// ---------------------------------------------------------------------------
// Tunnel-channel correction norms (sector-reduced, dimension 4)
// ---------------------------------------------------------------------------

// Correction norm for one tunnel channel at pair coupling delta, computed
// from the two parity sectors of the six-operator register transported
// adiabatically along the path.  which: b2, g1, 11, 12, 21, 22, 31, 32.
struct ChannelCorrection {
  double norm;
  double norm_trap;
  double rel_disagreement;
  bool converged;  // Simpson vs trapezoid within 1%
};
ChannelCorrection channel_correction(const std::string& which, double delta,
                                     const PathSpec& path, int steps_per_leg);

// Throwing wrapper: NumericError when the quadrature check fails.
// steps_per_leg <= 0 selects adaptive_steps_per_leg.
double correction_norm(const std::string& which, double delta,
                       const PathSpec& path, int steps_per_leg = 0);

// Closed-form estimates of the four independent channel norms
// (which: 12, 11, 21, b2); sign ambiguities in the combined expressions are
// resolved by evaluating every branch and taking the maximum.
double analytic_norm(const std::string& which, double delta, double d_max);

// True in the asymptotic regime |delta| >> 1 and |delta +- d_max| >> 1
// (in units of D0) where the closed forms are quantitative.
bool analytic_regime_ok(double delta, double d_max);

// Sweep grid sized so the trapezoid cross-check stays within 1% of Simpson:
// grows with the fastest integrand frequency 2*E0_peak + 2|delta| (the
// square path reaches E0_peak = sqrt(2)*d_max); always even.
int adaptive_steps_per_leg(double delta, const PathSpec& path);

// ---------------------------------------------------------------------------
// Braid protocol
// ---------------------------------------------------------------------------

struct SectorChoice {
  // island -> accidental-parity eigenvalue restricting the initial manifold;
  // empty selects the absolute ground manifold.
  std::map<std::string, int> island_parity;
};

struct BraidResult {
  int chirality = 0;          // fitted sign s of the qubit rotation
  Eigen::Matrix2cd W;         // ground-manifold 2x2 matrix of the cycle
  double fidelity = 0.0;      // overlap with exp(i s pi sx / 4)
  double leakage = 0.0;       // 1 - tr(W^dag W)/2
  bool protocol_failure = false;  // leakage > 0.5
  double det_abs = 0.0;       // |det W|
  double p_anc = 0.0;         // ancilla-parity expectation at t = 0
  std::map<std::string, double> island_parity;  // measured at t = 0
};

// One full cycle with the exact propagator.  The qubit basis lives in the
// selected t=0 manifold of the eps-free Hamiltonian: a seeded random state
// of definite -i GA GB parity, and its image under -i GB GC.  eps_scale
// multiplies every tunnel coupling in the disorder config.
BraidResult braid_cycle(const DeviceSpec& spec, const DisorderConfig& dis,
                        const PathSpec& path, const SectorChoice& sector,
                        double eps_scale, int steps_per_leg,
                        std::uint64_t seed);

// Parity-flip protocol: project a seeded manifold state onto the +1
// eigenspace of P = -i GA Pi_b GB, apply n cycles, report the Born
// probability of the flipped eigenvalue for n = 1..n_max.  shots > 0
// replaces exact probabilities by sampled frequencies.
std::vector<double> pflip_sequence(const DeviceSpec& spec,
                                   const DisorderConfig& dis,
                                   const PathSpec& path, int n_max,
                                   const SectorChoice& sector,
                                   std::uint64_t seed, int steps_per_leg,
                                   int shots = 0);

}  // namespace mbraid
