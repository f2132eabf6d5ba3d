#include "mbraid/readout.hpp"

#include <cmath>

#include "mbraid/pauli.hpp"

namespace mbraid {

void ReadoutParams::validate() const {
  if (!(omega0 > 0.0) || !(Omega0 > 0.0))
    throw ConfigError("readout: omega0 and Omega0 must be positive");
  if (g < 0.0) throw ConfigError("readout: g must be non-negative");
  if (n_max < 1 || n_max > 64)
    throw ConfigError("readout: n_max must be in [1, 64]");
  for (double v : {omega0, Omega0, g, delta_plus, delta_minus, eps11, delta, delta_b})
    if (!std::isfinite(v)) throw ConfigError("readout: non-finite parameter");
}

const MajoranaSet& readout_register() {
  static const MajoranaSet set =
      MajoranaSet::build_trailing({"GA", "GB", "g11", "g12", "gb1", "gb2"});
  return set;
}

Mat readout_parity_op() {
  const MajoranaSet& s = readout_register();
  const cxd i(0.0, 1.0);
  Mat pib = -i * (s.op("gb1") * s.op("gb2"));
  return -i * (s.op("GA") * pib * s.op("GB"));
}

ReadoutModel build_H_ro(const ReadoutParams& p) {
  p.validate();
  const MajoranaSet& s = readout_register();
  const cxd i(0.0, 1.0);
  const int npht = p.n_max + 1;

  Mat a = Mat::Zero(npht, npht);
  Mat nhat = Mat::Zero(npht, npht);
  for (int n = 1; n < npht; ++n) a(n - 1, n) = std::sqrt(double(n));
  for (int n = 0; n < npht; ++n) nhat(n, n) = double(n);
  const Mat ip = Mat::Identity(npht, npht);

  Mat tz = Mat::Zero(2, 2), tp = Mat::Zero(2, 2);
  tz(0, 0) = 1.0;
  tz(1, 1) = -1.0;
  tp(0, 1) = 1.0;  // raises the transmon (level 1 is the ground state)
  const Mat tm = tp.adjoint();
  const Mat it = Mat::Identity(2, 2);

  const Mat im = Mat::Identity(8, 8);
  const Mat P = readout_parity_op();
  Mat hm = p.eps11 * (i * (s.op("GB") * s.op("g11"))) +
           p.delta * (i * (s.op("g11") * s.op("g12"))) +
           p.delta_b * (i * (s.op("gb1") * s.op("gb2")));

  ReadoutModel m;
  m.H = p.omega0 * kron(kron(nhat, it), im) +
        p.g * (kron(kron(a, tp), im) + kron(kron(Mat(a.adjoint()), tm), im)) +
        kron(kron(ip, tz), Mat(0.5 * p.Omega0 * im + p.delta_plus * P)) +
        kron(kron(ip, it), Mat(p.delta_minus * P + hm));
  m.parity = kron(kron(ip, it), P);
  m.n_photon = kron(kron(nhat, it), im);
  m.tz = kron(kron(ip, tz), im);
  m.dim = m.H.rows();
  return m;
}

double dispersive_shift(const ReadoutParams& p, int parity) {
  p.validate();
  if (parity != 1 && parity != -1)
    throw ConfigError("dispersive_shift: parity must be +1 or -1");
  const double denom = p.detuning() + 2.0 * parity * p.delta_plus;
  if (std::abs(denom) < 10.0 * p.g)
    throw NumericError(
        "dispersive_shift: |detuning + 2*parity*delta_plus| < 10 g; the "
        "dispersive formula is not valid here");
  return p.g * p.g / denom;
}

double effective_cavity_frequency(const ReadoutParams& p, int tz, int parity) {
  if (tz != 1 && tz != -1)
    throw ConfigError("effective_cavity_frequency: tz must be +1 or -1");
  return p.omega0 + tz * dispersive_shift(p, parity);
}

double dispersive_shift_tolerance(const ReadoutParams& p, int parity) {
  const double denom = std::abs(p.detuning() + 2.0 * parity * p.delta_plus);
  if (denom == 0.0) throw NumericError("dispersive_shift_tolerance: zero detuning");
  return 5.0 * std::pow(p.g, 4) / std::pow(denom, 3);
}

DressedState dressed_state(const Mat& H, const Vec& bare) {
  if (H.rows() != bare.size())
    throw ConfigError("dressed_state: dimension mismatch");
  EigResult e = eigh(H);
  long best = 0;
  (e.vectors.adjoint() * bare).cwiseAbs2().maxCoeff(&best);
  DressedState out;
  out.state = e.vectors.col(best);
  out.energy = e.values(best);
  out.overlap = std::norm(out.state.dot(bare));
  if (out.overlap < 0.5)
    throw NumericError(
        "dressed_state: best overlap below 0.5; the bare state cannot be "
        "identified in this spectrum");
  return out;
}

Vec bare_readout_state(const ReadoutParams& p, int n_photon,
                       bool transmon_excited, const Vec& majorana_state) {
  if (n_photon < 0 || n_photon > p.n_max)
    throw ConfigError("bare_readout_state: photon index out of range");
  if (majorana_state.size() != 8)
    throw ConfigError("bare_readout_state: majorana_state must be 8-dim");
  Vec vp = Vec::Zero(p.n_max + 1);
  vp(n_photon) = 1.0;
  Vec vt = Vec::Zero(2);
  vt(transmon_excited ? 0 : 1) = 1.0;
  return kron(kron(Mat(vp), Mat(vt)), Mat(majorana_state)).col(0);
}

std::vector<ShiftMeasurement> measure_dispersive_shifts(const ReadoutParams& p) {
  ReadoutParams p0 = p;
  p0.eps11 = 0.0;
  const ReadoutModel m = build_H_ro(p0);
  const EigResult e = eigh(m.H);
  const MajoranaSet& s = readout_register();
  const cxd i(0.0, 1.0);
  const Mat P = readout_parity_op();
  // joint eigenbasis of the pair term and the parity (tiny split labels P)
  Mat hm_bare = p.delta * (i * (s.op("g11") * s.op("g12"))) + 1e-7 * P;
  const EigResult em = eigh(hm_bare);

  auto track = [&](const Vec& bare, double& energy, double& overlap) {
    long best = 0;
    (e.vectors.adjoint() * bare).cwiseAbs2().maxCoeff(&best);
    const Vec v = e.vectors.col(best);
    energy = e.values(best);
    overlap = std::norm(v.dot(bare));
  };

  std::vector<ShiftMeasurement> out;
  for (int tz : {+1, -1}) {
    for (long col = 0; col < 8; ++col) {
      const Vec mv = em.vectors.col(col);
      const double pval = (mv.adjoint() * P * mv)(0).real();
      if (std::abs(std::abs(pval) - 1.0) > 1e-6) continue;
      const int pv = pval > 0 ? 1 : -1;
      ShiftMeasurement sm;
      sm.tz = tz;
      sm.parity = pv;
      double e0, e1;
      track(bare_readout_state(p0, 0, tz > 0, mv), e0, sm.overlap0);
      track(bare_readout_state(p0, 1, tz > 0, mv), e1, sm.overlap1);
      if (sm.overlap0 < 0.7 || sm.overlap1 < 0.7) continue;
      sm.numeric = e1 - e0;
      sm.closed_form = effective_cavity_frequency(p, tz, pv);
      sm.tolerance = dispersive_shift_tolerance(p, pv);
      out.push_back(sm);
    }
  }
  return out;
}

MeasurementError measurement_error(const ReadoutParams& p, double t_m) {
  p.validate();
  if (!(t_m > 0.0)) throw ConfigError("measurement_error: t_m must be positive");
  const double D = p.delta_plus - p.delta_minus - std::abs(p.delta);
  if (std::abs(D) < std::abs(p.eps11))
    return {std::abs(p.eps11) * t_m, false};
  if (p.eps11 == 0.0) return {0.0, true};

  ReadoutParams p0 = p;
  p0.eps11 = 0.0;
  ReadoutModel m0 = build_H_ro(p0);
  ReadoutModel m1 = build_H_ro(p);
  EigResult e0 = eigh(m0.H);
  EigResult e1 = eigh(m1.H);
  const long dim = m0.dim;
  const Mat ident = Mat::Identity(dim, dim);

  double worst = 0.0;
  for (int pv : {+1, -1}) {
    long k0 = -1;
    for (long k = 0; k < dim; ++k) {  // ascending energies: first hit is lowest
      const Vec v = e0.vectors.col(k);
      if (std::abs((v.adjoint() * m0.parity * v)(0).real() - pv) > 1e-8) continue;
      if ((v.adjoint() * m0.n_photon * v)(0).real() >= 0.1) continue;
      if ((v.adjoint() * m0.tz * v)(0).real() >= -0.9) continue;
      k0 = k;
      break;
    }
    if (k0 < 0)
      throw NumericError(
          "measurement_error: no photon-vacuum transmon-ground state of "
          "definite parity found; increase n_max or reduce g");
    long k1 = 0;
    Eigen::VectorXd ov = (e1.vectors.adjoint() * e0.vectors.col(k0)).cwiseAbs2();
    const double ovmax = ov.maxCoeff(&k1);
    if (ovmax < 0.5)
      throw NumericError(
          "measurement_error: perturbed readout state cannot be identified "
          "(best overlap below 0.5)");
    const Vec psi = e1.vectors.col(k1);
    const double wrong =
        (psi.adjoint() * (0.5 * (ident - double(pv) * m1.parity)) * psi)(0).real();
    worst = std::max(worst, std::sqrt(std::max(0.0, wrong)));
  }
  return {worst, true};
}

}  // namespace mbraid
