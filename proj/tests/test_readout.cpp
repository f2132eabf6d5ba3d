#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mbraid/errors.hpp"
#include "mbraid/linalg.hpp"
#include "mbraid/readout.hpp"

using namespace mbraid;

namespace {

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

double expect(const Mat& op, const Vec& v) {
  return (v.adjoint() * op * v)(0).real();
}

// Joint eigenvector of the accidental-pair parity, the readout parity and
// the bus-pair parity with the requested signs (weighted-sum trick: all
// eight joint eigenvalues of the sum are distinct).
Vec joint_majorana_state(int pair_sign, int parity_sign, int bus_sign) {
  const MajoranaSet& s = readout_register();
  const cxd i(0.0, 1.0);
  const Mat pairp = -i * (s.op("g11") * s.op("g12"));
  const Mat busp = -i * (s.op("gb1") * s.op("gb2"));
  const Mat P = readout_parity_op();
  const EigResult joint = eigh(Mat(pairp + 3.0 * P + 0.1 * busp));
  for (long c = 0; c < 8; ++c) {
    const Vec v = joint.vectors.col(c);
    if (expect(pairp, v) * pair_sign > 0.9 && expect(P, v) * parity_sign > 0.9 &&
        expect(busp, v) * bus_sign > 0.9)
      return v;
  }
  throw std::runtime_error("joint eigenvector not found");
}

}  // namespace

TEST_CASE("readout register and parity operator satisfy the algebra") {
  const MajoranaSet& s = readout_register();
  CHECK(s.size() == 6);
  CHECK(s.dim() == 8);
  const Mat p = readout_parity_op();
  CHECK(max_abs(p - Mat(p.adjoint())) <= 1e-12);
  CHECK(max_abs(p * p - Mat::Identity(8, 8)) <= 1e-12);
}

TEST_CASE("parameter validation rejects broken configurations") {
  ReadoutParams p;
  CHECK_NOTHROW(p.validate());
  p.n_max = 0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  ReadoutParams q;
  q.g = -0.1;
  CHECK_THROWS_AS(q.validate(), ConfigError);
  ReadoutParams r;
  r.omega0 = 0.0;
  CHECK_THROWS_AS(r.validate(), ConfigError);
  ReadoutParams s;
  s.delta = std::nan("");
  CHECK_THROWS_AS(s.validate(), ConfigError);
}

TEST_CASE("full readout hamiltonian is hermitian with the right blocks") {
  ReadoutParams p;
  const ReadoutModel m = build_H_ro(p);
  CHECK(m.dim == p.dim());
  CHECK(max_abs(m.H - Mat(m.H.adjoint())) <= 1e-12);
  // the probe parity is conserved while the tunnel coupling is off
  CHECK(spectral_norm(m.H * m.parity - m.parity * m.H) <= 1e-10);
  // photon number is broken only by the cavity-transmon exchange
  CHECK(spectral_norm(m.H * m.n_photon - m.n_photon * m.H) > 0.1);
  ReadoutParams off = p;
  off.g = 0.0;
  const ReadoutModel m0 = build_H_ro(off);
  CHECK(spectral_norm(m0.H * m0.n_photon - m0.n_photon * m0.H) <= 1e-10);
}

TEST_CASE("tunnel coupling breaks the readout parity") {
  ReadoutParams p;
  p.eps11 = 0.05;
  const ReadoutModel m = build_H_ro(p);
  CHECK(spectral_norm(m.H * m.parity - m.parity * m.H) > 1e-3);
}

TEST_CASE("dispersive shift closed form and validity guard") {
  ReadoutParams p;  // detuning 10, g = 0.5, delta_plus = 1
  CHECK(dispersive_shift(p, +1) == doctest::Approx(0.25 / 12.0).epsilon(1e-12));
  CHECK(dispersive_shift(p, -1) == doctest::Approx(0.25 / 8.0).epsilon(1e-12));
  CHECK(effective_cavity_frequency(p, +1, +1) ==
        doctest::Approx(50.0 + 0.25 / 12.0).epsilon(1e-12));
  CHECK(effective_cavity_frequency(p, -1, -1) ==
        doctest::Approx(50.0 - 0.25 / 8.0).epsilon(1e-12));
  CHECK(dispersive_shift_tolerance(p, -1) ==
        doctest::Approx(5.0 * std::pow(0.5, 4) / 512.0).epsilon(1e-12));
  CHECK_THROWS_AS(effective_cavity_frequency(p, 2, 1), ConfigError);
  CHECK_THROWS_AS(dispersive_shift(p, 0), ConfigError);
  ReadoutParams tight = p;
  tight.delta_plus = 2.6;  // pushes the odd-parity denominator to 4.8 < 10 g
  CHECK_THROWS_AS(dispersive_shift(tight, -1), NumericError);
  CHECK_NOTHROW(dispersive_shift(tight, +1));
}

TEST_CASE("shift becomes parity-independent when the splitting shift vanishes") {
  ReadoutParams p;
  p.delta_plus = 0.0;
  CHECK(dispersive_shift(p, +1) == doctest::Approx(dispersive_shift(p, -1)));
}

TEST_CASE("bare states carry the advertised quantum numbers") {
  ReadoutParams p;
  const ReadoutModel m = build_H_ro(p);
  const Vec maj = Vec::Unit(8, 0);
  const Vec st = bare_readout_state(p, 2, true, maj);
  CHECK(st.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(expect(m.n_photon, st) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(expect(m.tz, st) == doctest::Approx(1.0).epsilon(1e-12));
  const Vec sg = bare_readout_state(p, 0, false, maj);
  CHECK(expect(m.tz, sg) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_THROWS_AS(bare_readout_state(p, p.n_max + 1, true, maj), ConfigError);
  CHECK_THROWS_AS(bare_readout_state(p, -1, true, maj), ConfigError);
  CHECK_THROWS_AS(bare_readout_state(p, 0, true, Vec::Unit(4, 0)), ConfigError);
}

TEST_CASE("dressed states track their bare ancestors in the dispersive regime") {
  ReadoutParams p;
  const ReadoutModel m = build_H_ro(p);
  const Vec maj = joint_majorana_state(+1, +1, +1);
  const Vec bare = bare_readout_state(p, 0, true, maj);
  const DressedState d = dressed_state(m.H, bare);
  CHECK(d.overlap >= 0.95);
  // bare energy 0.5*Omega0 + delta_plus + delta_minus - delta = 31.1 plus a
  // small dispersive repulsion g^2/12
  CHECK(std::abs(d.energy - 31.1) <= 0.05);
  CHECK_THROWS_AS(dressed_state(m.H, Vec::Unit(4, 0)), ConfigError);
}

TEST_CASE("identification fails for a superposition split by strong coupling") {
  ReadoutParams strong;
  strong.g = 2.0;
  const ReadoutModel m = build_H_ro(strong);
  // equal superposition of two majorana branches separated by ~3 energy
  // units, each of which is itself split by the cavity coupling
  const Vec a = joint_majorana_state(+1, +1, +1);
  const Vec b = joint_majorana_state(-1, -1, +1);
  const Vec maj = ((a + b) / std::sqrt(2.0)).eval();
  const Vec bare = bare_readout_state(strong, 0, true, maj);
  CHECK_THROWS_AS(dressed_state(m.H, bare), NumericError);
}

TEST_CASE("numeric cavity shifts match the closed form within tolerance") {
  ReadoutParams p;
  const auto shifts = measure_dispersive_shifts(p);
  REQUIRE(shifts.size() >= 2);
  double shift_of[2] = {0.0, 0.0};  // [0] = odd parity, [1] = even parity
  bool seen[2] = {false, false};
  double tolmax = 0.0;
  for (const auto& s : shifts) {
    CHECK(std::abs(s.numeric - s.closed_form) <= s.tolerance);
    CHECK(s.overlap0 >= 0.7);
    CHECK(s.overlap1 >= 0.7);
    const int idx = s.parity > 0 ? 1 : 0;
    shift_of[idx] = (s.numeric - p.omega0) * s.tz;
    seen[idx] = true;
    tolmax = std::max(tolmax, s.tolerance);
  }
  REQUIRE(seen[0]);
  REQUIRE(seen[1]);
  // the two parities are distinguishable: the shifts differ by much more
  // than the closed-form error bars
  CHECK(std::abs(shift_of[0] - shift_of[1]) > 4.0 * tolmax);
}

TEST_CASE("measurement error follows the perturbative amplitude") {
  ReadoutParams p;
  p.eps11 = 0.01;
  const MeasurementError me = measurement_error(p);
  CHECK(me.dispersive);
  // effective detuning delta_plus - delta_minus - |delta| = 0.5 at the
  // defaults, so the misidentification amplitude is eps11 / (2 * 0.5)
  CHECK(me.value == doctest::Approx(0.01).epsilon(0.05));

  ReadoutParams z = p;
  z.eps11 = 0.0;
  const MeasurementError mz = measurement_error(z);
  CHECK(mz.value == 0.0);  // exact zero, not merely small
  CHECK(mz.dispersive);

  // inside the crossing window the readout fails and the error grows with
  // the measurement time instead
  ReadoutParams res = p;
  res.delta = 0.695;  // effective detuning 0.005 < eps11
  const MeasurementError mres = measurement_error(res, 2.5);
  CHECK(!mres.dispersive);
  CHECK(mres.value == doctest::Approx(0.01 * 2.5).epsilon(1e-12));

  CHECK_THROWS_AS(measurement_error(p, 0.0), ConfigError);
}

TEST_CASE("measurement error log-log slope against detuning is minus one") {
  ReadoutParams p;
  p.eps11 = 0.002;  // deep perturbative window
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (double delta : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    ReadoutParams q = p;
    q.delta = delta;
    const MeasurementError me = measurement_error(q);
    REQUIRE(me.dispersive);
    const double D = q.delta_plus - q.delta_minus - delta;
    const double lx = std::log(D), ly = std::log(me.value);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope == doctest::Approx(-1.0).epsilon(0.1));
}
