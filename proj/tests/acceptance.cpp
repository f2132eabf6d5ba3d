// Acceptance gate: the nine release-blocking behaviors of the simulator,
// one PASS/FAIL line each with the measured value and its pinned tolerance.
// Exit code 0 only when every criterion holds.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "mbraid/csvio.hpp"
#include "mbraid/pauli.hpp"
#include "mbraid/propagation.hpp"
#include "mbraid/readout.hpp"
#include "mbraid/sweep.hpp"

namespace {

using namespace mbraid;
using clk = std::chrono::steady_clock;

double secs(clk::time_point a, clk::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

std::string g3(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Criterion {
  std::string name;
  bool pass = false;
  std::string detail;
};

PathSpec circular500() {
  PathSpec p;
  p.kind = PathKind::circular;
  p.d_max = 500.0;
  return p;
}

// ---------------------------------------------------------------------------
// 1. Exact operator algebra for registers up to 12 modes, in under a second.
// ---------------------------------------------------------------------------

Criterion c1_register_algebra() {
  const auto t0 = clk::now();
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    const MajoranaSet s = MajoranaSet::build(n);
    const Mat ident = Mat::Identity(s.dim(), s.dim());
    for (int i = 0; i < s.size(); ++i) {
      worst = std::max(worst,
                       (s.op(i) - Mat(s.op(i).adjoint())).cwiseAbs().maxCoeff());
      for (int j = i; j < s.size(); ++j) {
        Mat anti = s.op(i) * s.op(j) + s.op(j) * s.op(i);
        if (i == j) anti -= 2.0 * ident;
        worst = std::max(worst, anti.cwiseAbs().maxCoeff());
      }
    }
  }
  const MajoranaSet& c = canonical_six_set();
  const Mat s0 = pauli0(), sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  const std::pair<std::string, Mat> forms[] = {
      {"g1", kron(kron(sx, sz), sz)}, {"g2", kron(kron(sy, sz), sz)},
      {"GE", kron(kron(s0, sx), sz)}, {"GF", kron(kron(s0, sy), sz)},
      {"GB", kron(kron(s0, s0), sx)}, {"GC", kron(kron(s0, s0), sy)}};
  double kron_dev = 0.0;
  for (const auto& [label, want] : forms)
    kron_dev = std::max(kron_dev, (c.op(label) - want).cwiseAbs().maxCoeff());
  const double dt = secs(t0, clk::now());
  return {"exact-register-algebra",
          worst <= 1e-12 && kron_dev == 0.0 && dt < 1.0,
          "registers to 12 modes: algebra violation " + g3(worst) +
              " (<=1e-12), canonical Kronecker deviation " + g3(kron_dev) +
              " (exact), " + g3(dt) + "s (<1s)"};
}

// ---------------------------------------------------------------------------
// 2. Clean braid at d_max = 500: quarter rotation to 1e-4 and the
//    (0.5, 1, 0.5, 0) flip pattern to 1e-3, under a minute per cycle.
// ---------------------------------------------------------------------------

Criterion c2_clean_braid() {
  const PathSpec path = circular500();
  const int spl = 15000;
  const auto t0 = clk::now();
  const BraidResult r = braid_cycle(DeviceSpec::clean(), DisorderConfig{}, path,
                                    SectorChoice{}, 1.0, spl, 424242);
  const double cycle_s = secs(t0, clk::now());
  const double infid = 1.0 - r.fidelity;

  const std::vector<double> pf = pflip_sequence(
      DeviceSpec::clean(), DisorderConfig{}, path, 4, SectorChoice{}, 424242,
      spl, 0);
  const double ref[4] = {0.5, 1.0, 0.5, 0.0};
  double worst_dev = 0.0;
  for (int k = 0; k < 4; ++k)
    worst_dev = std::max(worst_dev, std::abs(pf[k] - ref[k]));

  const bool pass = infid <= 1e-4 && !r.protocol_failure &&
                    worst_dev <= 1e-3 && cycle_s < 60.0;
  return {"clean-braid-cycle", pass,
          "infidelity " + g3(infid) + " (<=1e-4), flip-pattern deviation " +
              g3(worst_dev) + " (<=1e-3), " + g3(cycle_s) + "s/cycle (<60s)"};
}

// ---------------------------------------------------------------------------
// 3. Accidental pairs with zero tunnel coupling never disturb the protocol,
//    for random bond strengths and random ancilla parities.
// ---------------------------------------------------------------------------

Criterion c3_decoupled_pairs() {
  const PathSpec path = circular500();
  SplitMix64 rng(20260816);
  const std::vector<std::vector<std::string>> configs = {
      {"b"}, {"2"}, {"b", "3"}};
  double worst = 0.0;
  std::string parts;
  for (const auto& islands : configs) {
    DeviceSpec spec = DeviceSpec::clean();
    DisorderConfig dis;
    SectorChoice sector;
    double sum_bonds = 0.0;
    std::string tag;
    for (const auto& isl : islands) {
      spec.counts[isl] += 2;
      const double bond = 5.0 + 245.0 * rng.uniform();
      const int parity = rng.uniform() < 0.5 ? -1 : 1;
      dis.delta[isl] = {bond};
      sector.island_parity[isl] = parity;
      sum_bonds += bond;
      tag += (tag.empty() ? "" : "+") + isl + "(" + g3(bond) +
             (parity > 0 ? ",+1)" : ",-1)");
    }
    const int spl = 2 * static_cast<int>(7.5 * (path.d_max + sum_bonds)) + 2;
    const std::vector<double> pf =
        pflip_sequence(spec, dis, path, 4, sector, 97531, spl, 0);
    const double ref[4] = {0.5, 1.0, 0.5, 0.0};
    double dev = 0.0;
    for (int k = 0; k < 4; ++k) dev = std::max(dev, std::abs(pf[k] - ref[k]));
    worst = std::max(worst, dev);
    parts += (parts.empty() ? "" : ", ") + tag + " dev " + g3(dev);
  }
  return {"decoupled-pair-invariance", worst <= 1e-3,
          parts + "; worst " + g3(worst) + " (<=1e-3)"};
}

// ---------------------------------------------------------------------------
// 4. The unitary channel conjugations hold to rounding, and the correction
//    norms of conjugation-related channels agree to 1% across a 50-point
//    coupling sweep.
// ---------------------------------------------------------------------------

double conjugation_identity_residual() {
  const MajoranaSet& s = canonical_six_set();
  const Mat &g1 = s.op("g1"), &g2 = s.op("g2"), &GE = s.op("GE"),
            &GF = s.op("GF"), &GB = s.op("GB"), &GC = s.op("GC");
  const cxd i(0.0, 1.0);
  const ChannelSymmetries sym = channel_symmetry_unitaries();
  SplitMix64 rng(91);
  auto u = [&] { return 0.2 + 1.8 * rng.uniform(); };
  const double d1 = u(), d2 = u(), d3 = u(), dl = u(), ep = u();
  const Mat pi4 = GB * g1 * g2 * GE;
  const Mat pi5 = GE * g1 * g2 * GF;
  const Mat pi6 = GE * g1 * g2 * GC;
  const Mat base = i * dl * (g1 * g2);
  auto fam = [&](const std::string& tag, double a, double b, double c) {
    Mat H;
    if (tag == "11" || tag == "12")
      H = a * pi4 + i * b * (GE * GF) + i * c * (GE * GC) + base;
    else if (tag == "21" || tag == "22")
      H = i * a * (GB * GE) + b * pi5 + i * c * (GE * GC) + base;
    else
      H = i * a * (GB * GE) + i * b * (GE * GF) + c * pi6 + base;
    const std::map<std::string, Mat> hop = {
        {"11", i * (GB * g1)}, {"22", i * (g2 * GF)}, {"32", i * (g2 * GC)},
        {"12", i * (g2 * GE)}, {"31", i * (GE * g1)}};
    return Mat(H + ep * hop.at(tag));
  };
  double worst = 0.0;
  for (const Mat* m : {&sym.U12, &sym.U13, &sym.U13t})
    worst = std::max(worst, (Mat(*m * m->adjoint()) - Mat::Identity(8, 8))
                                .cwiseAbs()
                                .maxCoeff());
  const Mat h11 = fam("11", d1, d2, d3);
  worst = std::max(
      worst, (h11 - sym.U12 * fam("22", d1, d2, d3) * sym.U12.adjoint())
                 .cwiseAbs()
                 .maxCoeff());
  worst = std::max(
      worst, (h11 - sym.U13 * fam("32", d1, d2, d3) * sym.U13.adjoint())
                 .cwiseAbs()
                 .maxCoeff());
  worst = std::max(worst, (fam("12", d1, d2, d3) -
                           sym.U13t * fam("31", d3, d2, d1) * sym.U13t.adjoint())
                              .cwiseAbs()
                              .maxCoeff());
  return worst;
}

Criterion c4_norm_classes() {
  const double ident = conjugation_identity_residual();
  const PathSpec path = circular500();
  const std::vector<std::vector<std::string>> classes = {
      {"b2", "g1"}, {"11", "22", "32"}, {"12", "31"}};
  double worst_spread = 0.0;
  bool all_converged = true;
  int points = 0;
  for (int k = 1; k <= 50; ++k) {
    const double delta = 2.0 * k;  // 2, 4, ..., 100
    ++points;
    for (const auto& cls : classes) {
      double lo = 0.0, hi = 0.0;
      bool first = true;
      for (const auto& ch : cls) {
        const ChannelCorrection c = channel_correction(ch, delta, path, 0);
        all_converged = all_converged && c.converged;
        if (first) {
          lo = hi = c.norm;
          first = false;
        } else {
          lo = std::min(lo, c.norm);
          hi = std::max(hi, c.norm);
        }
      }
      if (hi > 0.0) worst_spread = std::max(worst_spread, (hi - lo) / hi);
    }
  }
  const bool pass = ident <= 1e-12 && worst_spread <= 0.01 && all_converged;
  return {"conjugation-norm-classes", pass,
          "identity residual " + g3(ident) + " (<=1e-12), worst class spread " +
              g3(100.0 * worst_spread) + "% over " + std::to_string(points) +
              " couplings (<=1%)" + (all_converged ? "" : ", UNCONVERGED")};
}

// ---------------------------------------------------------------------------
// 5. Closed-form norm table: antinode-locked cells within 15%, peak
//    positions at small coupling and on resonance, and a full default sweep
//    extrapolating under 30 minutes on eight workers.
// ---------------------------------------------------------------------------

struct Branches {
  double coulomb = 0.0;    // smooth short-path contribution
  double resonance = 0.0;  // contribution peaked at |delta| = d_max
};

Branches closed_form_branches(const std::string& ch, double d, double D) {
  const double r2 = std::sqrt(2.0);
  Branches b;
  if (ch == "11") {
    b.coulomb = std::abs(std::sin(3.0 * d)) / std::abs(d);
    return b;
  }
  if (ch == "21") {
    b.coulomb = std::abs(std::sin(3.0 * d)) / std::abs(d);
    for (double s : {-1.0, 1.0}) {
      const double x = d + s * D;
      b.resonance = std::max(
          b.resonance, M_PI * std::abs(std::cos(3.0 * x)) / (4.0 * x * x));
    }
    return b;
  }
  if (ch == "12") {
    b.coulomb = M_PI * std::abs(std::cos(2.0 * d)) / (4.0 * d * d);
    for (double s : {-1.0, 1.0})
      for (double u : {-1.0, 1.0}) {
        const double x = d + s * D;
        b.resonance = std::max(
            b.resonance,
            std::abs(std::cos(3.0 * x) + u * std::sin(3.0 * x)) /
                (r2 * std::abs(x)));
      }
    return b;
  }
  // b2
  for (double u : {-1.0, 1.0})
    b.coulomb = std::max(
        b.coulomb, std::sqrt(std::max(0.0, 1.0 + u * std::sin(6.0 * d))) /
                       (r2 * std::abs(d)));
  for (double s : {-1.0, 1.0}) {
    const double x = d + s * D;
    b.resonance = std::max(b.resonance,
                           M_PI * std::abs(std::cos(2.0 * x)) / (4.0 * x * x));
  }
  return b;
}

double closed_form_norm(const std::string& ch, double d, double D) {
  const Branches b = closed_form_branches(ch, d, D);
  return std::max(b.coulomb, b.resonance);
}

Criterion c5_closed_form_table() {
  const PathSpec path = circular500();
  const double D = path.d_max;
  const std::string channels[4] = {"b2", "11", "12", "21"};
  const double anchors[5] = {20.0, 50.0, 100.0, 400.0, 600.0};

  int included = 0, excluded = 0;
  bool exclusion_expected = true;
  double worst_rel = 0.0;
  bool all_converged = true;
  for (const auto& ch : channels) {
    for (double dstar : anchors) {
      // lock to the nearest antinode of the closed form so the comparison
      // never lands on a node where the relative error is meaningless
      double best_x = dstar, best_v = -1.0;
      for (int k = 0; k <= 400; ++k) {
        const double x = dstar - 2.0 + 0.01 * k;
        const double v = closed_form_norm(ch, x, D);
        if (v > best_v) {
          best_v = v;
          best_x = x;
        }
      }
      // skip cells where the two branch families compete within a factor
      // of two: there the simple maximum misstates the combined amplitude
      const Branches b = closed_form_branches(ch, best_x, D);
      const double lo = std::min(b.coulomb, b.resonance);
      const double hi = std::max(b.coulomb, b.resonance);
      if (lo > 0.0 && hi / lo < 2.0) {
        ++excluded;
        if (!(ch == "12" && dstar == 20.0)) exclusion_expected = false;
        continue;
      }
      ++included;
      const ChannelCorrection c = channel_correction(ch, best_x, path, 0);
      all_converged = all_converged && c.converged;
      worst_rel = std::max(worst_rel, std::abs(c.norm - best_v) / best_v);
    }
  }

  // numeric peak positions of the resonance-carrying channel
  auto norm21 = [&](double d) {
    return channel_correction("21", d, path, 0).norm;
  };
  double low_x = 0.0, low_v = -1.0;
  for (int k = 1; k <= 24; ++k) {
    const double d = 0.25 * k;  // 0.25 .. 6
    const double v = norm21(d);
    if (v > low_v) {
      low_v = v;
      low_x = d;
    }
  }
  for (double d : {8.0, 12.0, 20.0, 40.0, 80.0, 150.0, 240.0}) {
    const double v = norm21(d);
    if (v > low_v) {
      low_v = v;
      low_x = d;
    }
  }
  double high_x = 0.0, high_v = -1.0;
  for (int k = 0; k <= 14; ++k) {
    const double d = 250.0 + 25.0 * k;  // 250 .. 600
    const double v = norm21(d);
    if (v > high_v) {
      high_v = v;
      high_x = d;
    }
  }
  for (int k = 0; k <= 40; ++k) {
    const double d = 460.0 + 2.0 * k;  // 460 .. 540
    const double v = norm21(d);
    if (v > high_v) {
      high_v = v;
      high_x = d;
    }
  }
  const bool peaks_ok = low_x <= 3.0 && std::abs(high_x - D) <= 0.02 * D;

  // runtime of the default 301-point four-channel sweep, extrapolated from
  // eight sampled points assuming eight-way worker scaling
  SweepSpec spec;
  double point_s = 0.0;
  const int samples[8] = {0, 43, 86, 129, 172, 215, 258, 300};
  for (int i : samples) {
    const auto t0 = clk::now();
    (void)sweep_point(spec, i);
    point_s += secs(t0, clk::now());
  }
  const double extrapolated = (point_s / 8.0) * spec.points / 8.0;

  const bool pass = included == 19 && excluded == 1 && exclusion_expected &&
                    worst_rel <= 0.15 && all_converged && peaks_ok &&
                    extrapolated < 1800.0;
  return {"closed-form-norm-table", pass,
          std::to_string(included) + " cells within " + g3(100.0 * worst_rel) +
              "% (<=15%, " + std::to_string(excluded) +
              " branch-mixed cell skipped), peaks at " + g3(low_x) +
              " (<=3) and " + g3(high_x) + " (|x-500|<=10), full sweep ~" +
              g3(extrapolated) + "s on 8 workers (<1800s)"};
}

// ---------------------------------------------------------------------------
// 6. The resonance stays narrow on the rounded path: the square path's
//    full width at half maximum is at least three times wider.
// ---------------------------------------------------------------------------

double resonance_fwhm(PathKind kind, double lo, double hi, double step,
                      double window) {
  PathSpec path;
  path.kind = kind;
  path.d_max = 500.0;
  std::vector<double> xs, ys;
  for (double d = lo; d <= hi + 1e-9; d += step) {
    xs.push_back(d);
    ys.push_back(channel_correction("21", d, path, 0).norm);
  }
  const std::size_t n = xs.size();
  std::vector<double> env(n, 0.0);  // running max: strips the fast fringes
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(xs[j] - xs[i]) <= window + 1e-9)
        env[i] = std::max(env[i], ys[j]);
  std::size_t ipk = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (env[i] > env[ipk]) ipk = i;
  const double half = env[ipk] / 2.0;
  double left = xs.front(), right = xs.back();
  for (std::size_t i = ipk; i > 0; --i)
    if (env[i - 1] < half && env[i] >= half) {
      const double t = (half - env[i - 1]) / (env[i] - env[i - 1]);
      left = xs[i - 1] + t * (xs[i] - xs[i - 1]);
      break;
    }
  for (std::size_t i = ipk; i + 1 < n; ++i)
    if (env[i + 1] < half && env[i] >= half) {
      const double t = (half - env[i + 1]) / (env[i] - env[i + 1]);
      right = xs[i + 1] - t * (xs[i + 1] - xs[i]);
      break;
    }
  return right - left;
}

Criterion c6_linewidth_ratio() {
  const double f_circ = resonance_fwhm(PathKind::circular, 490.0, 512.0, 0.5, 1.5);
  const double f_square = resonance_fwhm(PathKind::square, 470.0, 762.0, 4.0, 8.0);
  const double ratio = f_circ > 0.0 ? f_square / f_circ : 0.0;
  return {"resonance-linewidth-ratio", f_circ > 0.0 && ratio >= 3.0,
          "FWHM square " + g3(f_square) + " vs circular " + g3(f_circ) +
              ": ratio " + g3(ratio) + " (>=3)"};
}

// ---------------------------------------------------------------------------
// 7. The first-order correction is the true leading order: halving the
//    tunnel coupling scales the residual by four.
// ---------------------------------------------------------------------------

Criterion c7_first_order_scaling() {
  PathSpec path;
  path.kind = PathKind::circular;
  path.d_max = 100.0;
  const int nsteps = 12000;
  DeviceSpec spec = DeviceSpec::with_pair("2");
  DisorderConfig dis;
  dis.delta["2"] = {17.3};
  DisorderConfig unit = dis;
  unit.eps["21"] = 1.0;
  Device dev(spec);
  const Mat hdelta = dev.H_delta(dis);
  const Mat h_op = dev.H_eps(unit);
  auto H0 = [&](double t) {
    const CouplingSet c = coupling_at(path, t);
    return Mat(dev.H_C(c) + hdelta);
  };
  const double T = path.t_cycle();
  const FirstOrderCycle base = first_order_cycle(H0, h_op, T, nsteps);
  double resid[3];
  const double eps_list[3] = {0.1, 0.05, 0.025};
  for (int k = 0; k < 3; ++k) {
    const double eps = eps_list[k];
    auto H = [&](double t) { return Mat(H0(t) + eps * h_op); };
    resid[k] = spectral_norm(full_propagator(H, T, nsteps) -
                             (base.U0T + eps * base.dU));
  }
  const double r1 = resid[0] / resid[1];
  const double r2 = resid[1] / resid[2];
  const bool pass = r1 >= 3.0 && r1 <= 5.0 && r2 >= 3.0 && r2 <= 5.0;
  return {"first-order-scaling", pass,
          "residual ratios " + g3(r1) + ", " + g3(r2) +
              " for couplings 0.1/0.05/0.025 (within [3,5])"};
}

// ---------------------------------------------------------------------------
// 8. Dispersive readout: numeric cavity shifts inside the closed form's own
//    error bar, inverse-detuning error scaling, and an exact zero at zero
//    tunnel coupling.
// ---------------------------------------------------------------------------

Criterion c8_dispersive_readout() {
  ReadoutParams rp;
  const std::vector<ShiftMeasurement> shifts = measure_dispersive_shifts(rp);
  bool shifts_ok = !shifts.empty();
  bool seen_plus = false, seen_minus = false;
  double worst_margin = 0.0;  // error / tolerance, worst case
  for (const auto& s : shifts) {
    const double err = std::abs(s.numeric - s.closed_form);
    shifts_ok = shifts_ok && err <= s.tolerance;
    worst_margin = std::max(worst_margin, err / s.tolerance);
    seen_plus = seen_plus || s.parity == +1;
    seen_minus = seen_minus || s.parity == -1;
  }
  shifts_ok = shifts_ok && seen_plus && seen_minus;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  bool slope_data_ok = true;
  for (int k = 1; k <= 6; ++k) {
    ReadoutParams q = rp;
    q.delta = 0.1 * k;
    q.eps11 = 0.01;
    const MeasurementError me = measurement_error(q);
    slope_data_ok = slope_data_ok && me.dispersive && me.value > 0.0;
    if (!me.dispersive || me.value <= 0.0) continue;
    const double lx = std::log(q.delta_plus - q.delta_minus - q.delta);
    const double ly = std::log(me.value);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  const double slope =
      n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;
  const bool slope_ok = slope_data_ok && std::abs(slope + 1.0) <= 0.1;

  ReadoutParams z;  // defaults keep eps11 = 0
  const bool zero_ok = measurement_error(z).value == 0.0;

  return {"dispersive-readout", shifts_ok && slope_ok && zero_ok,
          "shift error at " + g3(100.0 * worst_margin) +
              "% of tolerance (<=100%), error slope " + g3(slope) +
              " (-1 +- 0.1), zero-coupling error " +
              std::string(zero_ok ? "exactly 0" : "NONZERO")};
}

// ---------------------------------------------------------------------------
// 9. Deterministic outputs: identical bytes for any worker count, and norms
//    stable to 0.5% under grid doubling.
// ---------------------------------------------------------------------------

Criterion c9_deterministic_outputs() {
  SweepSpec spec;
  spec.start = 20.0;
  spec.stop = 100.0;
  spec.points = 5;
  spec.path = circular500();
  const std::vector<SweepRow> serial = run_sweep_serial(spec);
  spec.workers = 1;
  const std::vector<SweepRow> one = run_sweep(spec);
  spec.workers = 4;
  const std::vector<SweepRow> four = run_sweep(spec);
  const std::uint64_t tag = 0x1234;
  const std::string s0 = sweep_csv(serial, "delta", tag, {});
  const std::string s1 = sweep_csv(one, "delta", tag, {});
  const std::string s4 = sweep_csv(four, "delta", tag, {});
  const bool identical = s0 == s1 && s1 == s4;

  const PathSpec path = circular500();
  double worst_shift = 0.0;
  for (double delta : {20.0, 50.0, 100.0}) {
    const int spl = adaptive_steps_per_leg(delta, path);
    for (const auto& ch : sweep_channels()) {
      const double n1 = channel_correction(ch, delta, path, spl).norm;
      const double n2 = channel_correction(ch, delta, path, 2 * spl).norm;
      worst_shift = std::max(worst_shift, std::abs(n1 - n2) / n2);
    }
  }
  const bool pass = identical && worst_shift < 0.005;
  return {"deterministic-outputs", pass,
          std::string(identical ? "serial/1/4-worker bytes identical"
                                : "WORKER OUTPUTS DIFFER") +
              ", grid-doubling shift " + g3(100.0 * worst_shift) +
              "% (<0.5%)"};
}

}  // namespace

int main() {
  using Fn = Criterion (*)();
  const std::pair<const char*, Fn> plan[] = {
      {"exact-register-algebra", c1_register_algebra},
      {"clean-braid-cycle", c2_clean_braid},
      {"decoupled-pair-invariance", c3_decoupled_pairs},
      {"conjugation-norm-classes", c4_norm_classes},
      {"closed-form-norm-table", c5_closed_form_table},
      {"resonance-linewidth-ratio", c6_linewidth_ratio},
      {"first-order-scaling", c7_first_order_scaling},
      {"dispersive-readout", c8_dispersive_readout},
      {"deterministic-outputs", c9_deterministic_outputs},
  };
  int passed = 0, total = 0;
  for (const auto& [name, fn] : plan) {
    Criterion c;
    try {
      c = fn();
      c.name = name;
    } catch (const std::exception& e) {
      c = {name, false, std::string("exception: ") + e.what()};
    }
    ++total;
    if (c.pass) ++passed;
    std::printf("%s  %-28s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d acceptance criteria passed\n", passed, total);
  return passed == total ? 0 : 1;
}
