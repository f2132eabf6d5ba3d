// mbraid — Coulomb-assisted Majorana braiding simulator CLI.
// Subcommands: sweep-delta, pflip, readout, validate.
// Exit codes: 0 success, 1 validation failure, 2 config error, 3 numeric failure.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mbraid/config.hpp"
#include "mbraid/csvio.hpp"
#include "mbraid/pauli.hpp"
#include "mbraid/propagation.hpp"
#include "mbraid/readout.hpp"
#include "mbraid/sweep.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace mbraid;

constexpr const char* kUnits =
    "energies in D0, times in T0 = hbar/D0, frequencies in rad/T0";

struct Opts {
  std::string config_path;
  std::string out_dir = ".";
  std::string format = "csv";
  std::string path_override;
  int workers = 0;  // 0 = all hardware threads
  std::uint64_t seed = 12345;
};

ConfigFile load_config(const Opts& o) {
  return o.config_path.empty() ? ConfigFile::parse("")
                               : ConfigFile::load(o.config_path);
}

void apply_path_override(const Opts& o, PathSpec& p) {
  if (o.path_override == "circular")
    p.kind = PathKind::circular;
  else if (o.path_override == "square")
    p.kind = PathKind::square;
  else if (!o.path_override.empty())
    throw ConfigError("--path must be circular or square");
}

std::string out_file(const Opts& o, const std::string& stem) {
  std::filesystem::create_directories(o.out_dir);
  return (std::filesystem::path(o.out_dir) / (stem + "." + o.format)).string();
}

const char* path_kind_name(const PathSpec& p) {
  return p.kind == PathKind::circular ? "circular" : "square";
}

std::vector<std::string> path_header_lines(const PathSpec& p) {
  return {
      std::string("path = ") + path_kind_name(p),
      "d_max = " + format_g17(p.d_max),
      "d_min = " + format_g17(p.d_min_resolved()),
      "t0 = " + format_g17(p.T0),
      std::string("direction = ") +
          (p.direction == Direction::forward ? "forward" : "reversed"),
  };
}

json path_json(const PathSpec& p) {
  return json{{"kind", path_kind_name(p)},
              {"d_max", p.d_max},
              {"d_min", p.d_min_resolved()},
              {"t0", p.T0},
              {"direction",
               p.direction == Direction::forward ? "forward" : "reversed"}};
}

// ---------------------------------------------------------------------------
// sweep-delta
// ---------------------------------------------------------------------------

int cmd_sweep_delta(const Opts& o) {
  ConfigFile cfg = load_config(o);
  SweepSpec spec = sweep_from_config(cfg);
  apply_path_override(o, spec.path);
  spec.workers = o.workers;
  spec.validate();

  const std::vector<SweepRow> rows = run_sweep(spec);
  int unconverged = 0;
  for (const auto& r : rows)
    if (!r.converged) ++unconverged;

  std::string x_column = "delta";
  if (spec.variable == SweepVariable::d_max) x_column = "d_max";
  if (spec.variable == SweepVariable::eps_11) x_column = "eps_11";

  std::vector<std::string> extra = {"command = sweep-delta",
                                    "variable = " + x_column};
  for (auto& line : path_header_lines(spec.path)) extra.push_back(line);
  extra.push_back("steps_per_leg = " + (spec.steps_per_leg > 0
                                            ? std::to_string(spec.steps_per_leg)
                                            : std::string("adaptive")));
  extra.push_back("seed = " + std::to_string(o.seed));

  const std::string file =
      out_file(o, std::string("sweep_") + x_column + "_" + path_kind_name(spec.path));
  if (o.format == "csv") {
    write_file_atomic(file, sweep_csv(rows, x_column, cfg.hash(), extra));
  } else {
    json doc;
    doc["version"] = kVersion;
    doc["config_hash"] = hex_hash(cfg.hash());
    doc["units"] = kUnits;
    doc["command"] = "sweep-delta";
    doc["variable"] = x_column;
    doc["path"] = path_json(spec.path);
    doc["steps_per_leg"] = spec.steps_per_leg;
    doc["seed"] = o.seed;
    doc["columns"] = {x_column,         "norm_b2",     "norm_11",
                      "norm_12",        "norm_21",     "analytic_b2",
                      "analytic_11",    "analytic_12", "analytic_21",
                      "converged"};
    json jrows = json::array();
    for (const auto& r : rows) {
      json row = json::array();
      row.push_back(r.x);
      for (double v : r.norm) row.push_back(v);
      for (double v : r.analytic) row.push_back(v);
      row.push_back(r.converged ? 1 : 0);
      jrows.push_back(std::move(row));
    }
    doc["rows"] = std::move(jrows);
    write_file_atomic(file, doc.dump(2) + "\n");
  }
  std::printf("wrote %s (%zu rows, %d unconverged)\n", file.c_str(),
              rows.size(), unconverged);
  return 0;
}

// ---------------------------------------------------------------------------
// pflip
// ---------------------------------------------------------------------------

int cmd_pflip(const Opts& o) {
  ConfigFile cfg = load_config(o);
  const DeviceSpec spec = device_from_config(cfg);
  const DisorderConfig dis = disorder_from_config(cfg);
  PathSpec path = path_from_config(cfg);
  apply_path_override(o, path);
  const PflipSettings ps = pflip_from_config(cfg);

  const std::vector<double> values = pflip_sequence(
      spec, dis, path, ps.n_max, ps.sector, o.seed, ps.steps_per_leg, ps.shots);
  const double ref_pattern[4] = {0.5, 1.0, 0.5, 0.0};
  std::vector<double> reference, deviation;
  double max_dev = 0.0;
  for (int n = 1; n <= ps.n_max; ++n) {
    const double ref = ref_pattern[(n - 1) % 4];
    reference.push_back(ref);
    deviation.push_back(std::abs(values[static_cast<std::size_t>(n - 1)] - ref));
    max_dev = std::max(max_dev, deviation.back());
  }

  const std::string file = out_file(o, "pflip");
  if (o.format == "csv") {
    std::vector<std::string> extra = {"command = pflip"};
    for (auto& line : path_header_lines(path)) extra.push_back(line);
    extra.push_back("seed = " + std::to_string(o.seed));
    extra.push_back("shots = " + std::to_string(ps.shots));
    std::string out = csv_header(cfg.hash(), extra);
    out += "n,p_flip,reference,deviation\n";
    for (int n = 1; n <= ps.n_max; ++n) {
      out += std::to_string(n) + "," +
             format_g17(values[static_cast<std::size_t>(n - 1)]) + "," +
             format_g17(reference[static_cast<std::size_t>(n - 1)]) + "," +
             format_g17(deviation[static_cast<std::size_t>(n - 1)]) + "\n";
    }
    write_file_atomic(file, out);
  } else {
    json doc;
    doc["version"] = kVersion;
    doc["config_hash"] = hex_hash(cfg.hash());
    doc["units"] = kUnits;
    doc["command"] = "pflip";
    doc["path"] = path_json(path);
    doc["seed"] = o.seed;
    doc["n_max"] = ps.n_max;
    doc["shots"] = ps.shots;
    doc["p_flip"] = values;
    doc["reference"] = reference;
    doc["deviation"] = deviation;
    doc["max_deviation"] = max_dev;
    write_file_atomic(file, doc.dump(2) + "\n");
  }
  std::printf("wrote %s (n_max=%d, max deviation from clean sequence %.3g)\n",
              file.c_str(), ps.n_max, max_dev);
  return 0;
}

// ---------------------------------------------------------------------------
// readout
// ---------------------------------------------------------------------------

int cmd_readout(const Opts& o) {
  ConfigFile cfg = load_config(o);
  const ReadoutParams rp = readout_from_config(cfg);
  const std::vector<double> grid = readout_grid_from_config(cfg);
  // the detuning scan needs a probe coupling; default configs keep eps11 = 0
  const double probe_eps =
      rp.eps11 != 0.0 ? rp.eps11 : 0.01;

  // dispersive shifts at the configured working point
  bool shifts_dispersive = true;
  std::string shift_note;
  std::vector<ShiftMeasurement> shifts;
  try {
    shifts = measure_dispersive_shifts(rp);
  } catch (const NumericError& e) {
    shifts_dispersive = false;
    shift_note = e.what();
  }

  struct GridRow {
    double delta, detuning, eps_meas, closed_form;
    bool dispersive;
  };
  std::vector<GridRow> rows;
  for (double dl : grid) {
    ReadoutParams p2 = rp;
    p2.delta = dl;
    p2.eps11 = probe_eps;
    const MeasurementError me = measurement_error(p2);
    const double D = p2.delta_plus - p2.delta_minus - std::abs(dl);
    rows.push_back({dl, D, me.value,
                    D != 0.0 ? std::abs(probe_eps / (2.0 * D)) : 0.0,
                    me.dispersive});
  }
  // log-log slope of eps_meas vs detuning over the dispersive points
  double slope = 0.0;
  {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& r : rows) {
      if (!r.dispersive || r.detuning <= 0.0 || r.eps_meas <= 0.0) continue;
      const double lx = std::log(r.detuning), ly = std::log(r.eps_meas);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      ++n;
    }
    if (n >= 2) slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }

  const std::string file = out_file(o, "readout");
  if (o.format == "csv") {
    std::vector<std::string> extra = {"command = readout",
                                      "probe_eps11 = " + format_g17(probe_eps)};
    if (shifts_dispersive) {
      for (const auto& s : shifts)
        extra.push_back("shift tz=" + std::to_string(s.tz) + " parity=" +
                        std::to_string(s.parity) + ": numeric = " +
                        format_g17(s.numeric) + ", closed_form = " +
                        format_g17(s.closed_form) + ", tolerance = " +
                        format_g17(s.tolerance));
    } else {
      extra.push_back("shifts: not in dispersive regime (" + shift_note + ")");
    }
    extra.push_back("eps_meas_slope = " + format_g17(slope));
    std::string out = csv_header(cfg.hash(), extra);
    out += "delta,detuning,eps_meas,eps_meas_closed_form,dispersive\n";
    for (const auto& r : rows) {
      out += format_g17(r.delta) + "," + format_g17(r.detuning) + "," +
             format_g17(r.eps_meas) + "," + format_g17(r.closed_form) +
             (r.dispersive ? ",1\n" : ",0\n");
    }
    write_file_atomic(file, out);
  } else {
    json doc;
    doc["version"] = kVersion;
    doc["config_hash"] = hex_hash(cfg.hash());
    doc["units"] = kUnits;
    doc["command"] = "readout";
    doc["params"] = json{{"omega0", rp.omega0},
                         {"Omega0", rp.Omega0},
                         {"g", rp.g},
                         {"delta_plus", rp.delta_plus},
                         {"delta_minus", rp.delta_minus},
                         {"eps11", rp.eps11},
                         {"delta", rp.delta},
                         {"delta_b", rp.delta_b},
                         {"n_max", rp.n_max}};
    doc["probe_eps11"] = probe_eps;
    doc["shifts_dispersive"] = shifts_dispersive;
    if (!shifts_dispersive) doc["shift_note"] = shift_note;
    json jshifts = json::array();
    for (const auto& s : shifts)
      jshifts.push_back(json{{"tz", s.tz},
                             {"parity", s.parity},
                             {"numeric", s.numeric},
                             {"closed_form", s.closed_form},
                             {"tolerance", s.tolerance},
                             {"overlap0", s.overlap0},
                             {"overlap1", s.overlap1}});
    doc["shifts"] = std::move(jshifts);
    json jrows = json::array();
    for (const auto& r : rows)
      jrows.push_back(json{{"delta", r.delta},
                           {"detuning", r.detuning},
                           {"eps_meas", r.eps_meas},
                           {"eps_meas_closed_form", r.closed_form},
                           {"dispersive", r.dispersive}});
    doc["detuning_grid"] = std::move(jrows);
    doc["eps_meas_slope"] = slope;
    write_file_atomic(file, doc.dump(2) + "\n");
  }
  std::printf("wrote %s (%zu grid points, slope %.4f)\n", file.c_str(),
              rows.size(), slope);
  return 0;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

double hermitian_violation(const Mat& m) {
  return (m - Mat(m.adjoint())).cwiseAbs().maxCoeff();
}

Check check_register_algebra() {
  const MajoranaSet set = MajoranaSet::build(6);  // 12 Majoranas, dim 64
  double worst = 0.0;
  const Mat ident = Mat::Identity(set.dim(), set.dim());
  for (int i = 0; i < set.size(); ++i) {
    worst = std::max(worst, hermitian_violation(set.op(i)));
    for (int j = i; j < set.size(); ++j) {
      Mat anti = set.op(i) * set.op(j) + set.op(j) * set.op(i);
      if (i == j) anti -= 2.0 * ident;
      worst = std::max(worst, anti.cwiseAbs().maxCoeff());
    }
  }
  ParityOperator pi = island_parity(set, "probe", {0, 1, 2, 3});
  worst = std::max(worst, hermitian_violation(pi.matrix));
  worst = std::max(
      worst, (pi.matrix * pi.matrix - ident).cwiseAbs().maxCoeff());
  return {"register-algebra", worst <= 1e-12,
          "12-Majorana register: max invariant violation " + format_g17(worst)};
}

Check check_canonical_register() {
  const MajoranaSet& s = canonical_six_set();
  const Mat s0 = pauli0(), sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  const std::pair<std::string, Mat> expected[] = {
      {"g1", kron(kron(sx, sz), sz)}, {"g2", kron(kron(sy, sz), sz)},
      {"GE", kron(kron(s0, sx), sz)}, {"GF", kron(kron(s0, sy), sz)},
      {"GB", kron(kron(s0, s0), sx)}, {"GC", kron(kron(s0, s0), sy)}};
  double worst = 0.0;
  for (const auto& [label, want] : expected)
    worst = std::max(worst, (s.op(label) - want).cwiseAbs().maxCoeff());
  return {"canonical-register", worst == 0.0,
          "printed Kronecker forms, max deviation " + format_g17(worst)};
}

Check check_symmetries(bool corrupt_u12) {
  const MajoranaSet& s = canonical_six_set();
  const Mat &g1 = s.op("g1"), &g2 = s.op("g2"), &GE = s.op("GE"),
            &GF = s.op("GF"), &GB = s.op("GB"), &GC = s.op("GC");
  const cxd i(0.0, 1.0);
  ChannelSymmetries sym = channel_symmetry_unitaries();
  if (corrupt_u12) sym.U12.block(4, 4, 4, 4) *= -1.0;  // injected fault

  SplitMix64 rng(3);
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
  worst = std::max(worst, (h11 - sym.U12 * fam("22", d1, d2, d3) *
                                     sym.U12.adjoint())
                              .cwiseAbs()
                              .maxCoeff());
  worst = std::max(worst, (h11 - sym.U13 * fam("32", d1, d2, d3) *
                                     sym.U13.adjoint())
                              .cwiseAbs()
                              .maxCoeff());
  worst = std::max(
      worst, (fam("12", d1, d2, d3) - sym.U13t * fam("31", d3, d2, d1) *
                                          sym.U13t.adjoint())
                 .cwiseAbs()
                 .maxCoeff());
  return {"symmetry-conjugations", worst <= 1e-12,
          "channel conjugation identities, max residual " + format_g17(worst)};
}

Check check_schedule() {
  for (PathKind kind : {PathKind::circular, PathKind::square}) {
    PathSpec p;
    p.kind = kind;
    p.d_max = 500.0;
    const CouplingSet a = coupling_at(p, 0.0);
    const CouplingSet b = coupling_at(p, p.t_cycle());
    if (a.d1 != b.d1 || a.d2 != b.d2 || a.d3 != b.d3)
      return {"schedule-closure", false, "cycle does not close exactly"};
    PathSpec r = p;
    r.direction = Direction::reversed;
    for (double t : {0.1, 0.8, 1.7, 2.9}) {
      const CouplingSet f = coupling_at(p, p.t_cycle() - t);
      const CouplingSet g = coupling_at(r, t);
      if (g.d1 != f.d3 || g.d2 != f.d2 || g.d3 != f.d1)
        return {"schedule-closure", false, "reversed schedule mismatch"};
    }
  }
  return {"schedule-closure", true,
          "exact cycle closure and reversal symmetry on both paths"};
}

std::vector<Check> check_norms(int steps_per_leg) {
  std::vector<Check> out;
  PathSpec path;
  path.kind = PathKind::circular;
  path.d_max = 500.0;
  const double delta = 50.0;
  double worst_rel = 0.0;
  double worst_disagree = 0.0;
  bool all_converged = true;
  for (const auto& which : sweep_channels()) {
    const ChannelCorrection c =
        channel_correction(which, delta, path, steps_per_leg);
    const double ana = analytic_norm(which, delta, path.d_max);
    worst_rel = std::max(worst_rel, std::abs(c.norm - ana) / ana);
    worst_disagree = std::max(worst_disagree, c.rel_disagreement);
    all_converged = all_converged && c.converged;
  }
  out.push_back({"analytic-vs-numeric",
                 worst_rel <= 0.15 && all_converged,
                 "four channels at delta=50: worst relative deviation " +
                     format_g17(worst_rel) + " (limit 0.15)"});
  std::string detail = "Simpson vs trapezoid disagreement " +
                       format_g17(100.0 * worst_disagree) + "% (limit 1%)";
  if (!all_converged)
    detail += "; increase steps_per_leg (adaptive default here: " +
              std::to_string(adaptive_steps_per_leg(delta, path)) + ")";
  out.push_back({"quadrature-convergence", all_converged, detail});
  return out;
}

Check check_perturbation_scaling() {
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
    const Mat ufull = full_propagator(H, T, nsteps);
    resid[k] = spectral_norm(ufull - (base.U0T + eps * base.dU));
  }
  const double r1 = resid[0] / resid[1];
  const double r2 = resid[1] / resid[2];
  const bool ok = r1 >= 3.0 && r1 <= 5.0 && r2 >= 3.0 && r2 <= 5.0;
  return {"perturbation-scaling", ok,
          "halving eps scales residual by " + format_g17(r1) + " and " +
              format_g17(r2) + " (expected within [3,5])"};
}

Check check_adiabatic_vs_full() {
  PathSpec path;
  path.kind = PathKind::circular;
  path.d_max = 500.0;
  path.T0 = 3.0;  // T0 = 1 leaves a ~3e-3 non-adiabatic residue; slow down
  Device dev{DeviceSpec::clean()};
  auto H = [&](double t) {
    const CouplingSet c = coupling_at(path, t);
    return dev.H_C(c);
  };
  const int nsteps = 180000;
  const Mat ua =
      adiabatic_endpoint(H, path.t_cycle(), nsteps, 4, 1e-6 * path.d_max);
  const Mat uf = full_propagator(H, path.t_cycle(), nsteps);
  const double dist = phase_aligned_distance(ua, uf);
  return {"adiabatic-vs-full", dist <= 1e-3,
          "clean slow cycle, spectral distance " + format_g17(dist) +
              " (limit 1e-3)"};
}

Check check_clean_pflip() {
  PathSpec path;
  path.kind = PathKind::circular;
  path.d_max = 500.0;
  const auto pf = pflip_sequence(DeviceSpec::clean(), DisorderConfig{}, path, 4,
                                 SectorChoice{}, 777, 15000, 0);
  const double ref[4] = {0.5, 1.0, 0.5, 0.0};
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(pf[k] - ref[k]));
  return {"clean-pflip", worst <= 1e-3,
          "sequence vs (0.5, 1, 0.5, 0): max deviation " + format_g17(worst)};
}

Check check_config_hashes(const Opts& o) {
  if (o.config_path.empty())
    return {"config-hash", true, "no config referenced; nothing to verify"};
  const ConfigFile cfg = ConfigFile::load(o.config_path);
  const std::uint64_t want = cfg.hash();
  int verified = 0, mismatched = 0;
  if (std::filesystem::is_directory(o.out_dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(o.out_dir)) {
      if (!entry.is_regular_file()) continue;
      const std::string ext = entry.path().extension().string();
      if (ext != ".csv" && ext != ".json") continue;
      std::uint64_t got;
      if (!parse_embedded_hash(read_file(entry.path().string()), got)) continue;
      if (got == want)
        ++verified;
      else
        ++mismatched;
    }
  }
  std::string detail = "config " + hex_hash(want) + ": " +
                       std::to_string(verified) + " output file(s) verified";
  if (mismatched > 0)
    detail += ", " + std::to_string(mismatched) + " mismatched";
  return {"config-hash", mismatched == 0, detail};
}

int cmd_validate(const Opts& o, bool corrupt_u12, int steps_per_leg) {
  std::vector<Check> checks;
  checks.push_back(check_register_algebra());
  checks.push_back(check_canonical_register());
  checks.push_back(check_symmetries(corrupt_u12));
  checks.push_back(check_schedule());
  for (auto& c : check_norms(steps_per_leg)) checks.push_back(c);
  checks.push_back(check_perturbation_scaling());
  checks.push_back(check_adiabatic_vs_full());
  checks.push_back(check_clean_pflip());
  checks.push_back(check_config_hashes(o));

  int failures = 0;
  for (const auto& c : checks) {
    std::printf("%s  %-24s %s\n", c.ok ? "ok  " : "FAIL", c.name.c_str(),
                c.detail.c_str());
    if (!c.ok) ++failures;
  }
  std::printf("%d/%zu checks passed\n", static_cast<int>(checks.size()) - failures,
              checks.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coulomb-assisted Majorana braiding simulator"};
  app.require_subcommand(1);

  Opts o;
  bool corrupt_u12 = false;
  int validate_spl = 0;

  auto add_common = [&](CLI::App* cmd, bool with_workers, bool with_seed,
                        bool with_path, bool with_format) {
    cmd->add_option("--config", o.config_path, "configuration file (INI)");
    cmd->add_option("--out", o.out_dir, "output directory");
    if (with_workers)
      cmd->add_option("--workers", o.workers, "worker threads (0 = all cores)");
    if (with_path)
      cmd->add_option("--path", o.path_override, "path kind override")
          ->check(CLI::IsMember({"circular", "square"}));
    if (with_seed) cmd->add_option("--seed", o.seed, "random seed (u64)");
    if (with_format)
      cmd->add_option("--format", o.format, "output format")
          ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* sweep = app.add_subcommand(
      "sweep-delta", "sweep the pair coupling and tabulate correction norms");
  add_common(sweep, true, true, true, true);
  CLI::App* pflip = app.add_subcommand(
      "pflip", "parity-flip sequence over repeated braid cycles");
  add_common(pflip, false, true, true, true);
  CLI::App* readout = app.add_subcommand(
      "readout", "dispersive shifts and measurement-error scan");
  add_common(readout, false, false, false, true);
  CLI::App* validate =
      app.add_subcommand("validate", "run the invariant suite");
  add_common(validate, false, false, false, false);
  validate->add_flag("--corrupt-u12", corrupt_u12,
                     "negative control: inject a sign flip into U_12");
  validate->add_option("--steps-per-leg", validate_spl,
                       "override the integration grid (0 = adaptive)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(sweep)) return cmd_sweep_delta(o);
    if (app.got_subcommand(pflip)) return cmd_pflip(o);
    if (app.got_subcommand(readout)) return cmd_readout(o);
    if (app.got_subcommand(validate))
      return cmd_validate(o, corrupt_u12, validate_spl);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const NumericError& e) {
    std::fprintf(stderr, "numeric failure: %s\n", e.what());
    return 3;
  }
  return 2;
}
