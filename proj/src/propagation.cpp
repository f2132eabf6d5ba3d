#include "mbraid/propagation.hpp"

#include <cmath>

#include "mbraid/pauli.hpp"

namespace mbraid {

namespace {

using M4 = Eigen::Matrix4cd;
using M42 = Eigen::Matrix<cxd, 4, 2>;
using M2 = Eigen::Matrix2cd;

constexpr double kMinFrameOverlap = 0.70710678118654752;  // cos(pi/4)

double wrap_cycle(double x, double T) {
  double y = std::fmod(x, T);
  if (y < 0.0) y += T;
  return y;
}

// Protocol time -> couplings.  The cycle enters the schedule one leg in
// (axis 2 fully on); reversal traverses the same schedule backwards in time.
CouplingSet protocol_couplings(const PathSpec& path, double t) {
  PathSpec fwd = path;
  fwd.direction = Direction::forward;
  const double T = path.t_cycle();
  const double tau = (path.direction == Direction::forward) ? t : (T - t);
  return coupling_at(fwd, wrap_cycle(path.T0 + tau, T));
}

void transport_frame(const Mat& vman, Mat& frame) {
  Mat overlap = vman.adjoint() * frame;
  Eigen::JacobiSVD<Mat> svd(overlap, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues().minCoeff() < kMinFrameOverlap)
    throw NumericError(
        "adiabatic transport: consecutive eigenframes overlap below cos(pi/4); "
        "the grid is too coarse for this path");
  frame = vman * (svd.matrixU() * svd.matrixV().adjoint());
}

template <class Sink>
void adiabatic_core(const HFun& H, double T, int nsteps, int gdim,
                    double gap_floor, Sink&& sink) {
  if (nsteps < 1) throw ConfigError("adiabatic propagation: nsteps must be >= 1");
  const double h = T / nsteps;
  Mat Fg, Fe, Fg0, Fe0;
  double phg = 0.0, phe = 0.0, eg_prev = 0.0, ee_prev = 0.0;
  for (int i = 0; i <= nsteps; ++i) {
    const double t = (i == nsteps) ? T : i * h;
    EigResult e = eigh(H(t));
    const long n = e.values.size();
    if (gdim < 1 || gdim >= n)
      throw ConfigError("adiabatic propagation: ground_dim out of range");
    if (e.values(gdim) - e.values(gdim - 1) < gap_floor)
      throw NumericError("adiabatic propagation: manifold gap collapsed below " +
                         std::to_string(gap_floor));
    const Mat vg = e.vectors.leftCols(gdim);
    const Mat ve = e.vectors.rightCols(n - gdim);
    const double eg = e.values.head(gdim).mean();
    const double ee = e.values.tail(n - gdim).mean();
    if (i == 0) {
      Fg = vg;
      Fe = ve;
      Fg0 = vg;
      Fe0 = ve;
      sink(i, Mat(Mat::Identity(n, n)));
    } else {
      transport_frame(vg, Fg);
      transport_frame(ve, Fe);
      phg += 0.5 * h * (eg + eg_prev);
      phe += 0.5 * h * (ee + ee_prev);
      Mat u = std::exp(cxd(0.0, -phg)) * (Fg * Fg0.adjoint()) +
              std::exp(cxd(0.0, -phe)) * (Fe * Fe0.adjoint());
      sink(i, std::move(u));
    }
    eg_prev = eg;
    ee_prev = ee;
  }
}

}  // namespace

std::vector<Mat> adiabatic_propagator(const HFun& H, double T, int nsteps,
                                      int ground_dim, double gap_floor) {
  std::vector<Mat> out;
  out.reserve(static_cast<std::size_t>(nsteps) + 1);
  adiabatic_core(H, T, nsteps, ground_dim, gap_floor,
                 [&](int, Mat u) { out.push_back(std::move(u)); });
  return out;
}

Mat adiabatic_endpoint(const HFun& H, double T, int nsteps, int ground_dim,
                       double gap_floor) {
  Mat last;
  adiabatic_core(H, T, nsteps, ground_dim, gap_floor,
                 [&](int, Mat u) { last = std::move(u); });
  return last;
}

Mat full_propagator(const HFun& H, double T, int nsteps) {
  if (nsteps < 1) throw ConfigError("full_propagator: nsteps must be >= 1");
  const double h = T / nsteps;
  Mat U;
  for (int i = 0; i < nsteps; ++i) {
    EigResult e = eigh(H((i + 0.5) * h));
    if (i == 0) U = Mat::Identity(e.values.size(), e.values.size());
    const double angle = h * e.values.cwiseAbs().maxCoeff();
    if (angle >= 0.1)
      throw NumericError("full_propagator: step too large (h*max|E| = " +
                         std::to_string(angle) + " >= 0.1); refine the grid");
    Vec ph(e.values.size());
    for (long j = 0; j < e.values.size(); ++j)
      ph(j) = std::exp(cxd(0.0, -h * e.values(j)));
    U = e.vectors * (ph.asDiagonal() * (e.vectors.adjoint() * U));
  }
  return U;
}

std::pair<Mat, double> perturbative_correction(const std::vector<Mat>& U0,
                                               const Mat& h_op, double dt) {
  const int n = static_cast<int>(U0.size());
  const auto ws = simpson_weights(n, dt);
  const auto wt = trapezoid_weights(n, dt);
  Mat accs = Mat::Zero(h_op.rows(), h_op.cols());
  Mat acct = accs;
  for (int i = 0; i < n; ++i) {
    Mat integ = U0[static_cast<std::size_t>(i)].adjoint() *
                (h_op * U0[static_cast<std::size_t>(i)]);
    accs += ws[static_cast<std::size_t>(i)] * integ;
    acct += wt[static_cast<std::size_t>(i)] * integ;
  }
  const double ns = spectral_norm(accs);
  const double nt = spectral_norm(acct);
  const double rel = std::abs(ns - nt) / std::max(ns, 1e-300);
  if (rel > 0.01)
    throw NumericError(
        "perturbative_correction: quadrature not converged (Simpson and "
        "trapezoid norms differ by " + std::to_string(100.0 * rel) +
        "%); increase steps_per_leg");
  Mat dU = cxd(0.0, -1.0) * (U0.back() * accs);
  return {std::move(dU), ns};
}

FirstOrderCycle first_order_cycle(const HFun& H, const Mat& h_op, double T,
                                  int nsteps) {
  const double h = T / nsteps;
  const auto ws = simpson_weights(nsteps + 1, h);
  const auto wt = trapezoid_weights(nsteps + 1, h);
  const long n = h_op.rows();
  Mat U = Mat::Identity(n, n);
  Mat accs = ws[0] * h_op;
  Mat acct = wt[0] * h_op;
  for (int i = 0; i < nsteps; ++i) {
    EigResult e = eigh(H((i + 0.5) * h));
    const double angle = h * e.values.cwiseAbs().maxCoeff();
    if (angle >= 0.1)
      throw NumericError("first_order_cycle: step too large (h*max|E| = " +
                         std::to_string(angle) + " >= 0.1); refine the grid");
    Vec ph(n);
    for (long j = 0; j < n; ++j) ph(j) = std::exp(cxd(0.0, -h * e.values(j)));
    U = e.vectors * (ph.asDiagonal() * (e.vectors.adjoint() * U));
    Mat integ = U.adjoint() * (h_op * U);
    accs += ws[static_cast<std::size_t>(i) + 1] * integ;
    acct += wt[static_cast<std::size_t>(i) + 1] * integ;
  }
  FirstOrderCycle out;
  out.norm = spectral_norm(accs);
  const double nt = spectral_norm(acct);
  out.rel_disagreement = std::abs(out.norm - nt) / std::max(out.norm, 1e-300);
  out.dU = cxd(0.0, -1.0) * (U * accs);
  out.U0T = std::move(U);
  return out;
}

// ---------------------------------------------------------------------------
// Sector-reduced channel machinery
// ---------------------------------------------------------------------------

namespace {

struct SectorTables {
  M4 R[2][3];  // [sector: 0 -> p=+1, 1 -> p=-1][coupling axis]
  std::map<std::string, std::pair<int, M4>> channels;  // which -> (island, hpm)
};

const SectorTables& sector_tables() {
  static const SectorTables tab = [] {
    SectorTables t;
    const MajoranaSet& s = canonical_six_set();
    const Mat &g1 = s.op("g1"), &g2 = s.op("g2"), &GE = s.op("GE"),
              &GF = s.op("GF"), &GB = s.op("GB"), &GC = s.op("GC");
    const cxd i(0.0, 1.0);
    Mat PI = -i * (g1 * g2);
    EigResult e = eigh(PI);  // ascending: four -1 eigenvalues first
    Mat Vm = e.vectors.leftCols(4);
    Mat Vp = e.vectors.rightCols(4);
    const Mat* pairs[3][2] = {{&GB, &GE}, {&GE, &GF}, {&GE, &GC}};
    for (int k = 0; k < 3; ++k) {
      Mat op = i * ((*pairs[k][0]) * (*pairs[k][1]));
      t.R[0][k] = Vp.adjoint() * op * Vp;
      t.R[1][k] = Vm.adjoint() * op * Vm;
    }
    auto add = [&](const std::string& which, int island, const Mat& hop) {
      t.channels.emplace(which, std::make_pair(island, M4(Vp.adjoint() * hop * Vm)));
    };
    add("b2", 0, i * (g2 * GB));
    add("g1", 0, i * (GB * g1));
    add("11", 1, i * (GB * g1));
    add("12", 1, i * (g2 * GE));
    add("21", 2, i * (GE * g1));
    add("22", 2, i * (g2 * GF));
    add("31", 3, i * (GE * g1));
    add("32", 3, i * (g2 * GC));
    return t;
  }();
  return tab;
}

// Adiabatic transport of one 4-dim parity sector (two 2-dim manifolds).
struct SectorProp {
  int island;
  double delta;
  double p;
  const M4* R;  // three coupling operators for this sector
  double gap_floor;

  M42 Fg, Fe, Fg0, Fe0;
  double phg = 0.0, phe = 0.0, eg_prev = 0.0, ee_prev = 0.0;
  M4 U;

  M4 hamil(const CouplingSet& c) const {
    const double d[3] = {c.d1, c.d2, c.d3};
    M4 H = M4::Zero();
    for (int k = 0; k < 3; ++k)
      H += d[k] * ((island == k + 1) ? p : 1.0) * R[k];
    H -= delta * p * M4::Identity();
    return H;
  }

  void check_gap(const Eigen::Vector4d& ev) const {
    if (ev(2) - ev(1) < gap_floor)
      throw NumericError("channel correction: sector gap collapsed");
  }

  void init(const CouplingSet& c) {
    Eigen::SelfAdjointEigenSolver<M4> es(hamil(c));
    check_gap(es.eigenvalues());
    Fg = es.eigenvectors().leftCols<2>();
    Fe = es.eigenvectors().rightCols<2>();
    Fg0 = Fg;
    Fe0 = Fe;
    eg_prev = es.eigenvalues().head<2>().mean();
    ee_prev = es.eigenvalues().tail<2>().mean();
    U = M4::Identity();
  }

  static void advance(const M42& vman, M42& frame) {
    M2 overlap = vman.adjoint() * frame;
    Eigen::JacobiSVD<M2> svd(overlap, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.singularValues().minCoeff() < kMinFrameOverlap)
      throw NumericError(
          "channel correction: consecutive eigenframes overlap below "
          "cos(pi/4); increase steps_per_leg");
    frame = vman * (svd.matrixU() * svd.matrixV().adjoint());
  }

  void step(const CouplingSet& c, double h) {
    Eigen::SelfAdjointEigenSolver<M4> es(hamil(c));
    check_gap(es.eigenvalues());
    M42 vg = es.eigenvectors().leftCols<2>();
    M42 ve = es.eigenvectors().rightCols<2>();
    advance(vg, Fg);
    advance(ve, Fe);
    const double eg = es.eigenvalues().head<2>().mean();
    const double ee = es.eigenvalues().tail<2>().mean();
    phg += 0.5 * h * (eg + eg_prev);
    phe += 0.5 * h * (ee + ee_prev);
    eg_prev = eg;
    ee_prev = ee;
    U = std::exp(cxd(0.0, -phg)) * (Fg * Fg0.adjoint()) +
        std::exp(cxd(0.0, -phe)) * (Fe * Fe0.adjoint());
  }
};

double spectral_norm4(const M4& m) {
  Eigen::JacobiSVD<M4> svd(m);
  return svd.singularValues()(0);
}

}  // namespace

ChannelCorrection channel_correction(const std::string& which, double delta,
                                     const PathSpec& path, int steps_per_leg) {
  const auto& tab = sector_tables();
  auto it = tab.channels.find(which);
  if (it == tab.channels.end())
    throw ConfigError("channel_correction: unknown channel '" + which + "'");
  int spl = steps_per_leg > 0 ? steps_per_leg
                              : adaptive_steps_per_leg(delta, path);
  if (spl % 2 != 0)
    throw ConfigError("channel_correction: steps_per_leg must be even");
  const int N = 3 * spl;
  const double T = path.t_cycle();
  const double h = T / N;
  const auto ws = simpson_weights(N + 1, h);
  const auto wt = trapezoid_weights(N + 1, h);
  const int island = it->second.first;
  const M4& hpm = it->second.second;
  const double gap_floor = 1e-6 * path.d_max;

  SectorProp plus{island, delta, +1.0, tab.R[0], gap_floor};
  SectorProp minus{island, delta, -1.0, tab.R[1], gap_floor};
  plus.init(protocol_couplings(path, 0.0));
  minus.init(protocol_couplings(path, 0.0));

  M4 accs = ws[0] * hpm;
  M4 acct = wt[0] * hpm;
  for (int i = 1; i <= N; ++i) {
    const double t = (i == N) ? T : i * h;
    const CouplingSet c = protocol_couplings(path, t);
    plus.step(c, h);
    minus.step(c, h);
    M4 integ = plus.U.adjoint() * (hpm * minus.U);
    accs += ws[static_cast<std::size_t>(i)] * integ;
    acct += wt[static_cast<std::size_t>(i)] * integ;
  }
  ChannelCorrection out;
  out.norm = spectral_norm4(accs);
  out.norm_trap = spectral_norm4(acct);
  out.rel_disagreement =
      std::abs(out.norm - out.norm_trap) / std::max(out.norm, 1e-300);
  out.converged = out.rel_disagreement <= 0.01;
  return out;
}

double correction_norm(const std::string& which, double delta,
                       const PathSpec& path, int steps_per_leg) {
  ChannelCorrection c = channel_correction(which, delta, path, steps_per_leg);
  if (!c.converged)
    throw NumericError("correction_norm: quadrature not converged (" +
                       std::to_string(100.0 * c.rel_disagreement) +
                       "% Simpson/trapezoid disagreement); increase steps_per_leg");
  return c.norm;
}

double analytic_norm(const std::string& which, double delta, double d_max) {
  const double d = delta;
  auto branch12 = [&](double x) {
    double best = 0.0;
    for (double u : {+1.0, -1.0})
      best = std::max(best, std::abs(std::cos(3.0 * x) + u * std::sin(3.0 * x)) /
                                (std::sqrt(2.0) * std::abs(x)));
    return best;
  };
  if (which == "11") return std::abs(std::sin(3.0 * d)) / std::abs(d);
  if (which == "21") {
    double best = std::abs(std::sin(3.0 * d)) / std::abs(d);
    for (double s : {+1.0, -1.0}) {
      const double x = d + s * d_max;
      best = std::max(best, M_PI * std::abs(std::cos(3.0 * x)) / (4.0 * x * x));
    }
    return best;
  }
  if (which == "12") {
    double best = M_PI * std::abs(std::cos(2.0 * d)) / (4.0 * d * d);
    for (double s : {+1.0, -1.0}) best = std::max(best, branch12(d + s * d_max));
    return best;
  }
  if (which == "b2") {
    double best = 0.0;
    for (double u : {+1.0, -1.0})
      best = std::max(best, std::sqrt(std::max(0.0, 1.0 + u * std::sin(6.0 * d))) /
                                (std::sqrt(2.0) * std::abs(d)));
    for (double s : {+1.0, -1.0}) {
      const double x = d + s * d_max;
      best = std::max(best, M_PI * std::abs(std::cos(2.0 * x)) / (4.0 * x * x));
    }
    return best;
  }
  throw ConfigError("analytic_norm: unknown channel '" + which + "'");
}

bool analytic_regime_ok(double delta, double d_max) {
  return std::abs(delta) >= 5.0 && std::abs(delta - d_max) >= 5.0 &&
         std::abs(delta + d_max) >= 5.0;
}

int adaptive_steps_per_leg(double delta, const PathSpec& path) {
  const double e0_peak =
      (path.kind == PathKind::square ? std::sqrt(2.0) : 1.0) * path.d_max;
  const double omega = 2.0 * e0_peak + 2.0 * std::abs(delta);
  int spl = std::max(2000, static_cast<int>(std::ceil(3.5 * omega * path.T0)));
  spl += spl % 2;
  return spl;
}

// ---------------------------------------------------------------------------
// Braid protocol
// ---------------------------------------------------------------------------

namespace {

struct ProtocolSetup {
  Device dev;
  Mat Hconst;      // delta chains plus scaled tunnel couplings
  Mat H0;          // eps-free Hamiltonian at protocol time 0
  Mat manifold;    // columns spanning the selected t=0 manifold
};

ProtocolSetup protocol_setup(const DeviceSpec& spec, const DisorderConfig& dis,
                             const PathSpec& path, const SectorChoice& sector,
                             double eps_scale) {
  ProtocolSetup ps{Device(spec), Mat(), Mat(), Mat()};
  const long n = ps.dev.dim();
  Mat hdelta = ps.dev.H_delta(dis);
  ps.Hconst = hdelta;
  if (eps_scale != 0.0 && !dis.eps.empty())
    ps.Hconst += eps_scale * ps.dev.H_eps(dis);
  const CouplingSet c0 = protocol_couplings(path, 0.0);
  ps.H0 = ps.dev.H_C(c0) + hdelta;

  if (sector.island_parity.empty()) {
    EigResult e0 = eigh(ps.H0);
    ps.manifold = e0.vectors.leftCols(n / 2);
  } else {
    Mat proj = Mat::Identity(n, n);
    for (const auto& [island, p] : sector.island_parity) {
      if (ps.dev.spec().count(island) == 0)
        throw ConfigError("sector choice references island '" + island +
                          "' with no accidental modes");
      if (p != 1 && p != -1) throw ConfigError("sector parity must be +1 or -1");
      proj = proj * 0.5 *
             (Mat::Identity(n, n) + static_cast<double>(p) * ps.dev.parity(island));
    }
    EigResult ep = eigh(proj);
    long rank = 0;
    for (long i = 0; i < n; ++i)
      if (ep.values(i) > 0.5) ++rank;
    Mat vs = ep.vectors.rightCols(rank);
    EigResult er = eigh(Mat(vs.adjoint() * ps.H0 * vs));
    ps.manifold = vs * er.vectors.leftCols(rank / 2);
  }
  return ps;
}

Vec seeded_manifold_state(const Mat& weight, long n, std::uint64_t seed) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vec v = weight * random_complex_vector(n, seed + static_cast<std::uint64_t>(attempt));
    const double norm = v.norm();
    if (norm > 1e-8) {
      v /= norm;
      // fix the global phase: largest-magnitude entry made real positive
      long jmax = 0;
      v.cwiseAbs().maxCoeff(&jmax);
      v *= std::conj(v(jmax)) / std::abs(v(jmax));
      return v;
    }
  }
  throw NumericError("seeded initial state vanished after projection (8 attempts)");
}

}  // namespace

BraidResult braid_cycle(const DeviceSpec& spec, const DisorderConfig& dis,
                        const PathSpec& path, const SectorChoice& sector,
                        double eps_scale, int steps_per_leg,
                        std::uint64_t seed) {
  if (steps_per_leg < 1) throw ConfigError("braid_cycle: steps_per_leg must be >= 1");
  ProtocolSetup ps = protocol_setup(spec, dis, path, sector, eps_scale);
  const Device& dev = ps.dev;
  const long n = dev.dim();
  const cxd i(0.0, 1.0);
  const Mat ident = Mat::Identity(n, n);
  const Mat Q1 = -i * (dev.op("GA") * dev.op("GB"));
  const Mat Q2 = -i * (dev.op("GC") * dev.op("GD"));
  const Mat Xop = -i * (dev.op("GB") * dev.op("GC"));
  const Mat Panc = -i * (dev.op("GE") * dev.op("GF"));

  Mat pman = ps.manifold * ps.manifold.adjoint();
  Mat weight = pman * 0.5 * (ident + Q1);
  if (sector.island_parity.empty()) weight = weight * 0.5 * (ident + Q2);
  const Vec v0 = seeded_manifold_state(weight, n, seed);
  const Vec v1 = Xop * v0;

  auto Hof = [&](double t) {
    const CouplingSet c = protocol_couplings(path, t);
    return Mat(c.d1 * dev.coupling_op(1) + c.d2 * dev.coupling_op(2) +
               c.d3 * dev.coupling_op(3) + ps.Hconst);
  };
  const Mat U = full_propagator(Hof, path.t_cycle(), 3 * steps_per_leg);

  BraidResult out;
  out.W(0, 0) = v0.dot(U * v0);
  out.W(0, 1) = v0.dot(U * v1);
  out.W(1, 0) = v1.dot(U * v0);
  out.W(1, 1) = v1.dot(U * v1);
  out.leakage = 1.0 - 0.5 * (out.W.adjoint() * out.W).trace().real();
  Eigen::Matrix2cd sigx;
  sigx << 0, 1, 1, 0;
  double best_fid = -1.0;
  int best_s = +1;
  for (int s : {+1, -1}) {
    Eigen::Matrix2cd xs =
        (Eigen::Matrix2cd::Identity() + i * static_cast<double>(s) * sigx) /
        std::sqrt(2.0);
    const double fid = std::abs((out.W.adjoint() * xs).trace()) / 2.0;
    if (fid > best_fid) {
      best_fid = fid;
      best_s = s;
    }
  }
  out.fidelity = best_fid;
  out.chirality = best_s;
  out.det_abs = std::abs(out.W.determinant());
  out.protocol_failure = out.leakage > 0.5;
  out.p_anc = (v0.adjoint() * Panc * v0)(0).real();
  for (const auto& id : island_ids())
    if (dev.spec().count(id) > 0)
      out.island_parity[id] = (v0.adjoint() * dev.parity(id) * v0)(0).real();
  return out;
}

std::vector<double> pflip_sequence(const DeviceSpec& spec,
                                   const DisorderConfig& dis,
                                   const PathSpec& path, int n_max,
                                   const SectorChoice& sector,
                                   std::uint64_t seed, int steps_per_leg,
                                   int shots) {
  if (n_max < 1) throw ConfigError("pflip_sequence: n_max must be >= 1");
  if (steps_per_leg < 1) throw ConfigError("pflip_sequence: steps_per_leg must be >= 1");
  ProtocolSetup ps = protocol_setup(spec, dis, path, sector, 1.0);
  const Device& dev = ps.dev;
  const long n = dev.dim();
  const cxd i(0.0, 1.0);
  const Mat P = -i * (dev.op("GA") * dev.parity("b") * dev.op("GB"));
  const Mat pplus = 0.5 * (Mat::Identity(n, n) + P);
  const Mat pminus = 0.5 * (Mat::Identity(n, n) - P);

  // random manifold coefficients, then the parity projection
  Mat weight = pplus * ps.manifold;
  Vec psi;
  {
    const long m = ps.manifold.cols();
    for (int attempt = 0;; ++attempt) {
      Vec coeff = random_complex_vector(m, seed + static_cast<std::uint64_t>(attempt));
      psi = weight * coeff;
      const double norm = psi.norm();
      if (norm > 1e-8) {
        psi /= norm;
        break;
      }
      if (attempt >= 7)
        throw NumericError("pflip_sequence: initial state vanished after projection");
    }
  }

  auto Hof = [&](double t) {
    const CouplingSet c = protocol_couplings(path, t);
    return Mat(c.d1 * dev.coupling_op(1) + c.d2 * dev.coupling_op(2) +
               c.d3 * dev.coupling_op(3) + ps.Hconst);
  };
  const Mat U = full_propagator(Hof, path.t_cycle(), 3 * steps_per_leg);

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max));
  SplitMix64 shot_rng(seed ^ 0xa5a5a5a55a5a5a5aULL);
  Vec st = psi;
  for (int k = 1; k <= n_max; ++k) {
    st = U * st;
    double p = (pminus * st).squaredNorm();
    if (shots > 0) {
      int cnt = 0;
      for (int s = 0; s < shots; ++s)
        if (shot_rng.uniform() < p) ++cnt;
      p = static_cast<double>(cnt) / shots;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace mbraid
