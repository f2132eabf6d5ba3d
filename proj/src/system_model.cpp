#include "mbraid/system_model.hpp"

#include <cmath>

#include "mbraid/pauli.hpp"

namespace mbraid {

const std::vector<std::string>& island_ids() {
  static const std::vector<std::string> ids{"b", "1", "2", "3", "g"};
  return ids;
}

int DeviceSpec::count(const std::string& island) const {
  auto it = counts.find(island);
  if (it == counts.end()) throw ConfigError("unknown island '" + island + "'");
  return it->second;
}

int DeviceSpec::total_majoranas() const {
  int n = 6;
  for (const auto& id : island_ids()) n += count(id);
  return n;
}

void DeviceSpec::validate() const {
  for (const auto& [island, n] : counts) {
    bool known = false;
    for (const auto& id : island_ids()) known = known || id == island;
    if (!known) throw ConfigError("unknown island '" + island + "'");
    if (n < 0 || n % 2 != 0)
      throw ConfigError("island '" + island + "': accidental count must be even and >= 0");
  }
  if (total_majoranas() > 24)
    throw ConfigError("register too large (> 24 Majorana operators)");
}

DeviceSpec DeviceSpec::clean() { return DeviceSpec{}; }

DeviceSpec DeviceSpec::with_pair(const std::string& island) {
  DeviceSpec s;
  s.counts.at(island) = 2;  // throws for unknown island
  return s;
}

bool DisorderConfig::perturbative_ok(double limit) const {
  for (const auto& [ch, v] : eps)
    if (std::abs(v) > limit) return false;
  return true;
}

double CouplingSet::e0() const { return std::sqrt(d1 * d1 + d2 * d2 + d3 * d3); }

const std::map<std::string, ChannelSpec>& channel_table() {
  static const std::map<std::string, ChannelSpec> t{
      {"b1", {"GA", "b", true, true}},  {"b2", {"GB", "b", false, false}},
      {"g1", {"GB", "g", true, true}},  {"g2", {"GD", "g", false, false}},
      {"11", {"GB", "1", true, true}},  {"12", {"GE", "1", false, false}},
      {"21", {"GE", "2", true, true}},  {"22", {"GF", "2", false, false}},
      {"31", {"GE", "3", true, true}},  {"32", {"GC", "3", false, false}},
  };
  return t;
}

Device::Device(DeviceSpec spec) : spec_(std::move(spec)), reg_([&] {
  spec_.validate();
  std::vector<std::string> labels{"GA", "GD"};
  for (const auto& id : island_ids())
    for (int n = 1; n <= spec_.count(id); ++n)
      labels.push_back(id + "_" + std::to_string(n));
  labels.insert(labels.end(), {"GE", "GF", "GB", "GC"});
  return MajoranaSet::build_trailing(labels);
}()) {
  const Mat ident = Mat::Identity(dim(), dim());
  for (const auto& id : island_ids()) {
    const int n = spec_.count(id);
    if (n == 0) {
      parity_.emplace(id, ident);
      continue;
    }
    std::vector<int> members;
    for (int m = 1; m <= n; ++m)
      members.push_back(reg_.index_of(id + "_" + std::to_string(m)));
    parity_.emplace(id, island_parity(reg_, id, members).matrix);
  }
  const cxd i(0.0, 1.0);
  coupling_ops_[0] = i * op("GB") * parity_.at("1") * op("GE");
  coupling_ops_[1] = i * op("GE") * parity_.at("2") * op("GF");
  coupling_ops_[2] = i * op("GE") * parity_.at("3") * op("GC");
}

const Mat& Device::parity(const std::string& island) const {
  auto it = parity_.find(island);
  if (it == parity_.end()) throw ConfigError("unknown island '" + island + "'");
  return it->second;
}

const Mat& Device::coupling_op(int k) const {
  if (k < 1 || k > 3) throw ConfigError("coupling_op: k must be 1, 2 or 3");
  return coupling_ops_[static_cast<std::size_t>(k - 1)];
}

Mat Device::H_C(const CouplingSet& c) const {
  return c.d1 * coupling_ops_[0] + c.d2 * coupling_ops_[1] + c.d3 * coupling_ops_[2];
}

Mat Device::H_delta(const DisorderConfig& d) const {
  Mat h = Mat::Zero(dim(), dim());
  const cxd i(0.0, 1.0);
  for (const auto& [island, bonds] : d.delta) {
    const int n = spec_.count(island);
    if (static_cast<int>(bonds.size()) > std::max(0, n - 1))
      throw ConfigError("island '" + island + "': more bonds than modes allow");
    for (std::size_t b = 0; b < bonds.size(); ++b) {
      const auto& g_n = op(island + "_" + std::to_string(b + 1));
      const auto& g_n1 = op(island + "_" + std::to_string(b + 2));
      h += bonds[b] * (i * g_n * g_n1);
    }
  }
  return h;
}

Mat Device::H_eps(const DisorderConfig& d) const {
  Mat h = Mat::Zero(dim(), dim());
  const cxd i(0.0, 1.0);
  const auto& table = channel_table();
  for (const auto& [ch, val] : d.eps) {
    auto it = table.find(ch);
    if (it == table.end()) throw ConfigError("unknown tunnel channel '" + ch + "'");
    const ChannelSpec& cs = it->second;
    const int n = spec_.count(cs.island);
    if (n == 0)
      throw ConfigError("channel '" + ch + "' references island '" + cs.island +
                        "' with no accidental modes");
    const std::string gamma = cs.island + "_" + std::to_string(cs.first_mode ? 1 : n);
    const Mat& a = cs.comp_first ? op(cs.comp) : op(gamma);
    const Mat& b = cs.comp_first ? op(gamma) : op(cs.comp);
    h += val * (i * a * b);
  }
  return h;
}

Mat Device::H_br(const CouplingSet& c, const DisorderConfig& d) const {
  return H_C(c) + H_delta(d) + H_eps(d);
}

Mat build_H_br(const DeviceSpec& spec, const CouplingSet& c,
               const DisorderConfig& d) {
  return Device(spec).H_br(c, d);
}

SectorProjection sector_project(const Mat& H, const Device& dev,
                                const std::map<std::string, int>& parities) {
  const long n = dev.dim();
  if (H.rows() != n || H.cols() != n)
    throw ConfigError("sector_project: dimension mismatch with device");
  Mat proj = Mat::Identity(n, n);
  for (const auto& [island, p] : parities) {
    if (p != 1 && p != -1) throw ConfigError("sector parity must be +1 or -1");
    const Mat& pi = dev.parity(island);
    if (spectral_norm(H * pi - pi * H) > 1e-10)
      throw NumericError("sector-mixing: H does not commute with the parity of island '" +
                         island + "'");
    proj = proj * 0.5 * (Mat::Identity(n, n) + static_cast<double>(p) * pi);
  }
  EigResult e = eigh(proj);
  long rank = 0;
  for (long i = 0; i < n; ++i)
    if (e.values(i) > 0.5) ++rank;
  if (rank == 0) throw ConfigError("sector_project: requested sector is empty");
  Mat basis = e.vectors.rightCols(rank);
  Mat reduced = basis.adjoint() * H * basis;
  return {std::move(basis), std::move(reduced)};
}

Mat build_H_ki(const std::string& which, const CouplingSet& c, double delta,
               double eps) {
  static const std::vector<std::string> valid{"11", "12", "21", "22", "31", "32"};
  bool ok = false;
  for (const auto& v : valid) ok = ok || v == which;
  if (!ok) throw ConfigError("build_H_ki: invalid channel '" + which + "'");
  const std::string island(1, which[0]);
  Device dev(DeviceSpec::with_pair(island));
  DisorderConfig dis;
  dis.delta[island] = {delta};
  dis.eps[which] = eps;
  return dev.H_br(c, dis);
}

ChannelSymmetries channel_symmetry_unitaries() {
  Mat p0 = Mat::Zero(2, 2), p1 = Mat::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  const Mat sx = pauli_x(), sy = pauli_y(), sz = pauli_z(), s0 = pauli0();
  ChannelSymmetries u;
  u.U12 = kron(p0, kron(sz, sz)) + kron(p1, kron(sx, sx));
  u.U13 = kron(p0, kron(sz, sz)) + kron(p1, kron(sz, s0));
  u.U13t = (kron(p0, cxd(0.0, 1.0) * kron(s0, sx + sy)) +
            kron(p1, kron(s0, sx + sy))) /
           std::sqrt(2.0);
  return u;
}

}  // namespace mbraid
