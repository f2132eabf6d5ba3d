#pragma once
#include <array>
#include <map>
#include <string>
#include <vector>

#include "mbraid/majorana.hpp"

namespace mbraid {

// Island identifiers in register order: bus, the three junction islands,
// ground.
const std::vector<std::string>& island_ids();

struct DeviceSpec {
  // Accidental-mode count per island; each even and >= 0.
  std::map<std::string, int> counts{
      {"b", 0}, {"1", 0}, {"2", 0}, {"3", 0}, {"g", 0}};

  int count(const std::string& island) const;
  int total_majoranas() const;  // six computational + accidentals
  void validate() const;        // throws ConfigError

  static DeviceSpec clean();
  static DeviceSpec with_pair(const std::string& island);
};

struct DisorderConfig {
  // island -> chain bond couplings; bond n joins modes n and n+1, so an
  // island with N modes has N-1 bonds.
  std::map<std::string, std::vector<double>> delta;
  // tunnel channel label -> coupling strength; channels are
  // b1,b2,g1,g2,11,12,21,22,31,32 (see channel_table).
  std::map<std::string, double> eps;

  // Perturbative-validity flag (not enforced): every |eps| <= limit.
  bool perturbative_ok(double limit = 0.1) const;
};

struct CouplingSet {
  double d1 = 0.0, d2 = 0.0, d3 = 0.0;
  double e0() const;
};

// Which computational operator a tunnel channel attaches to, on which
// island, at which chain end, and in which operator order the term is
// written (i * eps * first * second).
struct ChannelSpec {
  std::string comp;
  std::string island;
  bool first_mode;  // attaches to mode 1 (else mode N_k)
  bool comp_first;  // computational operator written first
};
const std::map<std::string, ChannelSpec>& channel_table();

// A device register is a trailing-string Majorana set with site order
// (GA,GD) | accidental pairs for islands b,1,2,3,g | (GE,GF) | (GB,GC).
// Accidental modes are labeled "<island>_<n>" with n = 1..N_k.
class Device {
 public:
  explicit Device(DeviceSpec spec);

  const DeviceSpec& spec() const { return spec_; }
  const MajoranaSet& reg() const { return reg_; }
  long dim() const { return reg_.dim(); }
  const Mat& op(const std::string& label) const { return reg_.op(label); }

  // Total accidental parity of an island; identity when it hosts none.
  const Mat& parity(const std::string& island) const;

  // Coupling operators c_k = i * (left) * Pi_k * (right) for k = 1,2,3, so
  // that H_C(d) = d1*c1 + d2*c2 + d3*c3.
  const Mat& coupling_op(int k) const;

  Mat H_C(const CouplingSet& c) const;
  Mat H_delta(const DisorderConfig& d) const;
  Mat H_eps(const DisorderConfig& d) const;
  Mat H_br(const CouplingSet& c, const DisorderConfig& d) const;

 private:
  DeviceSpec spec_;
  MajoranaSet reg_;
  std::map<std::string, Mat> parity_;
  std::array<Mat, 3> coupling_ops_;
};

// One-call form of H_C + H_delta + H_eps.
Mat build_H_br(const DeviceSpec& spec, const CouplingSet& c,
               const DisorderConfig& d);

// Restriction of H to the joint eigenspace {Pi_k = p_k}.  Throws
// NumericError if H mixes the requested sectors (commutator norm > 1e-10).
struct SectorProjection {
  Mat basis;    // orthonormal columns spanning the sector
  Mat reduced;  // basis^dag H basis
};
SectorProjection sector_project(const Mat& H, const Device& dev,
                                const std::map<std::string, int>& parities);

// The six reduced single-channel Hamiltonians on the 16-dimensional
// register (GA,GD),(pair),(GE,GF),(GB,GC): full Coulomb term with the
// parity dressing on island k, pair coupling delta, and one tunnel channel
// of strength eps.  which is one of 11,12,21,22,31,32.
Mat build_H_ki(const std::string& which, const CouplingSet& c, double delta,
               double eps);

// The three 8x8 block unitaries relating the single-channel Hamiltonians:
// conjugation by U12 maps the (2x) family to the (1x) family, U13 maps
// (3x) to (1x), and U13t maps the 31 channel (with d1 and d3 swapped) to
// the 12 channel.
struct ChannelSymmetries {
  Mat U12, U13, U13t;
};
ChannelSymmetries channel_symmetry_unitaries();

}  // namespace mbraid
