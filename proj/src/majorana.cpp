#include "mbraid/majorana.hpp"

#include <cmath>
#include <set>

#include "mbraid/pauli.hpp"

namespace mbraid {

namespace {

Mat chain_op(int n_sites, int site, const Mat& onsite, bool trailing) {
  Mat out = Mat::Identity(1, 1);
  for (int f = 0; f < n_sites; ++f) {
    const bool string_here = trailing ? (f > site) : (f < site);
    if (f == site)
      out = kron(out, onsite);
    else if (string_here)
      out = kron(out, pauli_z());
    else
      out = kron(out, pauli0());
  }
  return out;
}

}  // namespace

const Mat& MajoranaSet::op(int i) const {
  if (i < 0 || i >= size()) throw ConfigError("MajoranaSet: index out of range");
  return ops_[static_cast<std::size_t>(i)];
}

const Mat& MajoranaSet::op(const std::string& label) const {
  return ops_[static_cast<std::size_t>(index_of(label))];
}

int MajoranaSet::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw ConfigError("MajoranaSet: unknown label '" + label + "'");
}

MajoranaSet MajoranaSet::build(int n_modes) {
  if (n_modes < 1 || n_modes > 12)
    throw ConfigError("build_majorana_set: n_modes must be in [1, 12]");
  MajoranaSet s;
  s.dim_ = 1L << n_modes;
  for (int m = 0; m < n_modes; ++m) {
    s.labels_.push_back("x" + std::to_string(m));
    s.ops_.push_back(chain_op(n_modes, m, pauli_x(), /*trailing=*/false));
    s.labels_.push_back("y" + std::to_string(m));
    s.ops_.push_back(chain_op(n_modes, m, pauli_y(), /*trailing=*/false));
  }
  return s;
}

MajoranaSet MajoranaSet::build_trailing(const std::vector<std::string>& labels) {
  if (labels.empty() || labels.size() % 2 != 0 || labels.size() > 24)
    throw ConfigError("build_trailing: need an even label count in [2, 24]");
  std::set<std::string> uniq(labels.begin(), labels.end());
  if (uniq.size() != labels.size())
    throw ConfigError("build_trailing: duplicate labels");
  const int n_sites = static_cast<int>(labels.size()) / 2;
  MajoranaSet s;
  s.dim_ = 1L << n_sites;
  s.labels_ = labels;
  for (int m = 0; m < n_sites; ++m) {
    s.ops_.push_back(chain_op(n_sites, m, pauli_x(), /*trailing=*/true));
    s.ops_.push_back(chain_op(n_sites, m, pauli_y(), /*trailing=*/true));
  }
  return s;
}

const MajoranaSet& canonical_six_set() {
  static const MajoranaSet s = [] {
    MajoranaSet t = MajoranaSet::build_trailing({"g1", "g2", "GE", "GF", "GB", "GC"});
    return t;
  }();
  return s;
}

ParityOperator island_parity(const MajoranaSet& set, const std::string& island,
                             const std::vector<int>& members) {
  const std::size_t n = members.size();
  if (n < 2 || n % 2 != 0)
    throw ConfigError("island_parity: member count must be even and >= 2");
  std::set<int> uniq(members.begin(), members.end());
  if (uniq.size() != n) throw ConfigError("island_parity: duplicate members");
  Mat prod = Mat::Identity(set.dim(), set.dim());
  for (int idx : members) prod = prod * set.op(idx);
  const double k = static_cast<double>(n);
  prod *= std::exp(cxd(0.0, -M_PI * k / 4.0));
  return ParityOperator{island, std::move(prod), members};
}

}  // namespace mbraid
