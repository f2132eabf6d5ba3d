#pragma once
#include <string>
#include <vector>

#include "mbraid/linalg.hpp"

namespace mbraid {

// An ordered family of 2*n_modes Hermitian, involutory, mutually
// anticommuting operators on a 2^n_modes-dimensional space.
class MajoranaSet {
 public:
  // Standard chain construction, pairs (x-type, y-type) per site, with the
  // sigma_z string on all EARLIER sites (strings to the left).  Labels are
  // x0,y0,x1,y1,...  Caps at n_modes = 12 (dimension 4096).
  static MajoranaSet build(int n_modes);

  // Trailing-string variant used for device registers: site m carries sx/sy
  // on its own factor and the sigma_z string on all LATER sites.  With this
  // choice the final three sites of any register reproduce the fixed 8x8
  // Pauli forms of the reduced six-operator model (see canonical_six_set).
  // labels.size() must be even, two per site, and <= 24.
  static MajoranaSet build_trailing(const std::vector<std::string>& labels);

  int n_modes() const { return static_cast<int>(ops_.size()) / 2; }
  int size() const { return static_cast<int>(ops_.size()); }
  long dim() const { return dim_; }
  const Mat& op(int i) const;
  const Mat& op(const std::string& label) const;
  int index_of(const std::string& label) const;
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  MajoranaSet() = default;
  std::vector<std::string> labels_;
  std::vector<Mat> ops_;
  long dim_ = 0;
};

// The fixed 8x8 register of the reduced single-channel model: six operators
// labeled GB, GC, GE, GF, g1, g2, given directly by their Pauli Kronecker
// products (GB = s0 x s0 x sx, ..., g2 = sy x sz x sz).
const MajoranaSet& canonical_six_set();

struct ParityOperator {
  std::string island;
  Mat matrix;
  std::vector<int> member_indices;
};

// Total-parity operator of an even number of member modes:
// exp(-i pi N/4) times the ordered product of the members.
ParityOperator island_parity(const MajoranaSet& set, const std::string& island,
                             const std::vector<int>& members);

}  // namespace mbraid
