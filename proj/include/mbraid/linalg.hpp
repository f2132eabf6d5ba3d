#pragma once
#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "mbraid/errors.hpp"

namespace mbraid {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

Mat kron(const Mat& a, const Mat& b);

bool is_hermitian(const Mat& m, double tol = 1e-12);

// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
struct EigResult {
  RVec values;
  Mat vectors;
};
EigResult eigh(const Mat& h);

// Largest singular value via the Hermitian eigenproblem of M^dag M.
double spectral_norm(const Mat& m);

// exp(-i t H) for Hermitian H.
Mat expm_i(const Mat& h, double t);

// Unitary (or isometric) polar factor: F = U P with P >= 0, returns U.
Mat polar_unitary(const Mat& f);

// min over a global phase of ||a - e^{i phi} b||_2.  The Frobenius-optimal
// phase is used as the start point and refined locally on the spectral norm.
double phase_aligned_distance(const Mat& a, const Mat& b);

// Composite quadrature weights for n_samples uniformly spaced values.
// Simpson requires an odd sample count (even number of intervals).
std::vector<double> simpson_weights(int n_samples, double h);
std::vector<double> trapezoid_weights(int n_samples, double h);

// Deterministic PRNG independent of the standard library's distributions,
// so seeded results are stable across toolchains.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  double uniform();  // in (0,1)
  double gaussian();
};

// Seeded complex vector with iid standard-normal real and imaginary parts.
Vec random_complex_vector(long n, std::uint64_t seed);

}  // namespace mbraid
