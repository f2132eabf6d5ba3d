#include "mbraid/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <cmath>

namespace mbraid {

Mat kron(const Mat& a, const Mat& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

bool is_hermitian(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

EigResult eigh(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  if (es.info() != Eigen::Success)
    throw NumericError("eigendecomposition failed to converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

double spectral_norm(const Mat& m) {
  if (m.rows() != m.cols()) throw NumericError("spectral_norm: matrix not square");
  if (!m.allFinite()) throw NumericError("spectral_norm: non-finite entries");
  Mat g = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Mat> es(g, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericError("spectral_norm: eigendecomposition failed");
  double top = es.eigenvalues().maxCoeff();
  return std::sqrt(std::max(0.0, top));
}

Mat expm_i(const Mat& h, double t) {
  EigResult e = eigh(h);
  Vec phases(e.values.size());
  for (long i = 0; i < e.values.size(); ++i)
    phases(i) = std::exp(cxd(0.0, -t * e.values(i)));
  return e.vectors * phases.asDiagonal() * e.vectors.adjoint();
}

Mat polar_unitary(const Mat& f) {
  Eigen::JacobiSVD<Mat> svd(f, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

double phase_aligned_distance(const Mat& a, const Mat& b) {
  cxd tr = (a.adjoint() * b).trace();
  // Frobenius minimizer: phi = -arg tr(a^dag b); refine on the spectral norm.
  double phi0 = (std::abs(tr) > 0.0) ? -std::arg(tr) : 0.0;
  auto d = [&](double phi) {
    return spectral_norm(a - std::exp(cxd(0.0, phi)) * b);
  };
  double best = d(phi0);
  double lo = phi0 - 0.05, hi = phi0 + 0.05;
  for (int it = 0; it < 60; ++it) {
    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (d(m1) < d(m2)) hi = m2; else lo = m1;
  }
  best = std::min(best, d(0.5 * (lo + hi)));
  return best;
}

std::vector<double> simpson_weights(int n_samples, double h) {
  if (n_samples < 3 || n_samples % 2 == 0)
    throw NumericError("simpson_weights: need an odd sample count >= 3");
  std::vector<double> w(static_cast<std::size_t>(n_samples), 1.0);
  for (int i = 1; i + 1 < n_samples; ++i) w[i] = (i % 2 == 1) ? 4.0 : 2.0;
  for (auto& x : w) x *= h / 3.0;
  return w;
}

std::vector<double> trapezoid_weights(int n_samples, double h) {
  if (n_samples < 2) throw NumericError("trapezoid_weights: need >= 2 samples");
  std::vector<double> w(static_cast<std::size_t>(n_samples), h);
  w.front() = 0.5 * h;
  w.back() = 0.5 * h;
  return w;
}

std::uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() {
  // 53-bit mantissa, strictly inside (0,1)
  return (static_cast<double>(next() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

double SplitMix64::gaussian() {
  double u1 = uniform(), u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Vec random_complex_vector(long n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Vec v(n);
  for (long i = 0; i < n; ++i) {
    double re = rng.gaussian();
    double im = rng.gaussian();
    v(i) = cxd(re, im);
  }
  return v;
}

}  // namespace mbraid
