#include "nil6/numerics.hpp"

#include "nil6/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <limits>

namespace nil6 {

SymSpectrum sym_eig(const Mat& m) {
  if (m.rows() != m.cols()) throw NotSymmetric("sym_eig: matrix is not square");
  const double asym = (m - m.transpose()).norm();
  if (asym > 1e-12 * (1.0 + m.norm()))
    throw NotSymmetric("sym_eig: asymmetry " + std::to_string(asym) + " exceeds tolerance");
  Eigen::SelfAdjointEigenSolver<Mat> solver(0.5 * (m + m.transpose()));
  return SymSpectrum{solver.eigenvalues(), solver.eigenvectors()};
}

int kernel_dim(const Mat& m, double tol) {
  Eigen::JacobiSVD<Mat> svd(m);
  const Vec& sigma = svd.singularValues();
  const double cutoff = tol * std::max(1.0, sigma.size() > 0 ? sigma(0) : 0.0);
  int dim = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) <= cutoff) ++dim;
  return dim;
}

int numerical_rank(const Mat& m, double tol) {
  return static_cast<int>(std::min(m.rows(), m.cols())) - kernel_dim(m, tol);
}

double condition_number(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  const Vec& sigma = svd.singularValues();
  if (sigma.size() == 0) return std::numeric_limits<double>::infinity();
  const double smin = sigma(sigma.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return sigma(0) / smin;
}

double NormalSampler::operator()() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // 53-bit uniforms drawn directly from the engine keep the stream portable.
  double u1 = 0.0;
  do {
    u1 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  } while (u1 <= 0.0);
  const double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Mat NormalSampler::matrix(int rows, int cols) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = (*this)();
  return m;
}

Vec NormalSampler::vector(int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = (*this)();
  return v;
}

Mat random_orthogonal(int n, std::uint64_t seed) {
  if (n < 1) throw Error("random_orthogonal: n must be positive");
  NormalSampler sampler(seed);
  const Mat g = sampler.matrix(n, n);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0.0) q.col(i) *= -1.0;
  return q;
}

std::uint64_t mix_seed(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

} // namespace nil6
