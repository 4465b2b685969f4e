#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace nil6 {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Eigendecomposition of a symmetric matrix with eigenvalues sorted ascending.
struct SymSpectrum {
  Vec eigenvalues;
  Mat eigenvectors;  ///< orthonormal, column i pairs with eigenvalues[i]
};

/// Throws NotSymmetric if the asymmetry of m exceeds 1e-12 * (1 + |m|).
SymSpectrum sym_eig(const Mat& m);

/// Number of singular values <= tol * max(1, sigma_max).
int kernel_dim(const Mat& m, double tol);

/// min(rows, cols) - kernel_dim(m, tol).
int numerical_rank(const Mat& m, double tol);

/// Ratio of extreme singular values (inf for a singular matrix).
double condition_number(const Mat& m);

/// Deterministic standard-normal stream: Box-Muller over mt19937_64.
class NormalSampler {
public:
  explicit NormalSampler(std::uint64_t seed) : gen_(seed) {}
  double operator()();
  Mat matrix(int rows, int cols);
  Vec vector(int n);

private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-distributed orthogonal n x n matrix, deterministic per seed
/// (QR of a Gaussian matrix with the R-diagonal sign correction).
Mat random_orthogonal(int n, std::uint64_t seed);

/// splitmix64 step, used to derive independent per-index seeds.
std::uint64_t mix_seed(std::uint64_t seed);

} // namespace nil6
