#include "nil6/so4.hpp"

#include "nil6/errors.hpp"

#include <array>

namespace nil6::so4 {

namespace {

Mat make_minus(int i) {
  const double xi = i == 0 ? 1.0 : 0.0;
  const double psi = i == 1 ? 1.0 : 0.0;
  const double chi = i == 2 ? 1.0 : 0.0;
  Mat m(4, 4);
  m << 0.0, xi, psi, chi,
      -xi, 0.0, -chi, psi,
      -psi, chi, 0.0, -xi,
      -chi, -psi, xi, 0.0;
  return m;
}

Mat make_plus(int i) {
  const double xi = i == 0 ? 1.0 : 0.0;
  const double psi = i == 1 ? 1.0 : 0.0;
  const double chi = i == 2 ? 1.0 : 0.0;
  Mat m(4, 4);
  m << 0.0, xi, psi, chi,
      -xi, 0.0, chi, -psi,
      -psi, -chi, 0.0, xi,
      -chi, psi, -xi, 0.0;
  return m;
}

void require_skew(const Mat& x, int n, const char* who) {
  if (x.rows() != n || x.cols() != n)
    throw NotSkew(std::string(who) + ": expected a " + std::to_string(n) + "x" +
                  std::to_string(n) + " matrix");
  const double defect = (x + x.transpose()).norm();
  if (defect > 1e-12 * (1.0 + x.norm()))
    throw NotSkew(std::string(who) + ": matrix is not skew-symmetric");
}

}  // namespace

const Mat& basis_minus(int i) {
  static const std::array<Mat, 3> basis = {make_minus(0), make_minus(1), make_minus(2)};
  return basis.at(static_cast<std::size_t>(i));
}

const Mat& basis_plus(int i) {
  static const std::array<Mat, 3> basis = {make_plus(0), make_plus(1), make_plus(2)};
  return basis.at(static_cast<std::size_t>(i));
}

double inner(const Mat& x, const Mat& y) {
  return 0.25 * (x.transpose() * y).trace();
}

SplitVector split(const Mat& x) {
  require_skew(x, 4, "split");
  SplitVector v;
  for (int i = 0; i < 3; ++i) {
    v.minus(i) = inner(basis_minus(i), x);
    v.plus(i) = inner(basis_plus(i), x);
  }
  return v;
}

Mat unsplit(const SplitVector& v) {
  Mat x = Mat::Zero(4, 4);
  for (int i = 0; i < 3; ++i) {
    x += v.minus(i) * basis_minus(i);
    x += v.plus(i) * basis_plus(i);
  }
  return x;
}

SplitVector apply_tau(const SplitVector& v) {
  Eigen::Vector4d d(-1.0, 1.0, 1.0, 1.0);
  const Mat x = unsplit(v);
  return split(d.asDiagonal() * x * d.asDiagonal());
}

Mat embed_so3(const Mat& x) {
  require_skew(x, 3, "embed_so3");
  Mat y = Mat::Zero(4, 4);
  y.block<3, 3>(1, 1) = x;
  return y;
}

} // namespace nil6::so4
