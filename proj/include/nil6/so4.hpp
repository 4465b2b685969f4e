#pragma once

#include "nil6/numerics.hpp"

namespace nil6::so4 {

/// Components of a skew 4x4 matrix in the two three-dimensional factors of
/// so(4) = R^3_- + R^3_+ (anti-self-dual / self-dual basis).
struct SplitVector {
  Eigen::Vector3d minus = Eigen::Vector3d::Zero();
  Eigen::Vector3d plus = Eigen::Vector3d::Zero();
};

/// Basis matrix e_i^- (resp. e_i^+) of the minus (resp. plus) factor, i in {0,1,2}.
const Mat& basis_minus(int i);
const Mat& basis_plus(int i);

/// Inner product on skew matrices under which the e_i^{+/-} are orthonormal:
/// <x, y> = trace(x^T y) / 4.
double inner(const Mat& x, const Mat& y);

/// Coordinates of a skew 4x4 matrix in the e_i^{+/-} basis (exact projection,
/// the basis is orthonormal). Throws NotSkew.
SplitVector split(const Mat& x);

/// Inverse of split.
Mat unsplit(const SplitVector& v);

/// Conjugation by diag(-1,1,1,1); interchanges the factors up to a rotation
/// of each.
SplitVector apply_tau(const SplitVector& v);

/// Embeds so(3) into so(4) on the last three coordinates. The image is fixed
/// pointwise by tau and splits skew-diagonally: split(...).plus = -split(...).minus.
Mat embed_so3(const Mat& x);

} // namespace nil6::so4
