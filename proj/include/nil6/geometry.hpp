#pragma once

#include "nil6/classify.hpp"

#include <cstdint>
#include <tuple>
#include <vector>

namespace nil6 {

/// Levi-Civita connection coefficients Gamma^k_{ij} = <nabla_{e_i} e_j, e_k>
/// of the left-invariant metric making the frame orthonormal.
class Connection {
public:
  explicit Connection(int dim) : dim_(dim), gamma_(dim * dim * dim, 0.0) {}
  int dim() const { return dim_; }
  double operator()(int i, int j, int k) const { return gamma_[(i * dim_ + j) * dim_ + k]; }
  double& at(int i, int j, int k) { return gamma_[(i * dim_ + j) * dim_ + k]; }

private:
  int dim_;
  std::vector<double> gamma_;
};

/// Curvature components R_{ijhk} stored on lexicographic index pairs; the
/// skew and pair symmetries are built into the accessor.
class CurvatureTensor {
public:
  explicit CurvatureTensor(int dim);
  int dim() const { return dim_; }
  double operator()(int i, int j, int h, int k) const;
  void set(int i, int j, int h, int k, double value);
  const Mat& pair_matrix() const { return entries_; }
  Mat& pair_matrix() { return entries_; }

  /// Canonical nonzero components (i<j, h<k, (i,j) <= (h,k)), 0-based.
  std::vector<std::tuple<int, int, int, int, double>> components(double tol) const;

  /// Maximum norm of the first Bianchi cyclic sum over index quadruples.
  double bianchi_defect() const;

private:
  int dim_;
  Mat entries_;
};

/// Koszul connection of a left-invariant metric. Throws NotLieAlgebra.
Connection levi_civita(const LieBracket& c);

/// Curvature tensor from the connection, with the sign convention of the
/// closed-form table below (R_{1212} < 0 on Heisenberg planes).
CurvatureTensor curvature(const LieBracket& c);

/// Closed-form curvature of the structure equations attached to an r = 0
/// canonical form; equals curvature(structure_equations(f)).
CurvatureTensor curvature_table_d62(const CanonicalForm& f);

/// Matrix of w -> R_{v,w} v; symmetric with v in its kernel. v must be zero
/// or a unit vector.
Mat jacobi_operator(const CurvatureTensor& r, const Vec& v);

struct RankResult {
  int rank = 0;
  Vec witness;
};

/// Minimal Jacobi-operator kernel dimension over deterministic probes (basis
/// vectors and normalized pair sums/differences) plus seeded random unit
/// vectors.
RankResult infinitesimal_rank(const LieBracket& c, int samples, std::uint64_t seed);

} // namespace nil6
