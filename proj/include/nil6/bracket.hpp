#pragma once

#include "nil6/numerics.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace nil6 {

/// Lexicographic index of the pair (i, j), 0 <= i < j < n, in the basis
/// e_i ^ e_j of the second exterior power.
int pair_index(int n, int i, int j);

/// Antisymmetric structure-constant tensor c: Lambda^2 R^n -> R^n on an
/// orthonormal basis, stored as an n x C(n,2) coefficient matrix.
class LieBracket {
public:
  explicit LieBracket(int dim);

  int dim() const { return dim_; }
  int pair_count() const { return static_cast<int>(coeffs_.cols()); }

  /// c^k_{ij} for any order of i, j (antisymmetric in i, j).
  double coeff(int i, int j, int k) const;
  void set_coeff(int i, int j, int k, double value);
  void add_coeff(int i, int j, int k, double value);

  /// Coefficients as the matrix of the linear map Lambda^2 R^n -> R^n
  /// (rows: output index, columns: lexicographic pairs).
  const Mat& matrix() const { return coeffs_; }
  Mat& matrix() { return coeffs_; }

  /// Bilinear evaluation c(u, v).
  Vec apply(const Vec& u, const Vec& v) const;

  /// The same bracket with abelian factors appended.
  LieBracket zero_extended(int new_dim) const;

  /// Frobenius norm of the tensor (orthogonally invariant).
  double norm() const { return coeffs_.norm(); }

  bool operator==(const LieBracket& other) const {
    return dim_ == other.dim_ && coeffs_ == other.coeffs_;
  }

private:
  int dim_;
  Mat coeffs_;
};

/// Parses structure equations such as "(0,0,0,0,12,34)": item m lists the
/// wedge terms of de^m, token "ij" meaning e^i ^ e^j, so [e_i, e_j] gains
/// +/- e_m. Dimension is the number of items. Throws ParseError.
LieBracket parse_salamon(const std::string& s);

/// Inverse of parse_salamon on brackets whose coefficients are all 0 or +/-1
/// (throws NotUnitCoefficients otherwise). Tokens are printed with i < j.
std::string format_salamon(const LieBracket& c);

/// Reads lines "i j k value" (1-based indices, '#' comments); the dimension
/// is the largest index present, or the value of an optional "dim n" line.
LieBracket parse_structure_file(std::istream& in);
LieBracket load_structure_file(const std::string& path);

/// Maximum norm of the Jacobi cyclic sum over basis triples; 0 iff c is a
/// Lie bracket.
double jacobi_defect(const LieBracket& c);

/// True iff all double brackets c(c(.,.),.) vanish within tolerance.
bool is_two_step(const LieBracket& c);

/// dim Im c, the dimension of the commutator ideal. Requires is_two_step.
int stratum(const LieBracket& c);

/// (g.c)(u, v) = g c(g^-1 u, g^-1 v). Throws SingularMatrix.
LieBracket gl_action(const Mat& g, const LieBracket& c);

/// Metric j-map data of a 2-step bracket: deterministic orthonormal bases of
/// the commutator ideal (z) and of its orthogonal complement (h), plus the
/// skew generators j(z_m) acting on h, defined by <y, j(z)x> = <c(x,y), z>.
struct JMap {
  int k = 0;
  Mat z_basis;                  ///< n x k
  Mat h_basis;                  ///< n x (n-k)
  std::vector<Mat> generators;  ///< k skew (n-k) x (n-k) matrices

  int codomain_dim() const { return static_cast<int>(h_basis.rows() > 0 ? h_basis.cols() : 0); }
  int ambient_dim() const { return static_cast<int>(h_basis.rows()); }
};

JMap jmap(const LieBracket& c);

/// Rebuilds the bracket determined by a JMap in the ambient coordinates.
LieBracket bracket_from_jmap(const JMap& j);

} // namespace nil6
