#include "nil6/classify.hpp"

#include "nil6/config.hpp"
#include "nil6/errors.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace nil6 {

namespace {

constexpr double kBoundaryEps = 1e-7;

/// Deterministic unit vector orthogonal to f (picks the least aligned axis).
Eigen::Vector3d orthogonal_unit(const Eigen::Vector3d& f) {
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(f(i)) < std::abs(f(best))) best = i;
  Eigen::Vector3d v = Eigen::Vector3d::Unit(best) - f(best) * f;
  return v.normalized();
}

/// Rotation in SO(3) sending v1 -> |v1| e1 and v2 -> span(e1, e2) with a
/// nonnegative e2 component; degenerate vectors get deterministic frames.
Mat frame_rotation(const Eigen::Vector3d& v1, const Eigen::Vector3d& v2, double tol) {
  Eigen::Vector3d f1, f2;
  const double n1 = v1.norm();
  if (n1 > tol) {
    f1 = v1 / n1;
    const Eigen::Vector3d res = v2 - v2.dot(f1) * f1;
    f2 = res.norm() > tol ? Eigen::Vector3d(res.normalized()) : orthogonal_unit(f1);
  } else if (v2.norm() > tol) {
    f2 = v2.normalized();
    f1 = orthogonal_unit(f2);
  } else {
    return Mat::Identity(3, 3);
  }
  Mat rot(3, 3);
  rot.row(0) = f1.transpose();
  rot.row(1) = f2.transpose();
  rot.row(2) = f1.cross(f2).transpose();
  return rot;
}

/// Rotation placing v along e1 (for the plus factor when the first column
/// vanishes, the second column goes to the e1 axis).
Mat axis_rotation(const Eigen::Vector3d& v, double tol) {
  if (v.norm() <= tol) return Mat::Identity(3, 3);
  const Eigen::Vector3d f1 = v.normalized();
  const Eigen::Vector3d f2 = orthogonal_unit(f1);
  Mat rot(3, 3);
  rot.row(0) = f1.transpose();
  rot.row(1) = f2.transpose();
  rot.row(2) = f1.cross(f2).transpose();
  return rot;
}

void require_r_zero(const CanonicalForm& f, const char* who) {
  if (std::abs(f.r) > tolerance() * (1.0 + std::abs(f.r)))
    throw NotApplicable(std::string(who) + ": requires r = 0");
}

void require_isometric(const CanonicalForm& f, const char* who) {
  const double c1 = f.a_minus * f.a_minus + f.p * f.p;
  const double c2 = f.b_minus * f.b_minus + f.q * f.q + f.r * f.r;
  if (std::abs(c1 - 1.0) > 1e-6 || std::abs(c2 - 1.0) > 1e-6)
    throw NotApplicable(std::string(who) + ": requires isometric columns");
}

/// 3 x 2 split component matrices of the two generators of a form.
void form_components(const CanonicalForm& f, Mat& jm, Mat& jp) {
  jm = Mat::Zero(3, 2);
  jp = Mat::Zero(3, 2);
  jm(0, 0) = f.a_minus;
  jm(1, 1) = f.b_minus;
  jp(0, 0) = f.p;
  jp(0, 1) = f.r;
  jp(1, 1) = f.q;
}

Classification classify_stratum_one(const ModuliPoint& inv) {
  Classification out;
  const double bm = inv.beta_minus();
  const double bp = inv.beta_plus();
  const double gap = (bm - bp) / bm;  // canonical order gives bm >= bp >= 0, bm > 0
  out.iso = gap <= kBoundaryEps ? IsoClass::H3plusR3 : IsoClass::H5plusR;
  if (gap <= 10.0 * kBoundaryEps) {
    out.near_boundary = true;
    out.warnings.push_back("factor spectra within 10 eps of equality");
  }
  return out;
}

Classification classify_stratum_two(const ModuliPoint& inv) {
  // Pass to an isometric representative in the same GL class and read off
  // the alpha coordinates.
  const CanonicalForm form = canonical_coeffs(inv);
  const CanonicalForm iso = eliminate_r(form);
  const ModuliPoint flat = invariants(jmap_from_form(iso));
  const double am = flat.alpha_minus();
  const double ap = flat.alpha_plus();

  Classification out;
  const double dm = am - 0.5;
  const double dp = ap - 0.5;
  if (dp > kBoundaryEps)
    throw UnclassifiableRegion("classify: alpha_+ = " + std::to_string(ap) +
                               " exceeds 1/2 after canonicalization");
  if (dm < -kBoundaryEps) {
    out.iso = IsoClass::H3plusH3;
  } else if (dm <= kBoundaryEps) {
    out.iso = std::abs(dp) <= kBoundaryEps ? IsoClass::N5plusR : IsoClass::A12_14p23;
  } else {
    if (std::abs(dp) <= kBoundaryEps)
      throw UnclassifiableRegion("classify: alpha_- > 1/2 with alpha_+ = 1/2");
    out.iso = IsoClass::H3C;
  }
  if (std::abs(dm) <= 10.0 * kBoundaryEps) {
    out.near_boundary = true;
    out.warnings.push_back("alpha_- within 10 eps of 1/2");
  }
  if (std::abs(dp) <= 10.0 * kBoundaryEps) {
    out.near_boundary = true;
    out.warnings.push_back("alpha_+ within 10 eps of 1/2");
  }
  return out;
}

}  // namespace

std::string iso_class_name(IsoClass cls) {
  switch (cls) {
    case IsoClass::Abelian: return "abelian";
    case IsoClass::H3plusR3: return "h3+R3";
    case IsoClass::H5plusR: return "h5+R";
    case IsoClass::H3plusH3: return "h3+h3";
    case IsoClass::A12_14p23: return "n6(12,14+23)";
    case IsoClass::N5plusR: return "n5+R";
    case IsoClass::H3C: return "h3C";
    case IsoClass::N63: return "n6(12,13,23)";
  }
  throw Error("iso_class_name: invalid class");
}

std::string iso_class_salamon(IsoClass cls) {
  switch (cls) {
    case IsoClass::Abelian: return "(0,0,0,0,0,0)";
    case IsoClass::H3plusR3: return "(0,0,0,0,0,12)";
    case IsoClass::H5plusR: return "(0,0,0,0,0,12+34)";
    case IsoClass::H3plusH3: return "(0,0,0,0,12,34)";
    case IsoClass::A12_14p23: return "(0,0,0,0,12,14+23)";
    case IsoClass::N5plusR: return "(0,0,0,0,12,13)";
    case IsoClass::H3C: return "(0,0,0,0,13+42,14+23)";
    case IsoClass::N63: return "(0,0,0,12,13,23)";
  }
  throw Error("iso_class_salamon: invalid class");
}

CanonicalForm reduce_to_jform(const JMap& j) {
  if (j.k != 2 || j.codomain_dim() != 4)
    throw UnsupportedCodomain("reduce_to_jform: requires k = 2 with codomain so(4)");

  Mat jm(3, 2), jp(3, 2);
  for (int m = 0; m < 2; ++m) {
    const so4::SplitVector v = so4::split(j.generators[m]);
    jm.col(m) = v.minus;
    jp.col(m) = v.plus;
  }

  const double scale = 1.0 + jm.norm() + jp.norm();
  const double tol = tolerance() * scale;

  // tau: put the wider-spread side on the minus factor.
  {
    const Vec sm = sym_eig(jm.transpose() * jm).eigenvalues;
    const Vec sp = sym_eig(jp.transpose() * jp).eigenvalues;
    const ModuliPoint probe = canonicalize_tau(sm(0), sm(1), sp(0), sp(1), 0.0);
    if (probe.spectrum_minus != sm) std::swap(jm, jp);
  }

  // O(2) on z: diagonalize the minus Gram, ascending.
  {
    const SymSpectrum eig = sym_eig(jm.transpose() * jm);
    jm = jm * eig.eigenvectors;
    jp = jp * eig.eigenvectors;
  }

  // Independent rotations of the two factors place the pattern.
  jm = frame_rotation(jm.col(0), jm.col(1), tol) * jm;
  if (jp.col(0).norm() > tol)
    jp = frame_rotation(jp.col(0), jp.col(1), tol) * jp;
  else
    jp = axis_rotation(jp.col(1), tol) * jp;

  CanonicalForm f;
  f.a_minus = jm(0, 0);
  f.b_minus = jm(1, 1);
  f.p = jp(0, 0);
  f.r = std::abs(jp(0, 1));
  f.q = jp(1, 1);

  double residual = std::abs(jm(1, 0)) + std::abs(jm(2, 0)) + std::abs(jm(0, 1)) +
                    std::abs(jm(2, 1)) + std::abs(jp(1, 0)) + std::abs(jp(2, 0)) +
                    std::abs(jp(2, 1));
  residual += std::max(0.0, -f.a_minus) + std::max(0.0, -f.b_minus) +
              std::max(0.0, -f.p) + std::max(0.0, -f.q);
  if (residual > 1e-9 * scale)
    throw ReductionFailed("reduce_to_jform: off-pattern residual " +
                          std::to_string(residual));
  f.a_minus = std::max(0.0, f.a_minus);
  f.b_minus = std::max(0.0, f.b_minus);
  f.p = std::max(0.0, f.p);
  f.q = std::max(0.0, f.q);
  return f;
}

CanonicalForm eliminate_r(const CanonicalForm& f) {
  Mat jm, jp;
  form_components(f, jm, jp);
  Mat columns(6, 2);
  columns << jm, jp;

  Eigen::JacobiSVD<Mat> svd(columns);
  if (svd.singularValues()(1) <= tolerance() * std::max(1.0, svd.singularValues()(0))) {
    // The documented column swap cannot rescue a rank-deficient map.
    throw DegenerateColumn("eliminate_r: j-map does not have rank two");
  }

  if (std::abs(f.r) > tolerance()) {
    const double denom = f.a_minus * f.a_minus + f.p * f.p;
    columns.col(1) -= (f.p * f.r / denom) * columns.col(0);
  }
  columns.col(0) /= columns.col(0).norm();
  columns.col(1) /= columns.col(1).norm();

  JMap j;
  j.k = 2;
  const Mat id6 = Mat::Identity(6, 6);
  j.z_basis = id6.rightCols(2);
  j.h_basis = id6.leftCols(4);
  for (int m = 0; m < 2; ++m) {
    so4::SplitVector v;
    v.minus = columns.col(m).head(3);
    v.plus = columns.col(m).tail(3);
    j.generators.push_back(so4::unsplit(v));
  }
  return reduce_to_jform(j);
}

CanonicalForm gl_move_S(const CanonicalForm& f) {
  require_r_zero(f, "gl_move_S");
  require_isometric(f, "gl_move_S");
  if (std::abs(f.b_minus - f.q) <= tolerance() * std::max(1.0, f.b_minus + f.q))
    throw NotApplicable("gl_move_S: b_- = q makes the scaling singular");
  CanonicalForm out = f;
  out.b_minus = std::sqrt((f.b_minus + f.q) * (f.b_minus - f.q));
  out.q = 0.0;
  return out;
}

CanonicalForm gl_move_T(const CanonicalForm& f) {
  require_r_zero(f, "gl_move_T");
  require_isometric(f, "gl_move_T");
  if (std::abs(f.a_minus - f.p) <= tolerance() * std::max(1.0, f.a_minus + f.p))
    throw NotApplicable("gl_move_T: a_- = p makes the scaling singular");
  CanonicalForm out = f;
  if (f.a_minus > f.p) {
    out.a_minus = std::sqrt((f.a_minus + f.p) * (f.a_minus - f.p));
    out.p = 0.0;
  } else {
    out.a_minus = 0.0;
  }
  return out;
}

Classification classify(const LieBracket& c) {
  if (!is_two_step(c)) throw NotTwoStep("classify: bracket is not 2-step");
  const LieBracket c6 = c.dim() < 6 ? c.zero_extended(6) : c;
  const int k = stratum(c6);

  switch (k) {
    case 0: {
      Classification out;
      out.iso = IsoClass::Abelian;
      return out;
    }
    case 3: {
      Classification out;
      out.iso = IsoClass::N63;
      return out;
    }
    case 1:
      return classify_stratum_one(invariants(jmap(c6)));
    case 2:
      return classify_stratum_two(invariants(jmap(c6)));
    default:
      throw UnclassifiableRegion("classify: stratum " + std::to_string(k) +
                                 " is impossible in dimension 6");
  }
}

LieBracket structure_equations(const CanonicalForm& f) {
  require_r_zero(f, "structure_equations");
  LieBracket c(6);
  c.set_coeff(0, 1, 4, f.a_minus + f.p);
  c.set_coeff(2, 3, 4, f.a_minus - f.p);
  c.set_coeff(0, 2, 5, f.b_minus + f.q);
  c.set_coeff(1, 3, 5, -(f.b_minus - f.q));
  return c;
}

} // namespace nil6
