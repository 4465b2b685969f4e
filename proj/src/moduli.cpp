#include "nil6/moduli.hpp"

#include "nil6/config.hpp"
#include "nil6/errors.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace nil6 {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Ties are resolved with the global tolerance: isometric points have exactly
// equal spreads, so bitwise comparison would let roundoff pick the side.
bool swap_sides(const Vec& sm, const Vec& sp) {
  const double scale = tolerance() * (1.0 + sm.lpNorm<Eigen::Infinity>() +
                                      sp.lpNorm<Eigen::Infinity>());
  const double spread_m = sm(sm.size() - 1) - sm(0);
  const double spread_p = sp(sp.size() - 1) - sp(0);
  if (std::abs(spread_p - spread_m) > scale) return spread_p > spread_m;
  const double beta_m = sm(sm.size() - 1);
  const double beta_p = sp(sp.size() - 1);
  if (std::abs(beta_p - beta_m) > scale) return beta_p > beta_m;
  if (std::abs(sp(0) - sm(0)) > scale) return sp(0) > sm(0);
  return false;
}

Vec ascending_spectrum(const Mat& gram) {
  return sym_eig(gram).eigenvalues;
}

/// Stacks the split components of so(4) generators as 3 x k matrices.
void split_components(const std::vector<Mat>& gens, Mat& jm, Mat& jp) {
  const int k = static_cast<int>(gens.size());
  jm.resize(3, k);
  jp.resize(3, k);
  for (int m = 0; m < k; ++m) {
    const so4::SplitVector v = so4::split(gens[m]);
    jm.col(m) = v.minus;
    jp.col(m) = v.plus;
  }
}

/// Canonical so(4) representative of a skew so(5) generator: block angles
/// lambda_1 >= lambda_2 >= 0 placed on the (1,2) and (3,4) planes.
Mat conjugate_so5_into_so4(const Mat& gen) {
  Eigen::JacobiSVD<Mat> svd(gen);
  const Vec& sigma = svd.singularValues();
  const double l1 = sigma(0);
  const double l2 = sigma(2);
  Mat x = Mat::Zero(4, 4);
  x(0, 1) = l1;
  x(1, 0) = -l1;
  x(2, 3) = l2;
  x(3, 2) = -l2;
  return x;
}

void fix_plane_signs(Mat& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (std::abs(m(r, c)) > 1e-9) {
        if (m(r, c) < 0.0) m.col(c) *= -1.0;
        break;
      }
}

/// Columns: the 2-forms c^*(z_m) over the h-basis, in lexicographic
/// coordinates scaled so that the Euclidean product equals the invariant one.
Mat coordinate_stack(const JMap& j) {
  const int m_dim = j.codomain_dim();
  const int pairs = m_dim * (m_dim - 1) / 2;
  Mat w(pairs, j.k);
  for (int m = 0; m < j.k; ++m)
    for (int a = 0; a < m_dim; ++a)
      for (int b = a + 1; b < m_dim; ++b)
        w(pair_index(m_dim, a, b), m) = -j.generators[m](a, b) / kSqrt2;
  return w;
}

}  // namespace

ModuliPoint invariants(const JMap& j) {
  ModuliPoint out;
  out.stratum = j.k;
  if (j.k == 0) return out;

  std::vector<Mat> gens4;
  switch (j.codomain_dim()) {
    case 3:
      for (const Mat& g : j.generators) gens4.push_back(so4::embed_so3(g));
      break;
    case 4:
      gens4 = j.generators;
      break;
    case 5:
      if (j.k != 1)
        throw UnsupportedCodomain("invariants: so(5) codomain is only supported for k = 1");
      gens4.push_back(conjugate_so5_into_so4(j.generators[0]));
      break;
    default:
      throw UnsupportedCodomain("invariants: codomain dimension " +
                                std::to_string(j.codomain_dim()) + " is not supported");
  }

  Mat jm, jp;
  split_components(gens4, jm, jp);
  const Mat gram_minus = jm.transpose() * jm;
  const Mat gram_plus = jp.transpose() * jp;
  out.t = (gram_plus * gram_minus).trace();

  if (j.k == 1) {
    out.spectrum_minus = Vec::Zero(2);
    out.spectrum_plus = Vec::Zero(2);
    out.spectrum_minus(1) = gram_minus(0, 0);
    out.spectrum_plus(1) = gram_plus(0, 0);
  } else {
    out.spectrum_minus = ascending_spectrum(gram_minus);
    out.spectrum_plus = ascending_spectrum(gram_plus);
  }
  return canonicalize_tau(out);
}

ModuliPoint canonicalize_tau(const ModuliPoint& m) {
  if (m.spectrum_minus.size() != m.spectrum_plus.size())
    throw Error("canonicalize_tau: spectra of different lengths");
  for (Eigen::Index i = 0; i + 1 < m.spectrum_minus.size(); ++i)
    if (m.spectrum_minus(i) > m.spectrum_minus(i + 1) ||
        m.spectrum_plus(i) > m.spectrum_plus(i + 1))
      throw Error("canonicalize_tau: spectra must be sorted ascending");
  ModuliPoint out = m;
  if (swap_sides(m.spectrum_minus, m.spectrum_plus))
    std::swap(out.spectrum_minus, out.spectrum_plus);
  return out;
}

ModuliPoint canonicalize_tau(double alpha_minus, double beta_minus, double alpha_plus,
                             double beta_plus, double t) {
  ModuliPoint m;
  m.stratum = 2;
  m.spectrum_minus = Vec(2);
  m.spectrum_plus = Vec(2);
  m.spectrum_minus << alpha_minus, beta_minus;
  m.spectrum_plus << alpha_plus, beta_plus;
  m.t = t;
  return canonicalize_tau(m);
}

std::pair<double, double> t_interval(double alpha_minus, double beta_minus,
                                     double alpha_plus, double beta_plus) {
  return {alpha_minus * beta_plus + alpha_plus * beta_minus,
          alpha_minus * alpha_plus + beta_minus * beta_plus};
}

CanonicalForm canonical_coeffs(const ModuliPoint& m) {
  if (m.spectrum_minus.size() != 2)
    throw UnsupportedCodomain("canonical_coeffs: requires two-point spectra (k <= 2)");
  const double am = m.alpha_minus();
  const double bm = m.beta_minus();
  const double ap = m.alpha_plus();
  const double bp = m.beta_plus();
  if (am < -tolerance() || am > bm + tolerance() || ap < -tolerance() ||
      ap > bp + tolerance())
    throw Infeasible("canonical_coeffs: spectra are not sorted nonnegative");

  const auto [lo, hi] = t_interval(am, bm, ap, bp);
  const double slack = 1e-9 * std::max(1.0, std::abs(hi));
  if (m.t < lo - slack || m.t > hi + slack)
    throw Infeasible("canonical_coeffs: t = " + std::to_string(m.t) +
                     " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  const double t = std::min(std::max(m.t, lo), hi);

  CanonicalForm f;
  f.a_minus = std::sqrt(std::max(0.0, am));
  f.b_minus = std::sqrt(std::max(0.0, bm));

  const double sum = ap + bp;
  const double prod = ap * bp;
  if (bm - am <= tolerance() * std::max(1.0, bm)) {
    // Degenerate split: the t-equation carries no information; take the
    // isometric-convention roots.
    f.p = std::sqrt(std::max(0.0, bp));
    f.q = std::sqrt(std::max(0.0, ap));
    f.r = 0.0;
    return f;
  }

  double p2 = (bm * sum - t) / (bm - am);
  p2 = std::min(std::max(p2, 0.0), sum);
  double q2 = 0.0;
  if (p2 > 1e-14 * std::max(1.0, sum)) {
    q2 = prod / p2;
  } else if (prod > 1e-12 * std::max(1.0, sum * sum)) {
    throw Infeasible("canonical_coeffs: p = 0 is inconsistent with alpha_+ beta_+ > 0");
  } else {
    p2 = 0.0;
  }
  double r2 = sum - p2 - q2;
  if (r2 < -1e-9 * std::max(1.0, sum))
    throw Infeasible("canonical_coeffs: negative r^2 = " + std::to_string(r2));
  r2 = std::max(0.0, r2);

  f.p = std::sqrt(p2);
  f.q = std::sqrt(q2);
  f.r = std::sqrt(r2);
  return f;
}

JMap jmap_from_form(const CanonicalForm& f) {
  JMap j;
  j.k = 2;
  const Mat id6 = Mat::Identity(6, 6);
  j.z_basis = id6.rightCols(2);
  j.h_basis = id6.leftCols(4);
  so4::SplitVector v1, v2;
  v1.minus << f.a_minus, 0.0, 0.0;
  v1.plus << f.p, 0.0, 0.0;
  v2.minus << 0.0, f.b_minus, 0.0;
  v2.plus << f.r, f.q, 0.0;
  j.generators = {so4::unsplit(v1), so4::unsplit(v2)};
  return j;
}

double trace_jstar_j(const JMap& j) {
  double trace = 0.0;
  for (const Mat& g : j.generators) trace += so4::inner(g, g);
  return trace;
}

JMap normalize_trace(const JMap& j, double target) {
  if (target <= 0.0) throw Error("normalize_trace: target must be positive");
  const double trace = trace_jstar_j(j);
  if (trace <= 0.0) throw ZeroMap("normalize_trace: zero j-map");
  const double scale = std::sqrt(target / trace);
  JMap out = j;
  for (Mat& g : out.generators) g *= scale;
  return out;
}

PushforwardMetric pushforward_metric(const LieBracket& c) {
  const JMap j = jmap(c);
  if (j.k < 1) throw ZeroMap("pushforward_metric: abelian bracket");
  const Mat w = coordinate_stack(j);
  PushforwardMetric out;
  Eigen::JacobiSVD<Mat> svd(w, Eigen::ComputeThinU);
  Mat u = svd.matrixU();
  fix_plane_signs(u);
  out.plane = kSqrt2 * u;  // raw lexicographic coordinates
  const Mat gram = w.transpose() * w;
  out.gram = gram.inverse();
  return out;
}

LieBracket retract(const LieBracket& c, double t_param) {
  if (t_param < -1e-12 || t_param > 1.0 + 1e-12)
    throw Error("retract: parameter outside [0, 1]");
  const double t = std::min(std::max(t_param, 0.0), 1.0);
  const JMap j = jmap(c);
  if (j.k == 0) return c;

  const Mat w = coordinate_stack(j);
  Eigen::JacobiSVD<Mat> svd(w, Eigen::ComputeThinU);
  Mat u = svd.matrixU();
  fix_plane_signs(u);
  const Mat h = u.transpose() * w;  // w = u * h
  const Mat metric0 = (h * h.transpose()).inverse();
  const Mat metric_t =
      (1.0 - t) * metric0 + t * Mat::Identity(j.k, j.k);

  const SymSpectrum eig = sym_eig(metric_t);
  Mat inv_sqrt = Mat::Zero(j.k, j.k);
  for (int i = 0; i < j.k; ++i) {
    if (eig.eigenvalues(i) <= 0.0)
      throw Error("retract: interpolated metric is not positive definite");
    inv_sqrt += eig.eigenvectors.col(i) * eig.eigenvectors.col(i).transpose() /
                std::sqrt(eig.eigenvalues(i));
  }
  const Mat w_new = u * inv_sqrt;

  JMap jt;
  jt.k = j.k;
  jt.z_basis = j.z_basis;
  jt.h_basis = j.h_basis;
  const int m_dim = j.codomain_dim();
  for (int m = 0; m < j.k; ++m) {
    Mat x = Mat::Zero(m_dim, m_dim);
    for (int a = 0; a < m_dim; ++a)
      for (int b = a + 1; b < m_dim; ++b) {
        x(a, b) = -kSqrt2 * w_new(pair_index(m_dim, a, b), m);
        x(b, a) = -x(a, b);
      }
    jt.generators.push_back(x);
  }
  return bracket_from_jmap(jt);
}

} // namespace nil6
