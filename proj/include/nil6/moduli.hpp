#pragma once

#include "nil6/bracket.hpp"
#include "nil6/so4.hpp"

#include <utility>

namespace nil6 {

/// Complete O(n-k) x O(k) invariants of a j-map: ascending spectra of
/// j_-^* j_- and j_+^* j_+ in the split metric, and t = Tr(j_+^* j_+ j_-^* j_-).
/// Stored tau-canonically. Spectra have length 2 for strata <= 2 and length 3
/// for the top stratum (equal on both sides there).
struct ModuliPoint {
  int stratum = 0;
  Vec spectrum_minus = Vec::Zero(2);
  Vec spectrum_plus = Vec::Zero(2);
  double t = 0.0;

  double alpha_minus() const { return spectrum_minus(0); }
  double beta_minus() const { return spectrum_minus(spectrum_minus.size() - 1); }
  double alpha_plus() const { return spectrum_plus(0); }
  double beta_plus() const { return spectrum_plus(spectrum_plus.size() - 1); }
};

/// Reduced coefficient vector of the canonical j-shape for k = 2:
/// j(z1) = a_minus e_1^- + p e_1^+, j(z2) = b_minus e_2^- + r e_1^+ + q e_2^+.
struct CanonicalForm {
  double a_minus = 0.0;
  double b_minus = 0.0;
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
};

/// Invariants of a j-map with codomain so(3), so(4) or so(5) (k = 1 only for
/// so(5); so(3) generators are embedded first). Throws UnsupportedCodomain.
ModuliPoint invariants(const JMap& j);

/// Orders the two sides so that beta_- - alpha_- >= beta_+ - alpha_+, breaking
/// ties by beta_- >= beta_+, then alpha_- >= alpha_+. Idempotent.
ModuliPoint canonicalize_tau(const ModuliPoint& m);
ModuliPoint canonicalize_tau(double alpha_minus, double beta_minus, double alpha_plus,
                             double beta_plus, double t);

/// Closed range of t given the two spectra: [am*bp + ap*bm, am*ap + bm*bp].
std::pair<double, double> t_interval(double alpha_minus, double beta_minus,
                                     double alpha_plus, double beta_plus);

/// Solves a-^2 = alpha_-, b-^2 = beta_-, p^2+q^2+r^2 = alpha_+ + beta_+,
/// p^2 q^2 = alpha_+ beta_+, alpha_- p^2 + beta_- (q^2+r^2) = t for the unique
/// nonnegative solution. Throws Infeasible when t leaves its interval beyond
/// tolerance.
CanonicalForm canonical_coeffs(const ModuliPoint& m);

/// JMap on R^6 realizing a canonical form (k = 2, codomain so(4)).
JMap jmap_from_form(const CanonicalForm& f);

double trace_jstar_j(const JMap& j);

/// Scalar multiple of j with Tr(j^* j) = target. Throws ZeroMap.
JMap normalize_trace(const JMap& j, double target);

/// The plane Im c^* together with the pushforward of the standard product.
struct PushforwardMetric {
  Mat plane;  ///< C(n-k,2) x k, columns orthonormal in the invariant product
  Mat gram;   ///< k x k symmetric positive definite
};

PushforwardMetric pushforward_metric(const LieBracket& c);

/// Straight-line retraction of the pushforward metric towards the invariant
/// product on the fixed plane Im c^*; t = 1 yields an isometric j-map.
LieBracket retract(const LieBracket& c, double t_param);

} // namespace nil6
