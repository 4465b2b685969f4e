#include "nil6/geometry.hpp"

#include "nil6/config.hpp"
#include "nil6/errors.hpp"

#include <cmath>

namespace nil6 {

namespace {

double signed_pair(int& i, int& j) {
  if (i < j) return 1.0;
  std::swap(i, j);
  return -1.0;
}

}  // namespace

CurvatureTensor::CurvatureTensor(int dim) : dim_(dim) {
  const int pairs = dim * (dim - 1) / 2;
  entries_ = Mat::Zero(pairs, pairs);
}

double CurvatureTensor::operator()(int i, int j, int h, int k) const {
  if (i == j || h == k) return 0.0;
  double sign = signed_pair(i, j);
  sign *= signed_pair(h, k);
  return sign * entries_(pair_index(dim_, i, j), pair_index(dim_, h, k));
}

void CurvatureTensor::set(int i, int j, int h, int k, double value) {
  if (i == j || h == k) throw Error("CurvatureTensor::set: repeated index");
  double sign = signed_pair(i, j);
  sign *= signed_pair(h, k);
  entries_(pair_index(dim_, i, j), pair_index(dim_, h, k)) = sign * value;
  entries_(pair_index(dim_, h, k), pair_index(dim_, i, j)) = sign * value;
}

std::vector<std::tuple<int, int, int, int, double>> CurvatureTensor::components(
    double tol) const {
  std::vector<std::tuple<int, int, int, int, double>> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      const int row = pair_index(dim_, i, j);
      for (int h = 0; h < dim_; ++h)
        for (int k = h + 1; k < dim_; ++k) {
          const int col = pair_index(dim_, h, k);
          if (col < row) continue;
          const double v = entries_(row, col);
          if (std::abs(v) > tol) out.emplace_back(i, j, h, k, v);
        }
    }
  return out;
}

double CurvatureTensor::bianchi_defect() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int h = j + 1; h < dim_; ++h)
        for (int k = 0; k < dim_; ++k) {
          const double sum = (*this)(i, j, h, k) + (*this)(j, h, i, k) + (*this)(h, i, j, k);
          worst = std::max(worst, std::abs(sum));
        }
  return worst;
}

Connection levi_civita(const LieBracket& c) {
  const double defect = jacobi_defect(c);
  if (defect > 1e-12 * (1.0 + c.norm() * c.norm()))
    throw NotLieAlgebra("levi_civita: Jacobi defect " + std::to_string(defect));
  const int n = c.dim();
  Connection gamma(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        gamma.at(i, j, k) =
            0.5 * (c.coeff(i, j, k) - c.coeff(j, k, i) + c.coeff(k, i, j));
  return gamma;
}

CurvatureTensor curvature(const LieBracket& c) {
  const Connection g = levi_civita(c);
  const int n = c.dim();
  CurvatureTensor r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int h = 0; h < n; ++h)
        for (int k = h + 1; k < n; ++k) {
          if (pair_index(n, h, k) < pair_index(n, i, j)) continue;
          double value = 0.0;
          for (int l = 0; l < n; ++l)
            value += g(j, h, l) * g(i, l, k) - g(i, h, l) * g(j, l, k) -
                     c.coeff(i, j, l) * g(l, h, k);
          r.set(i, j, h, k, -value);
        }
  return r;
}

CurvatureTensor curvature_table_d62(const CanonicalForm& f) {
  if (std::abs(f.r) > tolerance() * (1.0 + std::abs(f.r)))
    throw NotApplicable("curvature_table_d62: requires r = 0");
  const double a = f.a_minus, b = f.b_minus, p = f.p, q = f.q;
  const double nu = a + p;    // plane (1,2)
  const double eta = b + q;   // plane (1,3)
  CurvatureTensor r(6);

  r.set(0, 1, 0, 1, -0.75 * nu * nu);
  r.set(0, 1, 2, 3, -0.5 * a * a + 0.5 * p * p + 0.25 * b * b - 0.25 * q * q);
  r.set(0, 2, 0, 2, -0.75 * eta * eta);
  r.set(0, 2, 1, 3, -0.25 * a * a + 0.25 * p * p + 0.5 * b * b - 0.5 * q * q);
  r.set(0, 3, 1, 2, 0.25 * a * a - 0.25 * p * p + 0.25 * b * b - 0.25 * q * q);
  r.set(0, 3, 4, 5, 0.5 * p * q - 0.5 * a * b);
  r.set(0, 4, 0, 4, 0.25 * nu * nu);
  r.set(1, 4, 1, 4, 0.25 * nu * nu);
  r.set(0, 4, 3, 5, -0.25 * (b + q) * (a - p));
  r.set(0, 5, 0, 5, 0.25 * eta * eta);
  r.set(2, 5, 2, 5, 0.25 * eta * eta);
  r.set(0, 5, 3, 4, 0.25 * (b - q) * (a + p));
  r.set(1, 2, 4, 5, -0.5 * a * b - 0.5 * p * q);
  r.set(1, 3, 1, 3, -0.75 * (b - q) * (b - q));
  r.set(1, 4, 2, 5, -0.25 * (a - p) * (b - q));
  r.set(1, 5, 1, 5, 0.25 * (b - q) * (b - q));
  r.set(3, 5, 3, 5, 0.25 * (b - q) * (b - q));
  r.set(1, 5, 2, 4, 0.25 * (b + q) * (a + p));
  r.set(2, 3, 2, 3, -0.75 * (a - p) * (a - p));
  r.set(2, 4, 2, 4, 0.25 * (a - p) * (a - p));
  r.set(3, 4, 3, 4, 0.25 * (a - p) * (a - p));
  return r;
}

Mat jacobi_operator(const CurvatureTensor& r, const Vec& v) {
  const int n = r.dim();
  if (v.size() != n) throw DimensionMismatch("jacobi_operator: wrong vector size");
  const double norm = v.norm();
  if (norm > 0.0 && std::abs(norm - 1.0) > 1e-12)
    throw Error("jacobi_operator: base vector must be zero or unit");
  Mat m = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      double value = 0.0;
      for (int i = 0; i < n; ++i) {
        if (v(i) == 0.0) continue;
        for (int h = 0; h < n; ++h) {
          if (v(h) == 0.0) continue;
          value += v(i) * v(h) * r(i, a, h, b);
        }
      }
      m(a, b) = value;
      m(b, a) = value;
    }
  return m;
}

RankResult infinitesimal_rank(const LieBracket& c, int samples, std::uint64_t seed) {
  const CurvatureTensor r = curvature(c);
  const int n = c.dim();

  std::vector<Vec> probes;
  for (int i = 0; i < n; ++i) probes.push_back(Vec::Unit(n, i));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      probes.push_back(inv_sqrt2 * (Vec::Unit(n, i) + Vec::Unit(n, j)));
      probes.push_back(inv_sqrt2 * (Vec::Unit(n, i) - Vec::Unit(n, j)));
    }

  NormalSampler sampler(seed);
  for (int s = 0; s < samples; ++s) {
    Vec v = sampler.vector(n);
    if (v.norm() < 1e-8) {
      --s;
      continue;
    }
    probes.push_back(v.normalized());
  }

  RankResult best;
  best.rank = n + 1;
  for (const Vec& v : probes) {
    const int dim = kernel_dim(jacobi_operator(r, v), 1e-7);
    if (dim < best.rank) {
      best.rank = dim;
      best.witness = v;
      if (dim == 1) break;  // a Jacobi operator always kills its base vector
    }
  }
  return best;
}

} // namespace nil6
