#include "nil6/bracket.hpp"

#include "nil6/config.hpp"
#include "nil6/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace nil6 {

namespace {

constexpr int kMaxDim = 6;

/// Flips the sign of a column if its first non-negligible entry is negative.
void fix_column_signs(Mat& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (std::abs(m(r, c)) > 1e-9) {
        if (m(r, c) < 0.0) m.col(c) *= -1.0;
        break;
      }
    }
  }
}

}  // namespace

int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

LieBracket::LieBracket(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim)
    throw Error("LieBracket: dimension must be between 1 and " + std::to_string(kMaxDim));
  coeffs_ = Mat::Zero(dim, dim * (dim - 1) / 2);
}

double LieBracket::coeff(int i, int j, int k) const {
  if (i == j) return 0.0;
  const double sign = i < j ? 1.0 : -1.0;
  return sign * coeffs_(k, pair_index(dim_, i, j));
}

void LieBracket::set_coeff(int i, int j, int k, double value) {
  if (i == j) throw Error("LieBracket::set_coeff: repeated index");
  const double sign = i < j ? 1.0 : -1.0;
  coeffs_(k, pair_index(dim_, i, j)) = sign * value;
}

void LieBracket::add_coeff(int i, int j, int k, double value) {
  set_coeff(i, j, k, coeff(i, j, k) + value);
}

Vec LieBracket::apply(const Vec& u, const Vec& v) const {
  Vec out = Vec::Zero(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      const double w = u(i) * v(j) - u(j) * v(i);
      if (w != 0.0) out += w * coeffs_.col(pair_index(dim_, i, j));
    }
  return out;
}

LieBracket LieBracket::zero_extended(int new_dim) const {
  if (new_dim < dim_) throw Error("zero_extended: target dimension is smaller");
  LieBracket out(new_dim);
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) out.set_coeff(i, j, k, coeff(i, j, k));
  return out;
}

LieBracket parse_salamon(const std::string& s) {
  std::string text;
  text.reserve(s.size());
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);

  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw ParseError("expected a parenthesized comma list: " + s);
  const std::string body = text.substr(1, text.size() - 2);

  std::vector<std::string> items;
  std::string item;
  std::istringstream stream(body);
  while (std::getline(stream, item, ',')) items.push_back(item);
  if (!body.empty() && body.back() == ',') items.emplace_back();

  const int n = static_cast<int>(items.size());
  if (n < 1 || n > kMaxDim)
    throw ParseError("dimension " + std::to_string(n) + " out of range 1.." +
                     std::to_string(kMaxDim));

  LieBracket c(n);
  for (int m = 0; m < n; ++m) {
    const std::string& it = items[m];
    if (it.empty()) throw ParseError("empty item in " + s);
    if (it == "0") continue;
    std::size_t pos = 0;
    while (pos < it.size()) {
      int sign = 1;
      if (it[pos] == '+' || it[pos] == '-') {
        if (pos == 0 && it[pos] == '+')
          throw ParseError("leading '+' in item '" + it + "'");
        sign = it[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (pos != 0) {
        throw ParseError("missing sign between tokens in '" + it + "'");
      }
      if (pos + 2 > it.size() || !std::isdigit(static_cast<unsigned char>(it[pos])) ||
          !std::isdigit(static_cast<unsigned char>(it[pos + 1])))
        throw ParseError("malformed token in item '" + it + "'");
      const int i = it[pos] - '0';
      const int j = it[pos + 1] - '0';
      pos += 2;
      if (i == j) throw ParseError("repeated index in token '" + std::to_string(i) +
                                   std::to_string(j) + "'");
      if (i < 1 || i > n || j < 1 || j > n)
        throw ParseError("index out of range in token '" + std::to_string(i) +
                         std::to_string(j) + "' for dimension " + std::to_string(n));
      c.add_coeff(i - 1, j - 1, m, static_cast<double>(sign));
    }
  }
  return c;
}

std::string format_salamon(const LieBracket& c) {
  const int n = c.dim();
  std::string out = "(";
  for (int m = 0; m < n; ++m) {
    if (m > 0) out += ",";
    std::string item;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double v = c.coeff(i, j, m);
        if (std::abs(v) <= 1e-12) continue;
        if (std::abs(std::abs(v) - 1.0) > 1e-12)
          throw NotUnitCoefficients("format_salamon: coefficient " + std::to_string(v) +
                                    " at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
        if (v < 0.0)
          item += '-';
        else if (!item.empty())
          item += '+';
        item += std::to_string(i + 1);
        item += std::to_string(j + 1);
      }
    out += item.empty() ? "0" : item;
  }
  out += ")";
  return out;
}

LieBracket parse_structure_file(std::istream& in) {
  struct Entry {
    int i, j, k;
    double value;
  };
  std::vector<Entry> entries;
  int dim = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "dim") {
      if (!(ls >> dim) || dim < 1 || dim > kMaxDim)
        throw ParseError("line " + std::to_string(line_no) + ": bad dimension");
      continue;
    }
    Entry e{};
    try {
      e.i = std::stoi(first);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) + ": expected an index");
    }
    if (!(ls >> e.j >> e.k >> e.value))
      throw ParseError("line " + std::to_string(line_no) + ": expected 'i j k value'");
    std::string extra;
    if (ls >> extra)
      throw ParseError("line " + std::to_string(line_no) + ": trailing content");
    if (e.i < 1 || e.j < 1 || e.k < 1 || e.i == e.j)
      throw ParseError("line " + std::to_string(line_no) + ": bad indices");
    if (!std::isfinite(e.value))
      throw ParseError("line " + std::to_string(line_no) + ": non-finite value");
    dim = std::max({dim, e.i, e.j, e.k});
    entries.push_back(e);
  }
  if (dim < 1) throw ParseError("empty structure-constant file");
  if (dim > kMaxDim) throw ParseError("dimension exceeds " + std::to_string(kMaxDim));
  LieBracket c(dim);
  for (const Entry& e : entries) c.add_coeff(e.i - 1, e.j - 1, e.k - 1, e.value);
  return c;
}

LieBracket load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return parse_structure_file(in);
}

double jacobi_defect(const LieBracket& c) {
  const int n = c.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    Vec ei = Vec::Unit(n, i);
    for (int j = i + 1; j < n; ++j) {
      Vec ej = Vec::Unit(n, j);
      const Vec cij = c.matrix().col(pair_index(n, i, j));
      for (int l = j + 1; l < n; ++l) {
        Vec el = Vec::Unit(n, l);
        const Vec sum = c.apply(cij, el) + c.apply(c.apply(el, ei), ej) +
                        c.apply(c.apply(ej, el), ei);
        worst = std::max(worst, sum.norm());
      }
    }
  }
  return worst;
}

bool is_two_step(const LieBracket& c) {
  const int n = c.dim();
  const double scale = 1.0 + c.norm() * c.norm();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vec cij = c.matrix().col(pair_index(n, i, j));
      for (int l = 0; l < n; ++l) {
        if (c.apply(cij, Vec::Unit(n, l)).norm() > tolerance() * scale) return false;
      }
    }
  return true;
}

int stratum(const LieBracket& c) {
  if (!is_two_step(c)) throw NotTwoStep("stratum: bracket is not 2-step");
  return numerical_rank(c.matrix(), tolerance());
}

LieBracket gl_action(const Mat& g, const LieBracket& c) {
  const int n = c.dim();
  if (g.rows() != n || g.cols() != n)
    throw DimensionMismatch("gl_action: matrix size does not match the bracket");
  Eigen::FullPivLU<Mat> lu(g);
  if (!lu.isInvertible())
    throw SingularMatrix("gl_action: matrix is singular (condition number " +
                         std::to_string(condition_number(g)) + ")");
  const Mat ginv = lu.inverse();
  LieBracket out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vec image = g * c.apply(ginv.col(i), ginv.col(j));
      for (int k = 0; k < n; ++k) out.set_coeff(i, j, k, image(k));
    }
  return out;
}

JMap jmap(const LieBracket& c) {
  if (!is_two_step(c)) throw NotTwoStep("jmap: bracket is not 2-step");
  const int n = c.dim();

  Eigen::JacobiSVD<Mat> svd(c.matrix(), Eigen::ComputeFullU);
  const Vec& sigma = svd.singularValues();
  const double cutoff = tolerance() * std::max(1.0, sigma.size() > 0 ? sigma(0) : 0.0);
  int k = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) ++k;

  Mat u = svd.matrixU();
  if (c.norm() <= tolerance()) u = Mat::Identity(n, n);  // abelian: fix the frame
  fix_column_signs(u);

  JMap j;
  j.k = k;
  j.z_basis = u.leftCols(k);
  j.h_basis = u.rightCols(n - k);

  const double scale = 1.0 + c.norm();
  for (int m = 0; m < k; ++m) {
    const Vec z = j.z_basis.col(m);
    for (int i = 0; i < n; ++i) {
      const double drift = c.apply(z, Vec::Unit(n, i)).norm();
      if (drift > tolerance() * scale)
        throw CommutatorNotCentral("jmap: Im c is not central (defect " +
                                   std::to_string(drift) + ")");
    }
  }

  const int m_dim = n - k;
  for (int m = 0; m < k; ++m) {
    Mat x(m_dim, m_dim);
    for (int a = 0; a < m_dim; ++a)
      for (int b = 0; b < m_dim; ++b)
        x(b, a) = j.z_basis.col(m).dot(c.apply(j.h_basis.col(a), j.h_basis.col(b)));
    j.generators.push_back(0.5 * (x - x.transpose()));
  }
  return j;
}

LieBracket bracket_from_jmap(const JMap& j) {
  const int n = j.ambient_dim();
  const int m_dim = j.codomain_dim();
  LieBracket c(n);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      Vec image = Vec::Zero(n);
      for (int a = 0; a < m_dim; ++a)
        for (int b = 0; b < m_dim; ++b) {
          double w = j.h_basis(p, a) * j.h_basis(q, b);
          if (w == 0.0) continue;
          for (int m = 0; m < j.k; ++m)
            image += w * j.generators[m](b, a) * j.z_basis.col(m);
        }
      for (int k = 0; k < n; ++k) c.set_coeff(p, q, k, image(k));
    }
  return c;
}

} // namespace nil6
