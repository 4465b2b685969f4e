#include "nil6/degeneration.hpp"

#include "nil6/config.hpp"
#include "nil6/errors.hpp"
#include "nil6/moduli.hpp"

#include <cmath>
#include <cstring>
#include <numeric>
#include <string>
#include <unordered_map>

namespace nil6 {

namespace {

struct Term {
  int i, j, k;
  double value;
};

std::vector<Term> support(const LieBracket& c) {
  std::vector<Term> terms;
  const int n = c.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double v = c.coeff(i, j, k);
        if (std::abs(v) > 1e-12) terms.push_back({i, j, k, v});
      }
  return terms;
}

std::string limit_key(const std::vector<Term>& terms, const std::vector<char>& kept) {
  std::string key;
  key.reserve(terms.size() * (3 + sizeof(double)));
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (!kept[t]) continue;
    key.push_back(static_cast<char>(terms[t].i));
    key.push_back(static_cast<char>(terms[t].j));
    key.push_back(static_cast<char>(terms[t].k));
    char buf[sizeof(double)];
    std::memcpy(buf, &terms[t].value, sizeof(double));
    key.append(buf, sizeof(double));
  }
  return key;
}

LieBracket assemble_limit(int dim, const std::vector<Term>& terms,
                          const std::vector<char>& kept) {
  LieBracket limit(dim);
  for (std::size_t t = 0; t < terms.size(); ++t)
    if (kept[t]) limit.set_coeff(terms[t].i, terms[t].j, terms[t].k, terms[t].value);
  return limit;
}

struct Signature {
  int stratum = 0;
  Vec spectrum_minus;
  Vec spectrum_plus;
  double t = 0.0;
};

Signature signature(const LieBracket& c) {
  const ModuliPoint m = invariants(jmap(c));
  return {m.stratum, m.spectrum_minus, m.spectrum_plus, m.t};
}

bool matches(const Signature& a, const Signature& b, double tol) {
  if (a.stratum != b.stratum) return false;
  if (a.spectrum_minus.size() != b.spectrum_minus.size()) return false;
  return (a.spectrum_minus - b.spectrum_minus).lpNorm<Eigen::Infinity>() <= tol &&
         (a.spectrum_plus - b.spectrum_plus).lpNorm<Eigen::Infinity>() <= tol &&
         std::abs(a.t - b.t) <= tol;
}

}  // namespace

bool isometrically_isomorphic(const LieBracket& a, const LieBracket& b, double tol) {
  if (a.dim() != b.dim()) return false;
  return matches(signature(a), signature(b), tol);
}

std::optional<DegenerationWitness> degeneration_search(const LieBracket& c,
                                                       const LieBracket& target,
                                                       int max_exp) {
  const int n = c.dim();
  if (target.dim() != n)
    throw DimensionMismatch("degeneration_search: brackets live in different dimensions");
  if (!is_two_step(c) || !is_two_step(target))
    throw NotTwoStep("degeneration_search: both brackets must be 2-step");
  if (max_exp < 0) throw Error("degeneration_search: max_exp must be nonnegative");

  const Signature want = signature(target);
  const double target_sq = target.norm() * target.norm();
  const double match_tol = 1e-9 * (1.0 + target_sq);

  // Pre-moves: identity first, then the elementary shears I + sign E_{from,to}.
  struct PreMove {
    std::optional<DegenerationWitness::Shear> shear;
    std::vector<Term> terms;
  };
  std::vector<PreMove> premoves;
  premoves.push_back({std::nullopt, support(c)});
  for (int from = 0; from < n; ++from)
    for (int to = 0; to < n; ++to) {
      if (from == to) continue;
      for (int sign : {+1, -1}) {
        Mat g = Mat::Identity(n, n);
        g(from, to) = static_cast<double>(sign);
        premoves.push_back({DegenerationWitness::Shear{from + 1, to + 1, sign},
                            support(gl_action(g, c))});
      }
    }

  std::unordered_map<std::string, bool> verdict_cache;
  std::vector<int> exponents(n, 0);
  std::vector<char> kept;

  for (int shell = 0; shell <= max_exp; ++shell) {
    for (const PreMove& pre : premoves) {
      const std::vector<Term>& terms = pre.terms;
      kept.assign(terms.size(), 0);

      // Lexicographic scan of [-shell, shell]^n restricted to the shell boundary.
      std::fill(exponents.begin(), exponents.end(), -shell);
      while (true) {
        bool on_shell = shell == 0;
        for (int i = 0; i < n && !on_shell; ++i)
          if (std::abs(exponents[i]) == shell) on_shell = true;

        if (on_shell) {
          bool limit_exists = true;
          double limit_sq = 0.0;
          for (std::size_t t = 0; t < terms.size(); ++t) {
            const int w = exponents[terms[t].k] - exponents[terms[t].i] -
                          exponents[terms[t].j];
            if (w < 0) {
              limit_exists = false;
              break;
            }
            kept[t] = w == 0;
            if (w == 0) limit_sq += terms[t].value * terms[t].value;
          }
          if (limit_exists && std::abs(limit_sq - target_sq) <= match_tol) {
            const std::string key = limit_key(terms, kept);
            auto it = verdict_cache.find(key);
            bool ok;
            if (it != verdict_cache.end()) {
              ok = it->second;
            } else {
              const LieBracket limit = assemble_limit(n, terms, kept);
              ok = matches(signature(limit), want, match_tol);
              verdict_cache.emplace(key, ok);
            }
            if (ok) {
              DegenerationWitness witness;
              witness.exponents = exponents;
              witness.permutation.resize(n);
              std::iota(witness.permutation.begin(), witness.permutation.end(), 1);
              witness.shear = pre.shear;
              witness.limit = assemble_limit(n, terms, kept);
              return witness;
            }
          }
        }

        int pos = n - 1;
        while (pos >= 0 && exponents[pos] == shell) {
          exponents[pos] = -shell;
          --pos;
        }
        if (pos < 0) break;
        ++exponents[pos];
      }
    }
  }
  return std::nullopt;
}

} // namespace nil6
