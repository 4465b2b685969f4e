#pragma once

#include "nil6/bracket.hpp"

#include <optional>
#include <vector>

namespace nil6 {

/// Certificate that lim_{s->0} g_s . c matches the target up to an orthogonal
/// isomorphism, where g_s = diag(s^{a_1}, ..., s^{a_n}) . P . G with P a basis
/// permutation and G an optional elementary shear I + sign * E_{from,to}.
struct DegenerationWitness {
  struct Shear {
    int from = 0;  ///< 1-based row of the off-diagonal entry
    int to = 0;    ///< 1-based column
    int sign = 1;
  };

  std::vector<int> exponents;
  std::vector<int> permutation;  ///< 1-based images, identity by construction
  std::optional<Shear> shear;
  LieBracket limit{1};
};

/// Bounded search over the family above, smallest exponent shells first.
/// A null result only means the bounded family found no witness.
std::optional<DegenerationWitness> degeneration_search(const LieBracket& c,
                                                       const LieBracket& target,
                                                       int max_exp);

/// Complete orthogonal-isomorphism test for 2-step brackets of dimension <= 6
/// via the moduli invariants.
bool isometrically_isomorphic(const LieBracket& a, const LieBracket& b, double tol);

} // namespace nil6
