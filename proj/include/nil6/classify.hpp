#pragma once

#include "nil6/moduli.hpp"

#include <string>
#include <vector>

namespace nil6 {

/// The eight isomorphism classes of 2-step nilpotent Lie algebras of
/// dimension at most 6 (lower dimensions embedded by abelian factors).
enum class IsoClass {
  Abelian,
  H3plusR3,
  H5plusR,
  H3plusH3,
  A12_14p23,  ///< (0,0,0,0,12,14+23)
  N5plusR,
  H3C,
  N63,        ///< (0,0,0,12,13,23)
};

std::string iso_class_name(IsoClass cls);
std::string iso_class_salamon(IsoClass cls);

struct Classification {
  IsoClass iso = IsoClass::Abelian;
  bool near_boundary = false;
  std::vector<std::string> warnings;
};

/// Reduces a k = 2 j-map with codomain so(4) to the canonical coefficient
/// shape using only orthogonal moves. Throws ReductionFailed if the residual
/// off-pattern mass exceeds tolerance.
CanonicalForm reduce_to_jform(const JMap& j);

/// Shears the second generator to kill r, normalizes both columns and
/// re-reduces; the result has isometric columns. Throws DegenerateColumn
/// when the j-map does not have rank two.
CanonicalForm eliminate_r(const CanonicalForm& f);

/// Eliminates q from an isometric r = 0 form: (a-, b-, p, q, 0) becomes
/// (a-, sqrt(b-^2 - q^2), p, 0, 0). Throws NotApplicable when b- = q.
CanonicalForm gl_move_S(const CanonicalForm& f);

/// Eliminates p or a- from an isometric r = 0 form depending on the sign of
/// a- - p. Throws NotApplicable when a- = p.
CanonicalForm gl_move_T(const CanonicalForm& f);

/// Isomorphism class of a 2-step bracket of dimension <= 6.
Classification classify(const LieBracket& c);

/// The 6-dimensional bracket de^5 = (a+p) e^12 + (a-p) e^34,
/// de^6 = (b+q) e^13 - (b-q) e^24 attached to an r = 0 form.
LieBracket structure_equations(const CanonicalForm& f);

} // namespace nil6
