#include "doctest.h"

#include "nil6/degeneration.hpp"
#include "nil6/errors.hpp"

using namespace nil6;

namespace {

/// Applies a witness symbolically: transported terms of weight zero survive.
LieBracket witness_limit(const LieBracket& c, const DegenerationWitness& w) {
  LieBracket moved = c;
  if (w.shear) {
    Mat g = Mat::Identity(c.dim(), c.dim());
    g(w.shear->from - 1, w.shear->to - 1) = w.shear->sign;
    moved = gl_action(g, c);
  }
  LieBracket limit(c.dim());
  for (int i = 0; i < c.dim(); ++i)
    for (int j = i + 1; j < c.dim(); ++j)
      for (int k = 0; k < c.dim(); ++k) {
        const double v = moved.coeff(i, j, k);
        if (std::abs(v) <= 1e-12) continue;
        const int weight = w.exponents[k] - w.exponents[i] - w.exponents[j];
        REQUIRE(weight >= 0);
        if (weight == 0) limit.set_coeff(i, j, k, v);
      }
  return limit;
}

}  // namespace

TEST_CASE("identity self-degeneration") {
  LieBracket c = parse_salamon("(0,0,0,0,12,34)");
  auto w = degeneration_search(c, c, 3);
  REQUIRE(w.has_value());
  CHECK_FALSE(w->shear.has_value());
  for (int e : w->exponents) CHECK(e == 0);
  for (int i = 0; i < 6; ++i) CHECK(w->permutation[i] == i + 1);
}

TEST_CASE("the three degenerations onto n5 + R") {
  LieBracket target = parse_salamon("(0,0,0,0,12,13)");
  for (const char* source :
       {"(0,0,0,0,13+42,14+23)", "(0,0,0,0,12,34)", "(0,0,0,0,12,14+23)"}) {
    LieBracket c = parse_salamon(source);
    auto w = degeneration_search(c, target, 3);
    REQUIRE_MESSAGE(w.has_value(), source);
    // Verify the certificate independently of the search internals.
    LieBracket limit = witness_limit(c, *w);
    CHECK(isometrically_isomorphic(limit, target, 1e-9));
  }
}

TEST_CASE("no witness within bounds is reported as none") {
  LieBracket n5 = parse_salamon("(0,0,0,0,12,13)");
  LieBracket h3c = parse_salamon("(0,0,0,0,13+42,14+23)");
  CHECK_FALSE(degeneration_search(n5, h3c, 3).has_value());
}

TEST_CASE("degeneration search argument errors") {
  LieBracket c6 = parse_salamon("(0,0,0,0,12,34)");
  LieBracket c5 = parse_salamon("(0,0,0,12,13)");
  CHECK_THROWS_AS(degeneration_search(c6, c5, 2), DimensionMismatch);

  LieBracket filiform = parse_salamon("(0,0,12,13)");
  LieBracket abelian4(4);
  CHECK_THROWS_AS(degeneration_search(filiform, abelian4, 2), NotTwoStep);
}

TEST_CASE("isometrically_isomorphic distinguishes the standard algebras") {
  const char* names[] = {"(0,0,0,0,12,34)", "(0,0,0,0,12,13)", "(0,0,0,0,0,12)",
                         "(0,0,0,0,13+42,14+23)"};
  for (const char* a : names)
    for (const char* b : names) {
      const bool same = std::string(a) == b;
      CHECK(isometrically_isomorphic(parse_salamon(a), parse_salamon(b), 1e-9) == same);
    }

  // Scale changes the metric class.
  LieBracket h = parse_salamon("(0,0,0,0,12,34)");
  Mat g = 2.0 * Mat::Identity(6, 6);
  CHECK_FALSE(isometrically_isomorphic(gl_action(g, h), h, 1e-9));

  // Orthogonal moves do not.
  CHECK(isometrically_isomorphic(gl_action(random_orthogonal(6, 3), h), h, 1e-8));
}
