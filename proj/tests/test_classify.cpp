#include "doctest.h"

#include "nil6/classify.hpp"
#include "nil6/errors.hpp"

#include <array>
#include <cmath>
#include <utility>

using namespace nil6;

namespace {

const std::array<std::pair<const char*, IsoClass>, 8> kTable = {{
    {"(0,0,0,12,13,23)", IsoClass::N63},
    {"(0,0,0,0,13+42,14+23)", IsoClass::H3C},
    {"(0,0,0,0,12,14+23)", IsoClass::A12_14p23},
    {"(0,0,0,0,12,34)", IsoClass::H3plusH3},
    {"(0,0,0,0,12,13)", IsoClass::N5plusR},
    {"(0,0,0,0,0,12+34)", IsoClass::H5plusR},
    {"(0,0,0,0,0,12)", IsoClass::H3plusR3},
    {"(0,0,0,0,0,0)", IsoClass::Abelian},
}};

CanonicalForm isometric_form(double alpha_minus, double alpha_plus) {
  CanonicalForm f;
  f.a_minus = std::sqrt(alpha_minus);
  f.b_minus = std::sqrt(1.0 - alpha_plus);
  f.p = std::sqrt(1.0 - alpha_minus);
  f.q = std::sqrt(alpha_plus);
  return f;
}

bool forms_close(const CanonicalForm& a, const CanonicalForm& b, double tol) {
  return std::abs(a.a_minus - b.a_minus) <= tol && std::abs(a.b_minus - b.b_minus) <= tol &&
         std::abs(a.p - b.p) <= tol && std::abs(a.q - b.q) <= tol &&
         std::abs(a.r - b.r) <= tol;
}

}  // namespace

TEST_CASE("classification of the standard representatives") {
  for (const auto& [salamon, expected] : kTable) {
    Classification c = classify(parse_salamon(salamon));
    CHECK(c.iso == expected);
  }
  CHECK_THROWS_AS(classify(parse_salamon("(0,0,12,13)")), NotTwoStep);
}

TEST_CASE("lower-dimensional algebras classify through zero extension") {
  CHECK(classify(parse_salamon("(0,0,12)")).iso == IsoClass::H3plusR3);
  CHECK(classify(parse_salamon("(0,0,0,0,12+34)")).iso == IsoClass::H5plusR);
  CHECK(classify(parse_salamon("(0,0,0,12,13)")).iso == IsoClass::N5plusR);
  CHECK(classify(parse_salamon("(0,0,0)")).iso == IsoClass::Abelian);
}

TEST_CASE("iso class serialization") {
  CHECK(iso_class_name(IsoClass::H3plusH3) == "h3+h3");
  CHECK(iso_class_salamon(IsoClass::H3C) == "(0,0,0,0,13+42,14+23)");
  for (const auto& [salamon, cls] : kTable) {
    if (cls == IsoClass::Abelian) continue;
    CHECK(classify(parse_salamon(iso_class_salamon(cls).c_str())).iso == cls);
  }
}

TEST_CASE("reduce_to_jform recovers planted coefficients") {
  // Already in shape: read off unchanged.
  CanonicalForm planted;
  planted.a_minus = 0.4;
  planted.b_minus = 0.9;
  planted.p = 0.7;
  planted.q = 0.2;
  planted.r = 0.3;
  CanonicalForm direct = reduce_to_jform(jmap_from_form(planted));
  CHECK(forms_close(direct, planted, 1e-12));

  // Conjugated by a random O(2) x O(4) pair: same coefficients.
  for (int trial = 0; trial < 40; ++trial) {
    NormalSampler sampler(400 + trial);
    CanonicalForm f;
    f.a_minus = std::abs(sampler());
    f.p = std::abs(sampler());
    f.q = std::abs(sampler()) * 0.5;
    f.r = std::abs(sampler()) * 0.5;
    // Keep the tau order strict so the recovered pattern is unambiguous:
    // the minus spread must dominate the whole plus trace.
    f.b_minus = std::sqrt(f.a_minus * f.a_minus + f.p * f.p + f.q * f.q +
                          f.r * f.r + 1.0);

    JMap j = jmap_from_form(f);
    const Mat r4 = random_orthogonal(4, 900 + trial);
    const Mat q2 = random_orthogonal(2, 1700 + trial);
    JMap moved = j;
    moved.generators[0] =
        r4 * (q2(0, 0) * j.generators[0] + q2(1, 0) * j.generators[1]) * r4.transpose();
    moved.generators[1] =
        r4 * (q2(0, 1) * j.generators[0] + q2(1, 1) * j.generators[1]) * r4.transpose();

    CanonicalForm back = reduce_to_jform(moved);
    CHECK(forms_close(back, f, 1e-9 * (1.0 + f.b_minus)));
  }

  // The h3C representative at trace 2.
  CanonicalForm h3c = reduce_to_jform(normalize_trace(jmap(
      parse_salamon("(0,0,0,0,13+42,14+23)")), 2.0));
  CHECK(h3c.a_minus == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(h3c.b_minus == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(h3c.p + h3c.q + h3c.r == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("eliminate_r") {
  // r = 0 and unit columns: unchanged.
  CanonicalForm iso = isometric_form(0.3, 0.2);
  CanonicalForm same = eliminate_r(iso);
  CHECK(forms_close(same, iso, 1e-12));

  // The documented non-isometric example.
  CanonicalForm f;
  f.a_minus = 0.6;
  f.b_minus = 0.7;
  f.p = 0.8;
  f.q = 0.3;
  f.r = 0.2;
  CanonicalForm out = eliminate_r(f);
  CHECK(out.r == doctest::Approx(0.0).epsilon(1e-9));
  JMap j = jmap_from_form(out);
  Mat gram = Mat::Zero(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) gram(a, b) = so4::inner(j.generators[a], j.generators[b]);
  CHECK((gram - Mat::Identity(2, 2)).norm() <= 1e-9);

  // GL class preserved.
  CHECK(classify(structure_equations(out)).iso ==
        classify(bracket_from_jmap(jmap_from_form(f))).iso);

  CanonicalForm degenerate;  // first column zero with r > 0
  degenerate.b_minus = 0.5;
  degenerate.q = 0.1;
  degenerate.r = 0.4;
  CHECK_THROWS_AS(eliminate_r(degenerate), DegenerateColumn);
}

TEST_CASE("gl_move_S") {
  CanonicalForm noq = isometric_form(0.4, 0.0);
  CHECK(forms_close(gl_move_S(noq), noq, 1e-12));

  CanonicalForm f = isometric_form(0.0, 0.25);  // b = sqrt(3)/2, q = 1/2
  CanonicalForm out = gl_move_S(f);
  CHECK(out.b_minus == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(out.q == 0.0);
  CHECK(out.a_minus == doctest::Approx(f.a_minus));
  CHECK(out.p == doctest::Approx(f.p));

  // b = q is singular.
  CanonicalForm singular = isometric_form(0.3, 0.5);
  CHECK_THROWS_AS(gl_move_S(singular), NotApplicable);
}

TEST_CASE("gl_move_T") {
  CanonicalForm nop = isometric_form(1.0, 0.2);  // p = 0
  CHECK(forms_close(gl_move_T(nop), nop, 1e-12));

  CanonicalForm high = isometric_form(0.64, 0.1);  // a = 0.8 > p = 0.6
  CanonicalForm out = gl_move_T(high);
  CHECK(out.a_minus == doctest::Approx(std::sqrt(0.64 - 0.36)).epsilon(1e-12));
  CHECK(out.p == 0.0);
  CHECK(out.q == doctest::Approx(high.q));

  CanonicalForm low = isometric_form(0.09, 0.05);  // a = 0.3 < p
  CanonicalForm out2 = gl_move_T(low);
  CHECK(out2.a_minus == 0.0);
  CHECK(out2.p == doctest::Approx(low.p));
  CHECK(out2.q == doctest::Approx(low.q));

  CanonicalForm singular = isometric_form(0.5, 0.2);  // a = p
  CHECK_THROWS_AS(gl_move_T(singular), NotApplicable);
}

TEST_CASE("classification regions from isometric parameters") {
  // (a) alpha_+- < 1/2, (b) alpha_- = 1/2 > alpha_+, (c) both 1/2, (d) mixed.
  CHECK(classify(structure_equations(isometric_form(0.2, 0.1))).iso ==
        IsoClass::H3plusH3);
  CHECK(classify(structure_equations(isometric_form(0.5, 0.2))).iso ==
        IsoClass::A12_14p23);
  CHECK(classify(structure_equations(isometric_form(0.5, 0.5))).iso ==
        IsoClass::N5plusR);
  CHECK(classify(structure_equations(isometric_form(0.8, 0.15))).iso == IsoClass::H3C);
}

TEST_CASE("classify is constant along gl orbits") {
  for (const auto& [salamon, expected] : kTable) {
    LieBracket c = parse_salamon(salamon);
    int done = 0;
    for (int trial = 0; done < 100; ++trial) {
      NormalSampler sampler(10000 + 13 * trial);
      Mat g = Mat::Identity(6, 6) + 0.4 * sampler.matrix(6, 6);
      if (condition_number(g) > 1e3) continue;
      ++done;
      CHECK(classify(gl_action(g, c)).iso == expected);
    }
  }
}

TEST_CASE("classify is constant along retract paths") {
  for (const auto& [salamon, expected] : kTable) {
    if (expected == IsoClass::Abelian) continue;
    LieBracket c = parse_salamon(salamon);
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0})
      CHECK(classify(retract(c, t)).iso == expected);
  }
}

TEST_CASE("moves preserve the class on random valid inputs") {
  for (int trial = 0; trial < 30; ++trial) {
    NormalSampler sampler(777 + trial);
    const double am = 0.5 * (1.0 + std::tanh(sampler()));
    const double cap = std::min(am, 1.0 - am);
    const double ap = cap * 0.5 * (1.0 + std::tanh(sampler()));
    CanonicalForm f = isometric_form(am, ap);
    const IsoClass cls = classify(structure_equations(f)).iso;

    if (std::abs(f.b_minus - f.q) > 1e-6) {
      CanonicalForm s = eliminate_r(gl_move_S(f));
      CHECK(classify(structure_equations(s)).iso == cls);
    }
    if (std::abs(f.a_minus - f.p) > 1e-6) {
      CanonicalForm t = eliminate_r(gl_move_T(f));
      CHECK(classify(structure_equations(t)).iso == cls);
    }
  }
}

TEST_CASE("structure_equations") {
  CanonicalForm h3c;
  h3c.a_minus = 1.0;
  h3c.b_minus = 1.0;
  LieBracket c = structure_equations(h3c);
  CHECK(c.coeff(0, 1, 4) == 1.0);
  CHECK(c.coeff(2, 3, 4) == 1.0);
  CHECK(c.coeff(0, 2, 5) == 1.0);
  CHECK(c.coeff(1, 3, 5) == -1.0);
  CHECK(classify(c).iso == IsoClass::H3C);

  CHECK(structure_equations(CanonicalForm{}).norm() == 0.0);

  const double root = std::sqrt(0.5);
  CanonicalForm n5;
  n5.a_minus = root;
  n5.b_minus = root;
  n5.p = root;
  n5.q = root;
  LieBracket n5c = structure_equations(n5);
  CHECK(n5c.coeff(0, 1, 4) == doctest::Approx(std::sqrt(2.0)));
  CHECK(n5c.coeff(2, 3, 4) == doctest::Approx(0.0));
  CHECK(n5c.coeff(0, 2, 5) == doctest::Approx(std::sqrt(2.0)));
  CHECK(n5c.coeff(1, 3, 5) == doctest::Approx(0.0));
  CHECK(classify(n5c).iso == IsoClass::N5plusR);
}

TEST_CASE("structure_equations reproduces the moduli point") {
  NormalSampler sampler(91);
  for (int trial = 0; trial < 100; ++trial) {
    double am = std::abs(sampler()), ap = std::abs(sampler());
    double bm = am + std::abs(sampler()), bp = ap + std::abs(sampler());
    auto [lo, hi] = t_interval(am, bm, ap, bp);
    const double u = 0.5 * (1.0 + std::tanh(sampler()));
    ModuliPoint m = canonicalize_tau(am, bm, ap, bp, lo + u * (hi - lo));
    CanonicalForm f = canonical_coeffs(m);
    if (f.r > 1e-9) continue;  // the closed-form equations need r = 0
    ModuliPoint back = invariants(jmap(structure_equations(f)));
    const double scale = 1.0 + std::abs(hi);
    CHECK(std::abs(back.alpha_minus() - m.alpha_minus()) <= 1e-9 * scale);
    CHECK(std::abs(back.beta_minus() - m.beta_minus()) <= 1e-9 * scale);
    CHECK(std::abs(back.alpha_plus() - m.alpha_plus()) <= 1e-9 * scale);
    CHECK(std::abs(back.beta_plus() - m.beta_plus()) <= 1e-9 * scale);
    CHECK(std::abs(back.t - m.t) <= 1e-9 * scale * scale);
  }
}

TEST_CASE("isometric relations after eliminate_r") {
  NormalSampler sampler(97);
  for (int trial = 0; trial < 50; ++trial) {
    double am = std::abs(sampler()), ap = std::abs(sampler());
    double bm = am + std::abs(sampler()), bp = ap + std::abs(sampler());
    auto [lo, hi] = t_interval(am, bm, ap, bp);
    const double u = 0.5 * (1.0 + std::tanh(sampler()));
    ModuliPoint m = canonicalize_tau(am, bm, ap, bp, lo + u * (hi - lo));
    CanonicalForm iso = eliminate_r(canonical_coeffs(m));
    ModuliPoint flat = invariants(normalize_trace(jmap_from_form(iso), 2.0));
    CHECK(flat.alpha_minus() + flat.beta_plus() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(flat.alpha_plus() + flat.beta_minus() == doctest::Approx(1.0).epsilon(1e-9));
  }
}
