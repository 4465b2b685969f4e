#include "nil6/classify.hpp"
#include "nil6/config.hpp"
#include "nil6/degeneration.hpp"
#include "nil6/errors.hpp"
#include "nil6/geometry.hpp"
#include "nil6/moduli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>
#include <vector>

namespace py = pybind11;
using namespace nil6;

namespace {

using Term = std::tuple<int, int, int, double>;

/// Accepts Salamon notation or a list of 1-based (i, j, k, value) terms.
LieBracket to_bracket(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_salamon(obj.cast<std::string>());
  const auto terms = obj.cast<std::vector<Term>>();
  int dim = 0;
  for (const auto& [i, j, k, value] : terms) dim = std::max({dim, i, j, k});
  LieBracket c(dim);
  for (const auto& [i, j, k, value] : terms) c.add_coeff(i - 1, j - 1, k - 1, value);
  return c;
}

std::vector<Term> bracket_terms(const LieBracket& c) {
  std::vector<Term> terms;
  for (int i = 0; i < c.dim(); ++i)
    for (int j = i + 1; j < c.dim(); ++j)
      for (int k = 0; k < c.dim(); ++k) {
        const double v = c.coeff(i, j, k);
        if (std::abs(v) > 1e-12) terms.emplace_back(i + 1, j + 1, k + 1, v);
      }
  return terms;
}

py::dict moduli_dict(const ModuliPoint& m) {
  py::dict out;
  out["alpha_minus"] = m.alpha_minus();
  out["beta_minus"] = m.beta_minus();
  out["alpha_plus"] = m.alpha_plus();
  out["beta_plus"] = m.beta_plus();
  out["t"] = m.t;
  out["stratum"] = m.stratum;
  if (m.spectrum_minus.size() == 3) {
    out["omega"] = m.spectrum_minus(0);
    out["alpha"] = m.spectrum_minus(1);
    out["beta"] = m.spectrum_minus(2);
  }
  return out;
}

ModuliPoint bracket_invariants(const LieBracket& c, bool normalize) {
  const LieBracket c6 = c.dim() < 6 ? c.zero_extended(6) : c;
  const JMap j = jmap(c6);
  if (j.k == 0 || !normalize) return invariants(j);
  return invariants(normalize_trace(j, 2.0));
}

py::dict py_classify(const py::object& obj) {
  const LieBracket c = to_bracket(obj);
  const Classification cls = classify(c);
  py::dict out;
  out["iso_class"] = iso_class_name(cls.iso);
  out["salamon"] = iso_class_salamon(cls.iso);
  out["stratum"] = stratum(c.dim() < 6 ? c.zero_extended(6) : c);
  out["near_boundary"] = cls.near_boundary;
  out["warnings"] = cls.warnings;
  out["moduli"] = moduli_dict(bracket_invariants(c, true));
  return out;
}

py::object py_degenerate(const py::object& src, const py::object& tgt, int max_exp) {
  const auto witness = degeneration_search(to_bracket(src), to_bracket(tgt), max_exp);
  if (!witness) return py::none();
  py::dict out;
  out["exponents"] = witness->exponents;
  out["permutation"] = witness->permutation;
  if (witness->shear) {
    py::dict shear;
    shear["from"] = witness->shear->from;
    shear["to"] = witness->shear->to;
    shear["sign"] = witness->shear->sign;
    out["shear"] = shear;
  } else {
    out["shear"] = py::none();
  }
  out["limit"] = bracket_terms(witness->limit);
  return out;
}

}  // namespace

PYBIND11_MODULE(_nil6, m) {
  m.doc() = "moduli, classification and curvature of metric 2-step nilpotent "
            "Lie algebras of dimension up to 6";

  py::register_exception<nil6::Error>(m, "Nil6Error");

  m.def("set_tolerance", &set_tolerance, py::arg("tol"),
        "set the global relative tolerance (default 1e-9)");

  m.def("format_salamon",
        [](const py::object& obj) { return format_salamon(to_bracket(obj)); },
        py::arg("bracket"));

  m.def("jacobi_defect",
        [](const py::object& obj) { return jacobi_defect(to_bracket(obj)); },
        py::arg("bracket"));

  m.def("is_two_step",
        [](const py::object& obj) { return is_two_step(to_bracket(obj)); },
        py::arg("bracket"));

  m.def("stratum", [](const py::object& obj) { return stratum(to_bracket(obj)); },
        py::arg("bracket"));

  m.def("classify", &py_classify, py::arg("bracket"),
        "stratum, moduli point and isomorphism class of a 2-step bracket");

  m.def("invariants",
        [](const py::object& obj, bool normalize) {
          return moduli_dict(bracket_invariants(to_bracket(obj), normalize));
        },
        py::arg("bracket"), py::arg("normalize") = true,
        "tau-canonical moduli invariants, trace-2 normalized by default");

  m.def("t_interval", &t_interval, py::arg("alpha_minus"), py::arg("beta_minus"),
        py::arg("alpha_plus"), py::arg("beta_plus"));

  m.def("canonical_coeffs",
        [](double am, double bm, double ap, double bp, double t) {
          const CanonicalForm f = canonical_coeffs(canonicalize_tau(am, bm, ap, bp, t));
          return std::make_tuple(f.a_minus, f.b_minus, f.p, f.q, f.r);
        },
        py::arg("alpha_minus"), py::arg("beta_minus"), py::arg("alpha_plus"),
        py::arg("beta_plus"), py::arg("t"));

  m.def("structure_equations",
        [](double a_minus, double b_minus, double p, double q) {
          CanonicalForm f;
          f.a_minus = a_minus;
          f.b_minus = b_minus;
          f.p = p;
          f.q = q;
          return bracket_terms(structure_equations(f));
        },
        py::arg("a_minus"), py::arg("b_minus"), py::arg("p"), py::arg("q"));

  m.def("curvature",
        [](const py::object& obj) {
          std::vector<std::tuple<int, int, int, int, double>> out;
          for (const auto& [i, j, h, k, v] : curvature(to_bracket(obj)).components(1e-12))
            out.emplace_back(i + 1, j + 1, h + 1, k + 1, v);
          return out;
        },
        py::arg("bracket"), "canonical nonzero components (1-based indices)");

  m.def("infinitesimal_rank",
        [](const py::object& obj, int samples, std::uint64_t seed) {
          const RankResult r = infinitesimal_rank(to_bracket(obj), samples, seed);
          std::vector<double> witness(r.witness.data(),
                                      r.witness.data() + r.witness.size());
          return std::make_tuple(r.rank, witness);
        },
        py::arg("bracket"), py::arg("samples") = 2000, py::arg("seed") = 0);

  m.def("degenerate", &py_degenerate, py::arg("source"), py::arg("target"),
        py::arg("max_exp") = 3,
        "diagonal-family degeneration witness, or None if the bounded search "
        "is exhausted");

  m.def("retract_invariants",
        [](const py::object& obj, double t, bool normalize) {
          const LieBracket c = to_bracket(obj);
          const LieBracket moved = retract(c.dim() < 6 ? c.zero_extended(6) : c, t);
          return moduli_dict(bracket_invariants(moved, normalize));
        },
        py::arg("bracket"), py::arg("t"), py::arg("normalize") = false,
        "invariants along the isometrizing retraction");

  m.def("sample_point",
        [](std::uint64_t seed, int stratum) {
          if (stratum < 1 || stratum > 3)
            throw nil6::Error("sample_point: stratum must be 1, 2 or 3");
          NormalSampler sampler(mix_seed(seed));
          const Mat id6 = Mat::Identity(6, 6);
          JMap j;
          j.k = stratum;
          j.z_basis = id6.rightCols(stratum);
          j.h_basis = id6.leftCols(6 - stratum);
          const int h_dim = 6 - stratum;
          for (int g = 0; g < stratum; ++g) {
            Mat a = sampler.matrix(h_dim, h_dim);
            j.generators.push_back(0.5 * (a - a.transpose()));
          }
          return moduli_dict(invariants(normalize_trace(j, 2.0)));
        },
        py::arg("seed"), py::arg("stratum") = 2,
        "one random trace-2 moduli point");
}
