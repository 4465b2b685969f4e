#include "nil6/classify.hpp"
#include "nil6/config.hpp"
#include "nil6/degeneration.hpp"
#include "nil6/errors.hpp"
#include "nil6/geometry.hpp"
#include "nil6/moduli.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <iostream>

namespace {

using ojson = nlohmann::ordered_json;
using namespace nil6;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotTwoStep = 3;

class Stopwatch {
public:
  explicit Stopwatch(std::string label)
      : label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    const double ms =
        std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count() / 1000.0;
    std::cerr << label_ << ": " << ms << " ms\n";
  }

private:
  std::string label_;
  std::chrono::steady_clock::time_point start_;
};

LieBracket read_bracket(const std::string& arg) {
  if (!arg.empty() && arg.front() == '(') return parse_salamon(arg);
  return load_structure_file(arg);
}

ojson moduli_json(const ModuliPoint& m) {
  ojson out;
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

ojson form_json(const CanonicalForm& f) {
  ojson out;
  out["a_minus"] = f.a_minus;
  out["b_minus"] = f.b_minus;
  out["p"] = f.p;
  out["q"] = f.q;
  out["r"] = f.r;
  return out;
}

/// Shared by classify and geometry: stratum, trace-2 moduli, canonical
/// coefficients and the isomorphism class.
ojson base_report(const std::string& input, const LieBracket& c) {
  const LieBracket c6 = c.dim() < 6 ? c.zero_extended(6) : c;
  ojson out;
  out["input"] = input;
  out["dim"] = c.dim();

  const JMap j = jmap(c6);
  out["stratum"] = j.k;
  const ModuliPoint m = j.k == 0 ? invariants(j) : invariants(normalize_trace(j, 2.0));
  out["moduli"] = moduli_json(m);
  if (m.spectrum_minus.size() == 2)
    out["canonical_form"] = form_json(canonical_coeffs(m));
  else
    out["canonical_form"] = nullptr;

  const Classification cls = classify(c);
  out["iso_class"] = ojson{{"name", iso_class_name(cls.iso)},
                           {"salamon", iso_class_salamon(cls.iso)}};
  out["near_boundary"] = cls.near_boundary;
  out["warnings"] = cls.warnings;
  return out;
}

int cmd_classify(const std::string& input) {
  Stopwatch watch("classify");
  const LieBracket c = read_bracket(input);
  std::cout << base_report(input, c).dump() << "\n";
  return kExitOk;
}

int cmd_geometry(const std::string& input, int rank_samples, std::uint64_t seed) {
  Stopwatch watch("geometry");
  const LieBracket c = read_bracket(input);
  ojson out = base_report(input, c);

  const CurvatureTensor r = curvature(c);
  ojson curvature_list = ojson::array();
  for (const auto& [i, jj, h, k, value] : r.components(1e-12))
    curvature_list.push_back(ojson::array({i + 1, jj + 1, h + 1, k + 1, value}));
  out["curvature"] = curvature_list;

  const RankResult rank = infinitesimal_rank(c, rank_samples, seed);
  ojson witness = ojson::array();
  for (int i = 0; i < rank.witness.size(); ++i) witness.push_back(rank.witness(i));
  out["rank"] = ojson{{"value", rank.rank}, {"witness", witness}};

  std::cout << out.dump() << "\n";
  return kExitOk;
}

int cmd_sample(int count, std::uint64_t seed, int stratum_filter) {
  Stopwatch watch("sample");
  const Mat id6 = Mat::Identity(6, 6);
  for (int index = 0; index < count; ++index) {
    const int k =
        stratum_filter >= 0 ? stratum_filter : 1 + index % 3;
    ModuliPoint m;
    if (k == 0) {
      m.stratum = 0;
    } else {
      NormalSampler sampler(mix_seed(seed + static_cast<std::uint64_t>(index)));
      JMap j;
      j.k = k;
      j.z_basis = id6.rightCols(k);
      j.h_basis = id6.leftCols(6 - k);
      const int h_dim = k == 1 ? 5 : (k == 2 ? 4 : 3);
      for (int g = 0; g < k; ++g) {
        Mat a = sampler.matrix(h_dim, h_dim);
        j.generators.push_back(0.5 * (a - a.transpose()));
      }
      m = invariants(normalize_trace(j, 2.0));
    }
    std::cout << moduli_json(m).dump() << "\n";
  }
  return kExitOk;
}

int cmd_degenerate(const std::string& source, const std::string& target, int max_exp) {
  Stopwatch watch("degenerate");
  const LieBracket c = read_bracket(source);
  const LieBracket tgt = read_bracket(target);

  ojson out;
  out["source"] = source;
  out["target"] = target;
  out["max_exp"] = max_exp;

  const auto witness = degeneration_search(c, tgt, max_exp);
  if (!witness) {
    out["witness"] = nullptr;
    std::cout << out.dump() << "\n";
    return kExitError;  // inconclusive, not a theorem
  }

  ojson w;
  w["exponents"] = witness->exponents;
  w["permutation"] = witness->permutation;
  if (witness->shear)
    w["shear"] = ojson{{"from", witness->shear->from},
                       {"to", witness->shear->to},
                       {"sign", witness->shear->sign}};
  else
    w["shear"] = nullptr;
  ojson limit = ojson::array();
  for (int i = 0; i < witness->limit.dim(); ++i)
    for (int jj = i + 1; jj < witness->limit.dim(); ++jj)
      for (int k = 0; k < witness->limit.dim(); ++k) {
        const double v = witness->limit.coeff(i, jj, k);
        if (std::abs(v) > 1e-12)
          limit.push_back(ojson::array({i + 1, jj + 1, k + 1, v}));
      }
  w["limit"] = limit;
  out["witness"] = w;
  std::cout << out.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moduli, classification and curvature of metric 2-step nilpotent "
               "Lie algebras of dimension up to 6"};
  app.require_subcommand(1);

  double tol = 1e-9;
  bool json_output = true;
  app.add_option("--tol", tol, "global relative tolerance (default 1e-9)");
  app.add_flag("--json", json_output, "emit JSON (default; the only format)");

  std::string input, source, target;
  std::uint64_t seed = 0;
  int count = 1;
  int stratum_filter = -1;
  int max_exp = 3;
  int rank_samples = 2000;

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "stratum, moduli point and isomorphism class");
  classify_cmd->add_option("input", input, "Salamon notation or structure-constant file")
      ->required();

  CLI::App* sample_cmd =
      app.add_subcommand("sample", "stream random trace-2 moduli points as JSON lines");
  sample_cmd->add_option("--count", count, "number of samples")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", seed, "random seed");
  sample_cmd->add_option("--stratum", stratum_filter, "restrict to one stratum")
      ->check(CLI::Range(0, 3));

  CLI::App* degenerate_cmd = app.add_subcommand(
      "degenerate", "search for a diagonal-family degeneration witness");
  degenerate_cmd->add_option("source", source, "source bracket")->required();
  degenerate_cmd->add_option("target", target, "target bracket")->required();
  degenerate_cmd->add_option("--max-exp", max_exp, "exponent bound")
      ->check(CLI::NonNegativeNumber);

  CLI::App* geometry_cmd = app.add_subcommand(
      "geometry", "classify plus curvature components and infinitesimal rank");
  geometry_cmd->add_option("input", input, "Salamon notation or structure-constant file")
      ->required();
  geometry_cmd->add_option("--rank-samples", rank_samples, "random unit vectors")
      ->check(CLI::NonNegativeNumber);
  geometry_cmd->add_option("--seed", seed, "random seed");

  CLI11_PARSE(app, argc, argv);
  nil6::set_tolerance(tol);

  try {
    if (classify_cmd->parsed()) return cmd_classify(input);
    if (sample_cmd->parsed()) return cmd_sample(count, seed, stratum_filter);
    if (degenerate_cmd->parsed()) return cmd_degenerate(source, target, max_exp);
    if (geometry_cmd->parsed()) return cmd_geometry(input, rank_samples, seed);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotTwoStep& e) {
    std::cerr << "not a 2-step bracket: " << e.what() << "\n";
    return degenerate_cmd->parsed() ? kExitParse : kExitNotTwoStep;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return degenerate_cmd->parsed() ? kExitParse : kExitError;
  }
  return kExitError;
}
