#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <regex>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aspec/harness.hpp"
#include "aspec/invert.hpp"
#include "aspec/json_io.hpp"
#include "aspec/omega.hpp"
#include "aspec/psd.hpp"
#include "aspec/seminorm.hpp"
#include "aspec/spectrum.hpp"

namespace aspec::cli {

namespace {

using nlohmann::json;

struct MatrixArgs {
  std::string a_path;
  std::string x_path;
  std::optional<double> tol;

  void attach(CLI::App& sub) {
    sub.add_option("--a", a_path, "weight A (matrix JSON file)")->required();
    sub.add_option("--x", x_path, "operand X (matrix JSON file)")->required();
    sub.add_option("--tol", tol, "absolute tolerance (atol)");
  }

  ToleranceConfig tolerance() const {
    ToleranceConfig t;
    if (tol) t.atol = *tol;
    t.validate();
    return t;
  }
};

struct Loaded {
  ToleranceConfig tol;
  PsdDecomposition d;
  ComplexMatrix x;
};

Loaded load(const MatrixArgs& args) {
  const ToleranceConfig tol = args.tolerance();
  ComplexMatrix a = read_matrix_file(args.a_path);
  ComplexMatrix x = read_matrix_file(args.x_path);
  return {tol, psd_decompose(a, tol), std::move(x)};
}

json points_json(const std::vector<Complex>& pts) {
  json out = json::array();
  for (Complex z : pts) out.push_back(complex_to_json(z));
  return out;
}

std::pair<Index, Index> parse_dims(const std::string& text) {
  static const std::regex range(R"(\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?)");
  std::smatch m;
  if (!std::regex_match(text, m, range)) {
    throw Error(ErrorCode::InvalidArgument, "dims must look like 2..8 or 4, got '" + text + "'");
  }
  const Index lo = std::stol(m[1].str());
  const Index hi = m[2].matched ? std::stol(m[2].str()) : lo;
  return {lo, hi};
}

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw Error(ErrorCode::InvalidArgument, "invalid seed '" + text + "'");
  return value;
}

json element_json(const omega::OmegaElement& e) {
  const auto& v = e.value_at_zero();
  return {{"odd", e.odd().to_string()},
          {"even", e.even().to_string()},
          {"literal", e.to_string()},
          {"value_at_zero", v ? json(v->str()) : json(nullptr)}};
}

json classification_json(const omega::InverseClassification& c) {
  json out = {{"verdict", std::string(omega::to_string(c.verdict))}, {"detail", c.detail}};
  if (c.witness) out["witness"] = element_json(*c.witness);
  if (c.obstruction) {
    out["obstruction"] = c.obstruction->expr.to_string();
    out["obstruction_branch"] = std::string(omega::to_string(c.obstruction->branch));
  }
  return out;
}

json two_branch_demo() {
  const omega::OmegaElement a = omega::example_weight();
  const omega::OmegaElement x = omega::example_identity_function();
  json out = classification_json(omega::a_inverse_classify(a, x));
  out["a"] = element_json(a);
  out["x"] = element_json(x);
  out["well_supported"] = omega::is_well_supported(a);
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"A-weighted operator calculus on complex matrices", "aspec"};
  app.require_subcommand(1);

  MatrixArgs seminorm_args;
  auto* seminorm = app.add_subcommand("seminorm", "A-seminorm of X");
  seminorm_args.attach(*seminorm);

  MatrixArgs adjoint_args;
  auto* adjoint = app.add_subcommand("adjoint", "canonical A-adjoint of X");
  adjoint_args.attach(*adjoint);

  MatrixArgs invert_args;
  bool invertible_form = false;
  auto* invert = app.add_subcommand("invert", "A-inverse of X");
  invert_args.attach(*invert);
  invert->add_flag("--invertible-form", invertible_form, "return the form invertible as a matrix");

  MatrixArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "A-spectrum of X");
  spectrum_args.attach(*spectrum);

  MatrixArgs radius_args;
  std::optional<int> gelfand;
  auto* radius = app.add_subcommand("radius", "A-spectral radius of X");
  radius_args.attach(*radius);
  radius->add_option("--gelfand", gelfand, "also report ||X^n||_A^(1/n) for n = 1..N")
      ->check(CLI::PositiveNumber);

  MatrixArgs numrange_args;
  int directions = 0;
  auto* numrange = app.add_subcommand("numrange", "A-numerical range polygon");
  numrange_args.attach(*numrange);
  numrange->add_option("--directions", directions, "number of support directions")->required();

  auto* omega_cmd = app.add_subcommand("omega", "exact sequence-algebra model");
  omega_cmd->require_subcommand(1);
  std::string omega_a;
  std::string omega_x;
  auto* classify = omega_cmd->add_subcommand("classify", "classify solutions of A = A X Y");
  classify->add_option("--a", omega_a, "element literal odd=<expr>;even=<expr>")->required();
  classify->add_option("--x", omega_x, "element literal odd=<expr>;even=<expr>")->required();
  auto* demo = omega_cmd->add_subcommand("demo-e009", "the two-branch weight with X(t) = t");

  harness::SuiteConfig suite;
  std::string dims = "2..8";
  std::string seed_text = "0";
  std::optional<double> suite_tol;
  std::optional<std::string> replay;
  auto* proptest = app.add_subcommand("proptest", "run the randomized property suite");
  proptest->add_option("--trials", suite.trials, "number of trials")->check(CLI::PositiveNumber);
  proptest->add_option("--dims", dims, "dimension range lo..hi");
  proptest->add_option("--seed", seed_text, "suite seed (ASPEC_SEED overrides)");
  proptest->add_option("--tol", suite_tol, "absolute tolerance (atol)");
  proptest->add_option("--threads", suite.threads, "worker threads");
  proptest->add_option("--replay", replay, "rerun the single trial with this seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    json result;
    int status = 0;
    if (seminorm->parsed()) {
      const Loaded in = load(seminorm_args);
      const ASeminormValue v = a_seminorm(in.d, in.x, in.tol);
      result = {{"member", v.finite}, {"value", v.finite ? json(v.value) : json(nullptr)}};
    } else if (adjoint->parsed()) {
      const Loaded in = load(adjoint_args);
      result = {{"adjoint", matrix_to_json(a_adjoint(in.d, in.x, in.tol))}};
    } else if (invert->parsed()) {
      const Loaded in = load(invert_args);
      const AInverseResult r = a_invertible(in.d, in.x, in.tol);
      json inverse = nullptr;
      if (r.invertible) inverse = matrix_to_json(invertible_form ? *r.invertible_form : *r.canonical);
      result = {{"invertible", r.invertible}, {"inverse", inverse}};
    } else if (spectrum->parsed()) {
      const Loaded in = load(spectrum_args);
      const ASpectrumResult s = a_spectrum(in.d, in.x, in.tol);
      result = {{"points", points_json(s.points)}, {"radius", s.radius}, {"contains_zero", s.contains_zero}};
    } else if (radius->parsed()) {
      const Loaded in = load(radius_args);
      result = {{"radius", a_spectral_radius(in.d, in.x, in.tol)}};
      if (gelfand) result["gelfand"] = gelfand_sequence(in.d, in.x, *gelfand, in.tol);
    } else if (numrange->parsed()) {
      const Loaded in = load(numrange_args);
      const NumericalRangePolygon p = a_numerical_range(in.d, in.x, directions, in.tol);
      result = {{"directions", p.directions},
                {"vertices", points_json(p.vertices)},
                {"outer_vertices", points_json(p.outer_vertices)}};
    } else if (classify->parsed()) {
      result = classification_json(
          omega::a_inverse_classify(omega::parse_element(omega_a), omega::parse_element(omega_x)));
    } else if (demo->parsed()) {
      result = two_branch_demo();
    } else if (proptest->parsed()) {
      const auto [lo, hi] = parse_dims(dims);
      suite.dim_min = lo;
      suite.dim_max = hi;
      if (suite_tol) suite.tol.atol = *suite_tol;
      const char* env_seed = std::getenv("ASPEC_SEED");
      suite.seed = parse_seed(env_seed != nullptr ? std::string(env_seed) : seed_text);
      const harness::PropertyReport report =
          replay ? harness::replay_trial(suite, parse_seed(*replay)) : harness::run_property_suite(suite);
      result = report.to_json();
      status = report.passed() ? 0 : 1;
    }
    out << result.dump() << '\n';
    return status;
  } catch (const Error& e) {
    err << "aspec: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "aspec: internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace aspec::cli
