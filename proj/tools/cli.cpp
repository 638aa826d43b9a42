#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "gramquad/errors.hpp"
#include "gramquad/gram_basis.hpp"
#include "gramquad/oracle_reference.hpp"
#include "gramquad/weights.hpp"
#include "weight_table.hpp"

namespace gramquad::cli {

namespace {

constexpr double kSumTolerance = 1e-12;
constexpr double kOrthonormalityTolerance = 1e-10;
constexpr double kMonomialTolerance = 1e-10;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int cmd_weights(std::size_t points, std::optional<int> degree, TableFormat format,
                const std::string& output, std::ostream& out) {
  const QuadratureRule rule = compute_rule(points, degree);
  const std::string text = write_table(make_document(rule, format));
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw DomainError("cannot write '" + output + "'");
    file << text;
  }
  return kExitOk;
}

int cmd_integrate(std::size_t points, const std::string& samples_path,
                  const std::string& builtin, const std::vector<double>& interval,
                  std::ostream& out) {
  const double a = interval.empty() ? -1.0 : interval[0];
  const double b = interval.empty() ? 1.0 : interval[1];
  if (!(a < b)) throw DomainError("interval requires a < b");

  const QuadratureRule rule = compute_rule(points, std::nullopt);
  std::vector<double> samples;
  if (!samples_path.empty()) {
    samples = parse_samples(read_file(samples_path));
    if (samples.size() != rule.p_points) {
      throw DomainError("sample count mismatch: expected " + std::to_string(rule.p_points) +
                        " values, found " + std::to_string(samples.size()));
    }
  } else {
    const auto& f = builtin_functions().at(builtin);
    const auto x = mapped_nodes(rule, a, b);
    samples.resize(x.size());
    std::transform(x.begin(), x.end(), samples.begin(), f);
  }
  out << format_real(integrate_on_interval(rule, a, b, samples)) << '\n';
  return kExitOk;
}

int cmd_check(std::size_t points, std::ostream& out) {
  const QuadratureRule rule = compute_rule(points, std::nullopt);
  const GramRecurrence rec = build_recurrence(points, rule.degree);

  double sum = 0.0;
  for (double w : rule.weights) sum += w;
  const double min_w = *std::min_element(rule.weights.begin(), rule.weights.end());
  const double ortho = orthonormality_residual(rec, rule.nodes);

  bool ok = true;
  auto verdict = [&ok](bool pass) {
    ok = ok && pass;
    return pass ? "ok" : "FAIL";
  };

  out << "points " << rule.p_points << '\n';
  out << "degree " << rule.degree << '\n';
  out << "weight_sum " << format_real(sum) << ' '
      << verdict(std::abs(sum - 2.0) < kSumTolerance) << '\n';
  out << "min_weight " << format_real(min_w) << ' ' << verdict(min_w > 0.0) << '\n';
  out << "orthonormality_residual " << format_real(ortho) << ' '
      << verdict(ortho < kOrthonormalityTolerance) << '\n';

  std::vector<double> power(rule.nodes.size(), 1.0);
  for (int d = 0; d <= rule.degree; ++d) {
    const double exact = (d % 2 == 0) ? 2.0 / (d + 1.0) : 0.0;
    const double residual = std::abs(integrate(rule, power) - exact);
    out << "monomial_residual d=" << d << ' ' << format_real(residual) << ' '
        << verdict(residual < kMonomialTolerance) << '\n';
    for (std::size_t i = 0; i < power.size(); ++i) power[i] *= rule.nodes[i];
  }
  out << "status " << (ok ? "ok" : "FAIL") << '\n';
  return ok ? kExitOk : kExitDomain;
}

int cmd_compare(std::size_t points, std::ostream& out) {
  if (points < 2 || points > kNewtonCotesMaxPoints) {
    throw DomainError("compare supports 2 to " + std::to_string(kNewtonCotesMaxPoints) +
                      " points, got " + std::to_string(points));
  }
  const auto nc = newton_cotes_weights(points);
  const QuadratureRule gram = compute_rule(points, std::nullopt);
  const auto [nc_min, nc_max] = std::minmax_element(nc.begin(), nc.end());
  const auto [g_min, g_max] = std::minmax_element(gram.weights.begin(), gram.weights.end());

  out << "points " << points << '\n';
  out << "rule min_weight max_weight\n";
  out << "newton-cotes " << format_real(*nc_min) << ' ' << format_real(*nc_max) << '\n';
  out << "gram " << format_real(*g_min) << ' ' << format_real(*g_max) << '\n';
  return kExitOk;
}

}  // namespace

const std::map<std::string, Integrand>& builtin_functions() {
  static const std::map<std::string, Integrand> registry = {
      {"one", [](double) { return 1.0; }},
      {"x", [](double x) { return x; }},
      {"x2", [](double x) { return x * x; }},
      {"appendix-poly",
       [](double x) { return 9.0 * x * x + 45.0 * 13.0 * x * x * x + 16.0 * x * x * x * x; }},
      {"exp", [](double x) { return std::exp(x); }},
      {"cos", [](double x) { return std::cos(x); }},
  };
  return registry;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable quadrature weights on equidistant points (Gram polynomials)", "gramquad"};
  app.require_subcommand(1);

  std::size_t points = 0;
  std::optional<int> degree;
  std::string format = "csv";
  std::string output;
  std::string samples_path;
  std::string builtin;
  std::vector<double> interval;

  auto* weights = app.add_subcommand("weights", "Write the weight table for P points");
  weights->add_option("--points,-p", points, "Number of equidistant points P")->required();
  weights->add_option("--degree,-d", degree, "Polynomial degree (default floor(sqrt(P-1)))");
  weights->add_option("--format,-f", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  weights->add_option("--output,-o", output, "Output path (default stdout)");

  std::vector<std::string> builtin_names;
  for (const auto& [name, _] : builtin_functions()) builtin_names.push_back(name);

  auto* integ = app.add_subcommand("integrate", "Integrate sampled data or a builtin function");
  integ->add_option("--points,-p", points, "Number of equidistant points P")->required();
  auto* samples_opt = integ->add_option("--samples,-s", samples_path,
                                        "File with P sample values, one per line");
  auto* builtin_opt = integ->add_option("--builtin,-b", builtin, "Builtin integrand id")
                          ->check(CLI::IsMember(builtin_names));
  samples_opt->excludes(builtin_opt);
  integ->add_option("--interval", interval, "Integration interval a b (default -1 1)")
      ->expected(2);

  auto* check = app.add_subcommand("check", "Report stability and exactness diagnostics");
  check->add_option("--points,-p", points, "Number of equidistant points P")->required();

  auto* compare = app.add_subcommand("compare", "Compare Newton-Cotes and Gram weights");
  compare->add_option("--points,-p", points, "Number of equidistant points P")->required();

  try {
    app.parse(argc, argv);
    if (integ->parsed() && samples_path.empty() && builtin.empty()) {
      throw CLI::RequiredError("integrate needs --samples or --builtin");
    }
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (weights->parsed()) {
      return cmd_weights(points, degree, format == "json" ? TableFormat::json : TableFormat::csv,
                         output, out);
    }
    if (integ->parsed()) return cmd_integrate(points, samples_path, builtin, interval, out);
    if (check->parsed()) return cmd_check(points, out);
    if (compare->parsed()) return cmd_compare(points, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ComputationError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace gramquad::cli
