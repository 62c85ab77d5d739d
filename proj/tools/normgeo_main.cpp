#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "normgeo/report.hpp"

namespace {

using normgeo::NormSpec;

// Exit codes: 0 success, 2 bound failure, 3 not inner product,
// 64 usage, 65 data.
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct ParsedNorm {
  NormSpec spec;
  std::string normalized;
};

ParsedNorm parse_norm_argument(const std::string& text) {
  ParsedNorm out{normgeo::parse_norm_spec(text), {}};
  std::string gram_path;
  if (std::holds_alternative<normgeo::GramNorm>(out.spec))
    gram_path = text.substr(text.find(':') + 1);
  out.normalized = normgeo::canonical_spec_string(out.spec, gram_path);
  return out;
}

std::size_t resolve_dim(const NormSpec& spec, std::size_t requested) {
  if (requested != 0) return requested;
  const std::size_t intrinsic = normgeo::spec_dim(spec);
  return intrinsic != 0 ? intrinsic : 2;
}

std::vector<double> geometric_grid(double start, double end,
                                   std::size_t steps) {
  if (!(start > 0.0) || !(end > 0.0) || steps == 0)
    normgeo::raise(normgeo::errc::invalid_argument,
                   "geometric grid needs positive endpoints and steps >= 1");
  std::vector<double> grid;
  grid.reserve(steps);
  if (steps == 1) {
    grid.push_back(start);
    return grid;
  }
  const double factor = std::log(end / start) / static_cast<double>(steps - 1);
  for (std::size_t k = 0; k < steps; ++k)
    grid.push_back(start * std::exp(factor * static_cast<double>(k)));
  return grid;
}

int emit(const normgeo::CommandOutcome& outcome, bool pretty) {
  std::cout << normgeo::serialize_report(outcome.report, pretty) << "\n";
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "normgeo: angular and skew-angular distance functionals, triangle "
      "inequality refinements, and numerical inner-product-space detection "
      "over finite-dimensional normed spaces"};
  app.require_subcommand(1);

  std::string norm_text;
  std::string x_text;
  std::string y_text;
  std::uint64_t seed = 0;
  std::size_t dim = 0;
  std::size_t pairs = 10000;
  std::size_t restarts = 64;
  double threshold = 1e-7;
  unsigned threads = 1;
  bool pretty = false;
  std::string eps_list;
  double eps_start = 1e-1;
  double eps_end = 1e-6;
  std::size_t eps_steps = 6;
  std::string csv_path;

  auto* eval = app.add_subcommand(
      "eval", "Evaluate distances, gaps, and all bound reports for one pair");
  eval->add_option("--norm", norm_text, "Norm spec (lp:<p>|wlp:<p>:<w,..>|gram:<path>)")
      ->required();
  eval->add_option("--x", x_text, "First vector, comma-separated")->required();
  eval->add_option("--y", y_text, "Second vector, comma-separated")->required();
  eval->add_flag("--pretty", pretty, "Indent the report");

  auto* check = app.add_subcommand(
      "check", "Run the sampled bound/invariant suite and count failures");
  check->add_option("--norm", norm_text, "Norm spec")->required();
  check->add_option("--dim", dim, "Dimension (default: from spec, else 2)")
      ->check(CLI::PositiveNumber);
  check->add_option("--pairs", pairs, "Sample pairs")->capture_default_str();
  check->add_option("--seed", seed, "RNG seed")->capture_default_str();
  check->add_flag("--pretty", pretty, "Indent the report");

  auto* detect = app.add_subcommand(
      "detect", "Decide numerically whether the norm is an inner-product norm");
  detect->add_option("--norm", norm_text, "Norm spec")->required();
  detect->add_option("--dim", dim, "Dimension (default: from spec, else 2)")
      ->check(CLI::PositiveNumber);
  detect->add_option("--restarts", restarts, "Search restarts")
      ->capture_default_str();
  detect->add_option("--seed", seed, "RNG seed")->capture_default_str();
  detect->add_option("--threshold", threshold, "Violation threshold")
      ->capture_default_str();
  detect->add_option("--threads", threads, "Worker threads (output-invariant)")
      ->capture_default_str();
  detect->add_flag("--pretty", pretty, "Indent the report");

  auto* sharp = app.add_subcommand(
      "sharpness", "Sweep the best-constant ratio of the mtype estimate");
  sharp->add_option("--eps-list", eps_list, "Comma-separated eps values");
  sharp->add_option("--eps-start", eps_start, "Geometric sweep start")
      ->capture_default_str();
  sharp->add_option("--eps-end", eps_end, "Geometric sweep end")
      ->capture_default_str();
  sharp->add_option("--steps", eps_steps, "Geometric sweep length")
      ->capture_default_str();
  sharp->add_option("--csv", csv_path, "Also write the table as CSV to <path>");
  sharp->add_flag("--pretty", pretty, "Indent the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      const ParsedNorm parsed = parse_norm_argument(norm_text);
      const normgeo::Vector x = normgeo::parse_vector(x_text);
      const normgeo::Vector y = normgeo::parse_vector(y_text);
      return emit(normgeo::run_eval(parsed.spec, parsed.normalized, x, y),
                  pretty);
    }

    if (check->parsed()) {
      const ParsedNorm parsed = parse_norm_argument(norm_text);
      normgeo::SuiteConfig cfg;
      cfg.dim = resolve_dim(parsed.spec, dim);
      cfg.pairs = pairs;
      cfg.seed = {seed};
      return emit(normgeo::run_check(parsed.spec, parsed.normalized, cfg),
                  pretty);
    }

    if (detect->parsed()) {
      const ParsedNorm parsed = parse_norm_argument(norm_text);
      normgeo::SearchConfig cfg;
      cfg.dim = resolve_dim(parsed.spec, dim);
      cfg.restarts = restarts;
      cfg.seed = {seed};
      cfg.violation_threshold = threshold;
      return emit(
          normgeo::run_detect(parsed.spec, parsed.normalized, cfg, threads),
          pretty);
    }

    // sharpness
    std::vector<double> eps_values;
    if (!eps_list.empty())
      eps_values = normgeo::parse_vector(eps_list);
    else
      eps_values = geometric_grid(eps_start, eps_end, eps_steps);
    const normgeo::CommandOutcome outcome = normgeo::run_sharpness(eps_values);
    if (!csv_path.empty()) {
      std::ofstream csv(csv_path);
      if (!csv)
        normgeo::raise(normgeo::errc::invalid_argument,
                       "cannot open CSV output file '" + csv_path + "'");
      csv << normgeo::sharpness_csv(normgeo::sharpness_table(eps_values));
    }
    return emit(outcome, pretty);
  } catch (const normgeo::error& e) {
    std::cerr << "error: " << normgeo::errc_name(e.code()) << ": " << e.what()
              << "\n";
    return e.code() == normgeo::errc::near_zero_vector ? kExitData
                                                       : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
}
