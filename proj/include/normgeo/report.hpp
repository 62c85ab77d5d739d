#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "normgeo/detector.hpp"
#include "normgeo/functionals.hpp"
#include "normgeo/suite.hpp"

namespace normgeo {

using Json = nlohmann::ordered_json;

/// Serializes a report document. Reals are written with 17 significant
/// digits so output is byte-stable and parses back to the identical double.
/// Compact by default; pretty uses two-space indentation.
std::string serialize_report(const Json& report, bool pretty = false);

Json to_json(const PairGeometry& geo);
Json to_json(const BoundReport& bound, bool advisory);
Json to_json(const DetectionResult& result);
Json to_json(const LorchResult& result);
Json to_json(const SuiteOutcome& outcome);

struct SharpnessRow {
  double eps = 0.0;
  double ratio = 0.0;
  double closed_form = 0.0;
  double abs_diff = 0.0;
};

std::vector<SharpnessRow> sharpness_table(const std::vector<double>& eps_values);
std::string sharpness_csv(const std::vector<SharpnessRow>& rows);

/// A finished command: the report document plus the process exit code.
/// Exit codes: 0 success, 2 bound failure, 3 not inner product. Usage (64)
/// and data (65) conditions surface as thrown errors instead.
struct CommandOutcome {
  Json report;
  int exit_code = 0;
};

CommandOutcome run_eval(const NormSpec& spec, const std::string& spec_string,
                        const Vector& x, const Vector& y);
CommandOutcome run_check(const NormSpec& spec, const std::string& spec_string,
                         const SuiteConfig& cfg);
CommandOutcome run_detect(const NormSpec& spec, const std::string& spec_string,
                          const SearchConfig& cfg, unsigned threads);
CommandOutcome run_sharpness(const std::vector<double>& eps_values);

}  // namespace normgeo
