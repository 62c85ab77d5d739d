#include "normgeo/report.hpp"

#include <cmath>
#include <cstdio>

namespace normgeo {

namespace {

void append_escaped(std::string& out, const std::string& text) {
  out += '"';
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
          out += buffer;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void write_value(std::string& out, const Json& value, bool pretty, int depth) {
  const auto newline_indent = [&](int level) {
    out += '\n';
    out.append(2 * static_cast<std::size_t>(level), ' ');
  };

  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ',';
        first = false;
        if (pretty) newline_indent(depth + 1);
        append_escaped(out, key);
        out += pretty ? ": " : ":";
        write_value(out, item, pretty, depth + 1);
      }
      if (pretty) newline_indent(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& item : value) {
        if (!first) out += ',';
        first = false;
        if (pretty) newline_indent(depth + 1);
        write_value(out, item, pretty, depth + 1);
      }
      if (pretty) newline_indent(depth);
      out += ']';
      return;
    }
    case Json::value_t::string:
      append_escaped(out, value.get<std::string>());
      return;
    case Json::value_t::boolean:
      out += value.get<bool>() ? "true" : "false";
      return;
    case Json::value_t::number_integer:
      out += std::to_string(value.get<std::int64_t>());
      return;
    case Json::value_t::number_unsigned:
      out += std::to_string(value.get<std::uint64_t>());
      return;
    case Json::value_t::number_float: {
      const double v = value.get<double>();
      if (!std::isfinite(v)) {
        out += "null";  // reports never carry non-finite reals
        return;
      }
      out += format_real(v);
      return;
    }
    default:
      out += "null";
      return;
  }
}

Json report_envelope(const std::string& command, const std::string& spec_string,
                     Json inputs, Json results) {
  Json report;
  report["schema_version"] = "1";
  report["command"] = command;
  report["spec"] = spec_string;
  report["inputs"] = std::move(inputs);
  report["results"] = std::move(results);
  return report;
}

Json witness_json(const Vector& v) { return Json(v); }

}  // namespace

std::string serialize_report(const Json& report, bool pretty) {
  std::string out;
  write_value(out, report, pretty, 0);
  return out;
}

Json to_json(const PairGeometry& geo) {
  Json j;
  j["norm_x"] = geo.norm_x;
  j["norm_y"] = geo.norm_y;
  j["norm_sum"] = geo.norm_sum;
  j["norm_diff"] = geo.norm_diff;
  j["alpha"] = geo.alpha;
  j["beta"] = geo.beta;
  j["ratio"] = geo.ratio;
  j["abs_norm_gap"] = geo.abs_norm_gap;
  return j;
}

Json to_json(const BoundReport& bound, bool advisory) {
  Json j;
  j["name"] = bound.name;
  j["lhs"] = bound.lhs;
  j["rhs"] = bound.rhs;
  j["slack"] = bound.slack;
  j["holds"] = bound.holds;
  j["advisory"] = advisory;
  return j;
}

Json to_json(const DetectionResult& result) {
  Json j;
  j["verdict"] = verdict_name(result.verdict);
  j["best_value"] = result.best_value;
  j["restarts_used"] = static_cast<std::uint64_t>(result.restarts_used);
  j["evaluations"] = result.evaluations;
  if (result.verdict == Verdict::CounterexampleFound) {
    j["witness_x"] = witness_json(*result.witness_x);
    j["witness_y"] = witness_json(*result.witness_y);
    j["alpha_at_witness"] = result.alpha_at_witness;
    j["beta_at_witness"] = result.beta_at_witness;
  }
  return j;
}

Json to_json(const LorchResult& result) {
  Json j;
  j["pairs_tested"] = static_cast<std::uint64_t>(result.pairs_tested);
  j["gammas_per_pair"] = static_cast<std::uint64_t>(result.gammas_per_pair);
  j["violation_count"] =
      static_cast<std::uint64_t>(result.violations.size());
  Json list = Json::array();
  for (const LorchViolation& v : result.violations) {
    Json item;
    item["x"] = witness_json(v.x);
    item["y"] = witness_json(v.y);
    item["gamma"] = v.gamma;
    item["lhs"] = v.lhs;
    item["rhs"] = v.rhs;
    list.push_back(std::move(item));
  }
  j["violations"] = std::move(list);
  return j;
}

Json to_json(const SuiteOutcome& outcome) {
  Json failures;
  for (const auto& [name, count] : outcome.failures)
    failures[name] = static_cast<std::uint64_t>(count);
  Json j;
  j["pairs"] = static_cast<std::uint64_t>(outcome.pairs_run);
  j["failures"] = std::move(failures);
  j["total_failures"] = static_cast<std::uint64_t>(outcome.total_failures);
  return j;
}

std::vector<SharpnessRow> sharpness_table(const std::vector<double>& eps_values) {
  std::vector<SharpnessRow> rows;
  rows.reserve(eps_values.size());
  for (double eps : eps_values) {
    SharpnessRow row;
    row.eps = eps;
    row.ratio = sharpness_ratio(eps);
    row.closed_form = sharpness_closed_form(eps);
    row.abs_diff = std::abs(row.ratio - row.closed_form);
    rows.push_back(row);
  }
  return rows;
}

std::string sharpness_csv(const std::vector<SharpnessRow>& rows) {
  std::string out = "eps,ratio,closed_form,abs_diff\n";
  for (const SharpnessRow& row : rows) {
    out += format_real(row.eps);
    out += ',';
    out += format_real(row.ratio);
    out += ',';
    out += format_real(row.closed_form);
    out += ',';
    out += format_real(row.abs_diff);
    out += '\n';
  }
  return out;
}

CommandOutcome run_eval(const NormSpec& spec, const std::string& spec_string,
                        const Vector& x, const Vector& y) {
  if (x.size() != y.size())
    raise(errc::dimension_mismatch,
          "x has dim " + std::to_string(x.size()) + ", y has dim " +
              std::to_string(y.size()));
  validate_spec(spec, x.size());

  const PairGeometry geo = pair_geometry(spec, x, y);
  const bool advisory_dw2 = !is_inner_product_family(spec);

  Json bounds = Json::array();
  bool all_required_hold = true;
  const auto add = [&](const BoundReport& b, bool advisory) {
    if (!advisory && !b.holds) all_required_hold = false;
    bounds.push_back(to_json(b, advisory));
  };
  for (const BoundReport& b : triangle_bounds(spec, x, y)) add(b, false);
  for (const BoundReport& b : angular_bounds(spec, x, y)) add(b, false);
  for (const BoundReport& b : skew_angular_bounds(spec, x, y)) add(b, false);
  add(dunkl_williams_2(spec, x, y), advisory_dw2);

  Json gaps;
  gaps["maligranda_gap"] = maligranda_gap(spec, x, y);
  gaps["dehghan_gap"] = dehghan_gap(spec, x, y);

  Json results;
  results["pair_geometry"] = to_json(geo);
  results["gaps"] = std::move(gaps);
  results["bounds"] = std::move(bounds);
  results["all_required_hold"] = all_required_hold;

  Json inputs;
  inputs["x"] = Json(x);
  inputs["y"] = Json(y);

  return {report_envelope("eval", spec_string, std::move(inputs),
                          std::move(results)),
          all_required_hold ? 0 : 2};
}

CommandOutcome run_check(const NormSpec& spec, const std::string& spec_string,
                         const SuiteConfig& cfg) {
  const SuiteOutcome outcome = run_invariant_suite(spec, cfg);

  Json inputs;
  inputs["dim"] = static_cast<std::uint64_t>(cfg.dim);
  inputs["pairs"] = static_cast<std::uint64_t>(cfg.pairs);
  inputs["seed"] = cfg.seed.value;
  inputs["radius_range"] = Json::array({cfg.radius_lo, cfg.radius_hi});

  return {report_envelope("check", spec_string, std::move(inputs),
                          to_json(outcome)),
          outcome.total_failures == 0 ? 0 : 2};
}

CommandOutcome run_detect(const NormSpec& spec, const std::string& spec_string,
                          const SearchConfig& cfg, unsigned threads) {
  const ClassifyResult result = classify_space(spec, cfg, threads);

  Json inputs;
  inputs["dim"] = static_cast<std::uint64_t>(cfg.dim);
  inputs["restarts"] = static_cast<std::uint64_t>(cfg.restarts);
  inputs["seed"] = cfg.seed.value;
  inputs["radius_range"] = Json::array({cfg.radius_lo, cfg.radius_hi});
  inputs["step_init"] = cfg.step_init;
  inputs["step_min"] = cfg.step_min;
  inputs["violation_threshold"] = cfg.violation_threshold;
  inputs["max_iters_per_restart"] =
      static_cast<std::uint64_t>(cfg.max_iters_per_restart);

  Json results;
  results["verdict"] = space_verdict_name(result.verdict);
  results["interpretation"] =
      result.verdict == SpaceVerdict::NotInnerProduct
          ? "certified: the recorded violations replay by direct evaluation"
          : "no violation found at the given search budget";
  results["alpha_beta_search"] = to_json(result.alpha_beta);
  results["lorch"] = to_json(result.lorch);
  results["parallelogram"] = to_json(result.parallelogram);

  return {report_envelope("detect", spec_string, std::move(inputs),
                          std::move(results)),
          result.verdict == SpaceVerdict::ConsistentWithInnerProduct ? 0 : 3};
}

CommandOutcome run_sharpness(const std::vector<double>& eps_values) {
  if (eps_values.empty())
    raise(errc::invalid_argument, "sharpness sweep needs at least one eps");
  for (double eps : eps_values)
    if (!(eps > 0.0) || !std::isfinite(eps))
      raise(errc::invalid_argument,
            "sharpness sweep needs eps > 0, got " + format_real(eps));

  const std::vector<SharpnessRow> rows = sharpness_table(eps_values);
  double max_abs_diff = 0.0;
  Json list = Json::array();
  for (const SharpnessRow& row : rows) {
    max_abs_diff = std::max(max_abs_diff, row.abs_diff);
    Json item;
    item["eps"] = row.eps;
    item["ratio"] = row.ratio;
    item["closed_form"] = row.closed_form;
    item["abs_diff"] = row.abs_diff;
    list.push_back(std::move(item));
  }
  const bool all_ok = max_abs_diff <= 1e-10;

  Json inputs;
  inputs["eps"] = Json(eps_values);

  Json results;
  results["rows"] = std::move(list);
  results["max_abs_diff"] = max_abs_diff;
  results["all_within_tolerance"] = all_ok;

  return {report_envelope("sharpness", "lp:1", std::move(inputs),
                          std::move(results)),
          all_ok ? 0 : 2};
}

}  // namespace normgeo
