#include "normgeo/norm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace normgeo {

namespace {

double max_abs(const Vector& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double lp_norm_impl(const Vector& x, double p) {
  if (p == kInfiniteP) return max_abs(x);
  if (p == 1.0) {
    double s = 0.0;
    for (double v : x) s += std::abs(v);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
  }
  // Factor out the largest magnitude so |v/m|^p cannot overflow for large p.
  const double m = max_abs(x);
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double weighted_lp_impl(const Vector& x, const std::vector<double>& w,
                        double p) {
  if (p == kInfiniteP) return max_abs(x);  // w^(1/p) -> 1 in the limit
  if (p == 1.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::abs(x[i]);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * x[i] * x[i];
    return std::sqrt(s);
  }
  // Same scaled evaluation over z_i = w_i^(1/p) |x_i|.
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    m = std::max(m, std::pow(w[i], 1.0 / p) * std::abs(x[i]));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += std::pow(std::pow(w[i], 1.0 / p) * std::abs(x[i]) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double gram_impl(const Vector& x, const GramNorm& g) {
  double q = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) row += g.at(i, j) * x[j];
    q += x[i] * row;
  }
  return std::sqrt(std::max(q, 0.0));
}

void check_p(double p) {
  if (std::isnan(p) || p < 1.0)
    raise(errc::invalid_p, "lp exponent must satisfy p >= 1, got " +
                               format_real(p));
}

// Plain Cholesky; a nonpositive pivot means the matrix is not positive
// definite.
bool cholesky_spd(std::size_t n, const std::vector<double>& sym) {
  std::vector<double> lower(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double d = sym[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= lower[j * n + k] * lower[j * n + k];
    if (!(d > 0.0)) return false;
    lower[j * n + j] = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = sym[i * n + j];
      for (std::size_t k = 0; k < j; ++k)
        s -= lower[i * n + k] * lower[j * n + k];
      lower[i * n + j] = s / lower[j * n + j];
    }
  }
  return true;
}

double parse_real_token(std::string_view token, const std::string& context) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    raise(errc::invalid_argument,
          "cannot parse real number '" + std::string(token) + "' in " +
              context);
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

double parse_p_token(std::string_view token) {
  if (trim(token) == "inf") return kInfiniteP;
  return parse_real_token(trim(token), "norm spec exponent");
}

std::vector<double> parse_real_list(std::string_view text,
                                    const std::string& context) {
  std::string_view body = trim(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  std::vector<double> values;
  for (std::string_view part : split(body, ','))
    values.push_back(parse_real_token(trim(part), context));
  return values;
}

}  // namespace

void validate_spec(const NormSpec& spec, std::size_t dim) {
  if (dim == 0) raise(errc::invalid_argument, "dimension must be >= 1");

  if (const auto* lp = std::get_if<LpNorm>(&spec)) {
    check_p(lp->p);
    return;
  }

  if (const auto* wlp = std::get_if<WeightedLpNorm>(&spec)) {
    check_p(wlp->p);
    if (wlp->weights.size() != dim)
      raise(errc::dimension_mismatch,
            "expected " + std::to_string(dim) + " weights, got " +
                std::to_string(wlp->weights.size()));
    for (double w : wlp->weights)
      if (!(w > 0.0) || !std::isfinite(w))
        raise(errc::non_positive_weight,
              "weights must be strictly positive, got " + format_real(w));
    return;
  }

  const auto& gram = std::get<GramNorm>(spec);
  if (gram.dim != dim)
    raise(errc::dimension_mismatch,
          "gram matrix is " + std::to_string(gram.dim) + "x" +
              std::to_string(gram.dim) + ", expected dimension " +
              std::to_string(dim));
  if (gram.coeffs.size() != gram.dim * gram.dim)
    raise(errc::dimension_mismatch, "gram matrix storage has wrong size");
  double scale = 0.0;
  for (double c : gram.coeffs) {
    if (!std::isfinite(c))
      raise(errc::invalid_argument, "gram matrix entries must be finite");
    scale = std::max(scale, std::abs(c));
  }
  for (std::size_t i = 0; i < gram.dim; ++i)
    for (std::size_t j = i + 1; j < gram.dim; ++j)
      if (std::abs(gram.at(i, j) - gram.at(j, i)) > 1e-12 * scale)
        raise(errc::non_symmetric_matrix,
              "gram matrix is not symmetric at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
  std::vector<double> sym(gram.dim * gram.dim);
  for (std::size_t i = 0; i < gram.dim; ++i)
    for (std::size_t j = 0; j < gram.dim; ++j)
      sym[i * gram.dim + j] = 0.5 * (gram.at(i, j) + gram.at(j, i));
  if (!cholesky_spd(gram.dim, sym))
    raise(errc::not_positive_definite,
          "gram matrix is not positive definite");
}

double norm(const NormSpec& spec, const Vector& x) {
  if (x.empty()) raise(errc::dimension_mismatch, "vector must have dim >= 1");

  if (const auto* lp = std::get_if<LpNorm>(&spec))
    return lp_norm_impl(x, lp->p);

  if (const auto* wlp = std::get_if<WeightedLpNorm>(&spec)) {
    if (wlp->weights.size() != x.size())
      raise(errc::dimension_mismatch,
            "vector dim " + std::to_string(x.size()) + " does not match " +
                std::to_string(wlp->weights.size()) + " weights");
    return weighted_lp_impl(x, wlp->weights, wlp->p);
  }

  const auto& gram = std::get<GramNorm>(spec);
  if (gram.dim != x.size())
    raise(errc::dimension_mismatch,
          "vector dim " + std::to_string(x.size()) +
              " does not match gram dimension " + std::to_string(gram.dim));
  return gram_impl(x, gram);
}

bool is_inner_product_family(const NormSpec& spec) {
  if (std::holds_alternative<GramNorm>(spec)) return true;
  if (const auto* lp = std::get_if<LpNorm>(&spec)) return lp->p == 2.0;
  return std::get<WeightedLpNorm>(spec).p == 2.0;
}

std::size_t spec_dim(const NormSpec& spec) {
  if (const auto* wlp = std::get_if<WeightedLpNorm>(&spec))
    return wlp->weights.size();
  if (const auto* gram = std::get_if<GramNorm>(&spec)) return gram->dim;
  return 0;
}

NormSpec parse_norm_spec(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    raise(errc::invalid_argument,
          "norm spec '" + text + "' is missing a ':' separator");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);

  if (kind == "lp") return LpNorm{parse_p_token(rest)};

  if (kind == "wlp") {
    const std::size_t second = rest.find(':');
    if (second == std::string::npos)
      raise(errc::invalid_argument,
            "wlp spec needs the form wlp:<p>:<w1,...,wn>");
    WeightedLpNorm wlp;
    wlp.p = parse_p_token(rest.substr(0, second));
    wlp.weights = parse_real_list(rest.substr(second + 1), "wlp weights");
    if (wlp.weights.empty())
      raise(errc::invalid_argument, "wlp spec needs at least one weight");
    return wlp;
  }

  if (kind == "gram") return load_gram_file(rest);

  raise(errc::invalid_argument,
        "unknown norm family '" + kind + "' (expected lp, wlp, or gram)");
}

GramNorm load_gram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    raise(errc::invalid_argument, "cannot open gram matrix file '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<double> row;
    std::istringstream tokens{std::string(body)};
    std::string token;
    while (tokens >> token)
      row.push_back(parse_real_token(token, "gram matrix file"));
    rows.push_back(std::move(row));
  }
  if (rows.empty())
    raise(errc::invalid_argument, "gram matrix file '" + path + "' is empty");
  GramNorm gram;
  gram.dim = rows.size();
  for (const auto& row : rows) {
    if (row.size() != gram.dim)
      raise(errc::invalid_argument,
            "gram matrix file '" + path + "' is not square");
    gram.coeffs.insert(gram.coeffs.end(), row.begin(), row.end());
  }
  return gram;
}

Vector parse_vector(const std::string& text) {
  Vector coords = parse_real_list(text, "vector");
  if (coords.empty())
    raise(errc::invalid_argument, "vector must have at least one coordinate");
  for (double c : coords)
    if (!std::isfinite(c))
      raise(errc::invalid_argument, "vector coordinates must be finite");
  return coords;
}

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string canonical_spec_string(const NormSpec& spec,
                                  const std::string& gram_path) {
  if (const auto* lp = std::get_if<LpNorm>(&spec))
    return "lp:" + (lp->p == kInfiniteP ? std::string("inf")
                                        : format_real(lp->p));
  if (const auto* wlp = std::get_if<WeightedLpNorm>(&spec)) {
    std::string out = "wlp:" + (wlp->p == kInfiniteP ? std::string("inf")
                                                     : format_real(wlp->p)) +
                      ":";
    for (std::size_t i = 0; i < wlp->weights.size(); ++i) {
      if (i) out += ',';
      out += format_real(wlp->weights[i]);
    }
    return out;
  }
  const auto& gram = std::get<GramNorm>(spec);
  if (!gram_path.empty()) return "gram:" + gram_path;
  return "gram:" + std::to_string(gram.dim) + "x" + std::to_string(gram.dim);
}

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_p: return "InvalidP";
    case errc::non_positive_weight: return "NonPositiveWeight";
    case errc::non_symmetric_matrix: return "NonSymmetricMatrix";
    case errc::not_positive_definite: return "NotPositiveDefinite";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::near_zero_vector: return "NearZeroVector";
    case errc::not_inner_product_spec: return "NotInnerProductSpec";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::invalid_config: return "InvalidConfig";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace normgeo
