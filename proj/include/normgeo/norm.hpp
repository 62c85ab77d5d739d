#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "normgeo/errors.hpp"

namespace normgeo {

using Vector = std::vector<double>;

/// Sentinel exponent selecting the max norm.
inline constexpr double kInfiniteP = std::numeric_limits<double>::infinity();

/// Vectors with norm at or below this threshold are rejected wherever a
/// formula divides by a norm.
inline constexpr double kNearZeroNorm = 1e-150;

/// lp norm, p in [1, inf].
struct LpNorm {
  double p = 2.0;
};

/// Weighted lp norm: (sum_i w_i |x_i|^p)^(1/p). For p = inf the limit is the
/// plain max norm, since w^(1/p) -> 1.
struct WeightedLpNorm {
  double p = 2.0;
  std::vector<double> weights;
};

/// Inner-product norm sqrt(x^T G x), G symmetric positive definite
/// (row-major storage).
struct GramNorm {
  std::size_t dim = 0;
  std::vector<double> coeffs;

  double at(std::size_t i, std::size_t j) const { return coeffs[i * dim + j]; }
};

using NormSpec = std::variant<LpNorm, WeightedLpNorm, GramNorm>;

/// Checks all spec invariants against the given dimension.
/// Throws: invalid_p, non_positive_weight, non_symmetric_matrix,
/// not_positive_definite, dimension_mismatch.
void validate_spec(const NormSpec& spec, std::size_t dim);

/// Evaluates the norm. Throws dimension_mismatch when x does not fit the spec.
double norm(const NormSpec& spec, const Vector& x);

/// True for the families whose norm comes from an inner product:
/// Gram, and (weighted) lp with p == 2.
bool is_inner_product_family(const NormSpec& spec);

/// Dimension imposed by the spec itself (weights/matrix); 0 when any
/// dimension works.
std::size_t spec_dim(const NormSpec& spec);

// --- text grammar -----------------------------------------------------------
//   "lp:<p>"                     <p> decimal >= 1 or "inf"
//   "wlp:<p>:<w1,w2,...,wn>"     weights may be wrapped in parentheses
//   "gram:<path>"                path to a whitespace-separated matrix file;
//                                lines starting with '#' are comments

NormSpec parse_norm_spec(const std::string& text);
GramNorm load_gram_file(const std::string& path);

/// Comma-separated decimals, e.g. "0.75,0.75".
Vector parse_vector(const std::string& text);

/// 17 significant digits; round-trips exactly through parsing.
std::string format_real(double value);

/// Canonical grammar string. Gram specs render as "gram:<gram_path>" when a
/// path is supplied, "gram:<n>x<n>" otherwise.
std::string canonical_spec_string(const NormSpec& spec,
                                  const std::string& gram_path = {});

}  // namespace normgeo
