#pragma once

#include <string>
#include <vector>

#include "normgeo/norm.hpp"

namespace normgeo {

/// Relative slack tolerance used by every bound comparison. The floor of 1 in
/// max(|lhs|,|rhs|,1) keeps the comparison meaningful when both sides are
/// tiny.
inline constexpr double kBoundTolRel = 1e-9;

/// All per-pair derived scalars.
///   alpha = || x/||x|| - y/||y|| ||   (angular distance)
///   beta  = || x/||y|| - y/||x|| ||   (skew-angular distance)
struct PairGeometry {
  double norm_x = 0.0;
  double norm_y = 0.0;
  double norm_sum = 0.0;   // ||x+y||
  double norm_diff = 0.0;  // ||x-y||
  double alpha = 0.0;
  double beta = 0.0;
  double ratio = 0.0;  // ||x|| / ||y||
  double abs_norm_gap = 0.0;
};

/// One inequality instance in <=-form: holds iff lhs <= rhs up to relative
/// slack.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool holds = false;
};

BoundReport make_bound(std::string name, double lhs, double rhs);

/// Throws near_zero_vector when either argument has norm <= 1e-150, and
/// dimension_mismatch when the pair or the spec disagree on dimension.
PairGeometry pair_geometry(const NormSpec& spec, const Vector& x,
                           const Vector& y);

/// Gap factor of the Maligranda refinement: 2 - || x/||x|| + y/||y|| ||.
double maligranda_gap(const NormSpec& spec, const Vector& x, const Vector& y);

/// Gap factor of the Dehghan refinement:
/// ||x||/||y|| + ||y||/||x|| - || x/||y|| + y/||x|| ||.
double dehghan_gap(const NormSpec& spec, const Vector& x, const Vector& y);

/// maligranda_upper, maligranda_lower, dehghan_upper, dehghan_lower.
/// Upper forms bound ||x+y|| from above by ||x||+||y|| - gap*min; lower forms
/// bound it from below with gap*max. All four hold in every normed space.
std::vector<BoundReport> triangle_bounds(const NormSpec& spec, const Vector& x,
                                         const Vector& y);

/// angular_lower, angular_upper (the two-sided angular-distance estimate),
/// massera_schaffer, dunkl_williams_4. All four hold in every normed space.
std::vector<BoundReport> angular_bounds(const NormSpec& spec, const Vector& x,
                                        const Vector& y);

/// alpha <= 2||x-y|| / (||x||+||y||). Holds in inner product spaces only;
/// a violation certifies the norm does not come from an inner product.
BoundReport dunkl_williams_2(const NormSpec& spec, const Vector& x,
                             const Vector& y);

/// skew_upper, skew_lower (two-sided skew-angular estimate) and mtype
/// (beta <= (1/||x|| + 1/||y||)*||x-y||). All hold in every normed space.
std::vector<BoundReport> skew_angular_bounds(const NormSpec& spec,
                                             const Vector& x, const Vector& y);

/// beta * ||x||*||y|| / ((||x||+||y||)*||x-y||) for the real-line pair
/// x = -1, y = eps under the absolute-value norm, computed through the
/// generic pair machinery. Approaches 1 as eps -> 0+, which shows the
/// constant in the mtype estimate cannot be improved.
double sharpness_ratio(double eps);

/// Closed form (1+eps^2)/(1+eps)^2 of the same ratio; kept separate so the
/// two routes can be compared.
double sharpness_closed_form(double eps);

/// |beta^2 - alpha^2 - (r - 1/r)^2| with r = ||x||/||y||. Identically zero in
/// inner product spaces. Throws not_inner_product_spec for lp/wlp with
/// p != 2.
double euclidean_identity_defect(const NormSpec& spec, const Vector& x,
                                 const Vector& y);

}  // namespace normgeo
