#include "normgeo/functionals.hpp"

#include <algorithm>
#include <cmath>

#include "normgeo/vec_ops.hpp"

namespace normgeo {

namespace {

struct PairNorms {
  double nx;
  double ny;
};

PairNorms checked_norms(const NormSpec& spec, const Vector& x,
                        const Vector& y) {
  if (x.size() != y.size())
    raise(errc::dimension_mismatch,
          "x has dim " + std::to_string(x.size()) + ", y has dim " +
              std::to_string(y.size()));
  const double nx = norm(spec, x);
  const double ny = norm(spec, y);
  if (!(nx > kNearZeroNorm))
    raise(errc::near_zero_vector, "||x|| = " + format_real(nx));
  if (!(ny > kNearZeroNorm))
    raise(errc::near_zero_vector, "||y|| = " + format_real(ny));
  return {nx, ny};
}

double maligranda_gap_at(const NormSpec& spec, const Vector& x,
                         const Vector& y, const PairNorms& n) {
  return 2.0 - norm(spec, scaled_sum(x, n.nx, y, n.ny));
}

double dehghan_gap_at(const NormSpec& spec, const Vector& x, const Vector& y,
                      const PairNorms& n) {
  return n.nx / n.ny + n.ny / n.nx - norm(spec, scaled_sum(x, n.ny, y, n.nx));
}

}  // namespace

BoundReport make_bound(std::string name, double lhs, double rhs) {
  BoundReport report;
  report.name = std::move(name);
  report.lhs = lhs;
  report.rhs = rhs;
  report.slack = rhs - lhs;
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  report.holds = report.slack >= -kBoundTolRel * scale;
  return report;
}

PairGeometry pair_geometry(const NormSpec& spec, const Vector& x,
                           const Vector& y) {
  const PairNorms n = checked_norms(spec, x, y);
  PairGeometry geo;
  geo.norm_x = n.nx;
  geo.norm_y = n.ny;
  geo.norm_sum = norm(spec, vec_add(x, y));
  geo.norm_diff = norm(spec, vec_sub(x, y));
  geo.alpha = norm(spec, scaled_diff(x, n.nx, y, n.ny));
  geo.beta = norm(spec, scaled_diff(x, n.ny, y, n.nx));
  geo.ratio = n.nx / n.ny;
  geo.abs_norm_gap = std::abs(n.nx - n.ny);
  return geo;
}

double maligranda_gap(const NormSpec& spec, const Vector& x, const Vector& y) {
  return maligranda_gap_at(spec, x, y, checked_norms(spec, x, y));
}

double dehghan_gap(const NormSpec& spec, const Vector& x, const Vector& y) {
  return dehghan_gap_at(spec, x, y, checked_norms(spec, x, y));
}

std::vector<BoundReport> triangle_bounds(const NormSpec& spec, const Vector& x,
                                         const Vector& y) {
  const PairNorms n = checked_norms(spec, x, y);
  const double norm_sum = norm(spec, vec_add(x, y));
  const double total = n.nx + n.ny;
  const double lo = std::min(n.nx, n.ny);
  const double hi = std::max(n.nx, n.ny);
  const double mg = maligranda_gap_at(spec, x, y, n);
  const double dg = dehghan_gap_at(spec, x, y, n);
  return {
      make_bound("maligranda_upper", norm_sum, total - mg * lo),
      make_bound("maligranda_lower", total - mg * hi, norm_sum),
      make_bound("dehghan_upper", norm_sum, total - dg * lo),
      make_bound("dehghan_lower", total - dg * hi, norm_sum),
  };
}

std::vector<BoundReport> angular_bounds(const NormSpec& spec, const Vector& x,
                                        const Vector& y) {
  const PairNorms n = checked_norms(spec, x, y);
  const double alpha = norm(spec, scaled_diff(x, n.nx, y, n.ny));
  const double diff = norm(spec, vec_sub(x, y));
  const double gap = std::abs(n.nx - n.ny);
  const double lo = std::min(n.nx, n.ny);
  const double hi = std::max(n.nx, n.ny);
  return {
      make_bound("angular_lower", (diff - gap) / lo, alpha),
      make_bound("angular_upper", alpha, (diff + gap) / hi),
      make_bound("massera_schaffer", alpha, 2.0 * diff / hi),
      make_bound("dunkl_williams_4", alpha, 4.0 * diff / (n.nx + n.ny)),
  };
}

BoundReport dunkl_williams_2(const NormSpec& spec, const Vector& x,
                             const Vector& y) {
  const PairNorms n = checked_norms(spec, x, y);
  const double alpha = norm(spec, scaled_diff(x, n.nx, y, n.ny));
  const double diff = norm(spec, vec_sub(x, y));
  return make_bound("dunkl_williams_2", alpha, 2.0 * diff / (n.nx + n.ny));
}

std::vector<BoundReport> skew_angular_bounds(const NormSpec& spec,
                                             const Vector& x,
                                             const Vector& y) {
  const PairNorms n = checked_norms(spec, x, y);
  const double beta = norm(spec, scaled_diff(x, n.ny, y, n.nx));
  const double diff = norm(spec, vec_sub(x, y));
  const double gap = std::abs(n.nx - n.ny);
  const double lo = std::min(n.nx, n.ny);
  const double hi = std::max(n.nx, n.ny);
  return {
      make_bound("skew_upper", beta, diff / hi + gap / lo),
      make_bound("skew_lower", diff / lo - gap / hi, beta),
      make_bound("mtype", beta, (1.0 / n.nx + 1.0 / n.ny) * diff),
  };
}

double sharpness_ratio(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    raise(errc::invalid_argument,
          "sharpness ratio needs eps > 0, got " + format_real(eps));
  const NormSpec line = LpNorm{1.0};
  const Vector x{-1.0};
  const Vector y{eps};
  const PairGeometry geo = pair_geometry(line, x, y);
  return geo.beta * geo.norm_x * geo.norm_y /
         ((geo.norm_x + geo.norm_y) * geo.norm_diff);
}

double sharpness_closed_form(double eps) {
  return (1.0 + eps * eps) / ((1.0 + eps) * (1.0 + eps));
}

double euclidean_identity_defect(const NormSpec& spec, const Vector& x,
                                 const Vector& y) {
  if (!is_inner_product_family(spec))
    raise(errc::not_inner_product_spec,
          "identity defect is defined for inner-product norms only");
  const PairGeometry geo = pair_geometry(spec, x, y);
  const double skew = geo.ratio - 1.0 / geo.ratio;
  return std::abs(geo.beta * geo.beta - geo.alpha * geo.alpha - skew * skew);
}

}  // namespace normgeo
