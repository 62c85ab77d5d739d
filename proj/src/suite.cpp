#include "normgeo/suite.hpp"

#include <algorithm>
#include <cmath>

#include "normgeo/functionals.hpp"
#include "normgeo/vec_ops.hpp"

namespace normgeo {

namespace {

// Relative closeness with an absolute floor, per the tolerance policy:
// relative where the quantities are nonzero, absolute 1e-12 otherwise.
bool close_rel(double a, double b, double rel_tol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= std::max(rel_tol * scale, 1e-12);
}

class Counters {
 public:
  void init(const std::vector<std::string>& names) {
    for (const auto& name : names) counts_.emplace_back(name, 0);
  }

  void fail(const std::string& name) {
    for (auto& [key, count] : counts_)
      if (key == name) {
        ++count;
        return;
      }
    counts_.emplace_back(name, 1);
  }

  void require(bool ok, const std::string& name) {
    if (!ok) fail(name);
  }

  std::vector<std::pair<std::string, std::size_t>> take() {
    return std::move(counts_);
  }

 private:
  std::vector<std::pair<std::string, std::size_t>> counts_;
};

}  // namespace

SuiteOutcome run_invariant_suite(const NormSpec& spec, const SuiteConfig& cfg) {
  validate_spec(spec, cfg.dim);
  if (cfg.pairs == 0)
    raise(errc::invalid_argument, "pair count must be >= 1");

  const bool inner_product = is_inner_product_family(spec);

  Counters counters;
  std::vector<std::string> names = {
      "maligranda_upper", "maligranda_lower", "dehghan_upper", "dehghan_lower",
      "angular_lower",    "angular_upper",    "massera_schaffer",
      "dunkl_williams_4", "skew_upper",       "skew_lower",
      "mtype",            "alpha_range",      "maligranda_gap_nonneg",
      "dehghan_gap_nonneg", "reverse_triangle", "alpha_symmetry",
      "beta_symmetry",    "scale_invariance_alpha", "scale_invariance_beta",
      "equal_norm_collapse"};
  if (inner_product) {
    names.push_back("euclidean_identity_defect");
    names.push_back("dunkl_williams_2");
  }
  counters.init(names);

  for (std::size_t i = 0; i < cfg.pairs; ++i) {
    Rng rng(child_seed(cfg.seed, i));
    const Vector x =
        sample_vector(spec, cfg.dim, rng, cfg.radius_lo, cfg.radius_hi);
    const Vector y =
        sample_vector(spec, cfg.dim, rng, cfg.radius_lo, cfg.radius_hi);

    const PairGeometry geo = pair_geometry(spec, x, y);

    for (const BoundReport& b : triangle_bounds(spec, x, y))
      counters.require(b.holds, b.name);
    for (const BoundReport& b : angular_bounds(spec, x, y))
      counters.require(b.holds, b.name);
    for (const BoundReport& b : skew_angular_bounds(spec, x, y))
      counters.require(b.holds, b.name);

    counters.require(geo.alpha <= 2.0 + 1e-9, "alpha_range");
    counters.require(maligranda_gap(spec, x, y) >= -1e-9,
                     "maligranda_gap_nonneg");
    counters.require(dehghan_gap(spec, x, y) >= -1e-9, "dehghan_gap_nonneg");
    counters.require(geo.abs_norm_gap <= geo.norm_diff + 1e-9 * geo.norm_diff,
                     "reverse_triangle");

    const PairGeometry swapped = pair_geometry(spec, y, x);
    counters.require(std::abs(geo.alpha - swapped.alpha) <= 1e-12,
                     "alpha_symmetry");
    counters.require(std::abs(geo.beta - swapped.beta) <= 1e-12,
                     "beta_symmetry");

    for (double c : {0.1, 3.0, 10.0}) {
      const PairGeometry scaled =
          pair_geometry(spec, vec_scale(x, c), vec_scale(y, c));
      counters.require(close_rel(scaled.alpha, geo.alpha, 1e-9),
                       "scale_invariance_alpha");
      counters.require(close_rel(scaled.beta, geo.beta, 1e-9),
                       "scale_invariance_beta");
    }

    // Rescale y to ||x||; alpha and beta must then agree.
    const PairGeometry tied =
        pair_geometry(spec, x, vec_scale(y, geo.norm_x / geo.norm_y));
    counters.require(
        std::abs(tied.alpha - tied.beta) <= 1e-9 * std::max(tied.alpha, 1.0),
        "equal_norm_collapse");

    if (inner_product) {
      const double defect = euclidean_identity_defect(spec, x, y);
      counters.require(defect <= 1e-9 * std::max(geo.beta * geo.beta, 1.0),
                       "euclidean_identity_defect");
      counters.require(dunkl_williams_2(spec, x, y).holds, "dunkl_williams_2");
    }
  }

  SuiteOutcome outcome;
  outcome.failures = counters.take();
  outcome.pairs_run = cfg.pairs;
  for (const auto& [name, count] : outcome.failures)
    outcome.total_failures += count;
  return outcome;
}

}  // namespace normgeo
