#include "normgeo/detector.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "normgeo/functionals.hpp"
#include "normgeo/vec_ops.hpp"

namespace normgeo {

namespace {

constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

using PairObjective =
    std::function<double(const NormSpec&, const Vector&, const Vector&)>;

// Objectives used inside the search return -inf instead of throwing so the
// hill climb can simply reject invalid moves.

double guarded_alpha_minus_beta(const NormSpec& spec, const Vector& x,
                                const Vector& y) {
  const double nx = norm(spec, x);
  const double ny = norm(spec, y);
  if (!(nx > kNearZeroNorm) || !(ny > kNearZeroNorm)) return kMinusInf;
  const double alpha = norm(spec, scaled_diff(x, nx, y, ny));
  const double beta = norm(spec, scaled_diff(x, ny, y, nx));
  return alpha - beta;
}

double guarded_parallelogram(const NormSpec& spec, const Vector& x,
                             const Vector& y) {
  const double nx = norm(spec, x);
  const double ny = norm(spec, y);
  if (!(nx > kNearZeroNorm) || !(ny > kNearZeroNorm)) return kMinusInf;
  const double ns = norm(spec, vec_add(x, y));
  const double nd = norm(spec, vec_sub(x, y));
  const double defect =
      std::abs(ns * ns + nd * nd - 2.0 * nx * nx - 2.0 * ny * ny);
  return defect / (nx * nx + ny * ny);
}

double guarded_dunkl_williams(const NormSpec& spec, const Vector& x,
                              const Vector& y) {
  const double nx = norm(spec, x);
  const double ny = norm(spec, y);
  if (!(nx > kNearZeroNorm) || !(ny > kNearZeroNorm)) return kMinusInf;
  const double alpha = norm(spec, scaled_diff(x, nx, y, ny));
  const double diff = norm(spec, vec_sub(x, y));
  return alpha - 2.0 * diff / (nx + ny);
}

struct RestartOutcome {
  double value = kMinusInf;
  Vector x;
  Vector y;
  std::uint64_t evaluations = 0;
};

// One hill climb: perturb a single coordinate of one vector by +-step,
// accept improvements, halve the step after a sweep with no improvement.
RestartOutcome run_restart(const NormSpec& spec, const SearchConfig& cfg,
                           RngSeed seed, const PairObjective& objective) {
  Rng rng(seed);
  Vector x = sample_vector(spec, cfg.dim, rng, cfg.radius_lo, cfg.radius_hi);
  Vector y = sample_vector(spec, cfg.dim, rng, cfg.radius_lo, cfg.radius_hi);

  RestartOutcome out;
  auto evaluate = [&](const Vector& a, const Vector& b) {
    ++out.evaluations;
    return objective(spec, a, b);
  };

  out.value = evaluate(x, y);
  double step = cfg.step_init;
  const std::size_t coords = 2 * cfg.dim;

  while (step >= cfg.step_min &&
         out.evaluations < cfg.max_iters_per_restart) {
    bool improved = false;
    for (std::size_t c = 0;
         c < coords && out.evaluations < cfg.max_iters_per_restart; ++c) {
      Vector& target = c < cfg.dim ? x : y;
      const std::size_t k = c % cfg.dim;
      const double original = target[k];

      target[k] = original + step;
      double value = evaluate(x, y);
      if (value > out.value) {
        out.value = value;
        improved = true;
        continue;
      }
      target[k] = original;
      if (out.evaluations >= cfg.max_iters_per_restart) break;

      target[k] = original - step;
      value = evaluate(x, y);
      if (value > out.value) {
        out.value = value;
        improved = true;
        continue;
      }
      target[k] = original;
    }
    if (!improved) step *= 0.5;
  }

  out.x = std::move(x);
  out.y = std::move(y);
  return out;
}

// Runs body(0..count-1) on up to `threads` workers. Work is partitioned by
// index, so results keyed by index are identical for any thread count.
void parallel_for_index(std::size_t count, unsigned threads,
                        const std::function<void(std::size_t)>& body) {
  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  for (auto& t : pool) t.join();
}

DetectionResult multi_start_search(const NormSpec& spec,
                                   const SearchConfig& cfg, unsigned threads,
                                   const PairObjective& objective) {
  validate_config(cfg);
  validate_spec(spec, cfg.dim);

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  parallel_for_index(cfg.restarts, threads, [&](std::size_t r) {
    outcomes[r] = run_restart(spec, cfg, child_seed(cfg.seed, r), objective);
  });

  // Reduce in restart order; strict improvement keeps the lowest index on
  // ties, so the result does not depend on scheduling.
  std::size_t best = 0;
  DetectionResult result;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    result.evaluations += outcomes[r].evaluations;
    if (outcomes[r].value > outcomes[best].value) best = r;
  }
  result.restarts_used = cfg.restarts;

  const RestartOutcome& top = outcomes[best];
  result.best_value = top.value;
  if (top.value > cfg.violation_threshold && std::isfinite(top.value)) {
    // Canonicalize by common scaling (alpha, beta, and the normalized
    // defect are all invariant under it), then store the re-evaluated value
    // so the certificate is exactly reproducible. Should the rescaled pair
    // ever leave the valid region, the raw pair still certifies.
    const double scale =
        1.0 / std::max(norm(spec, top.x), norm(spec, top.y));
    Vector wx = vec_scale(top.x, scale);
    Vector wy = vec_scale(top.y, scale);
    double certified = objective(spec, wx, wy);
    if (!std::isfinite(certified)) {
      wx = top.x;
      wy = top.y;
      certified = top.value;
    }
    result.best_value = certified;
    if (certified > cfg.violation_threshold) {
      result.verdict = Verdict::CounterexampleFound;
      result.witness_x = std::move(wx);
      result.witness_y = std::move(wy);
      const PairGeometry geo =
          pair_geometry(spec, *result.witness_x, *result.witness_y);
      result.alpha_at_witness = geo.alpha;
      result.beta_at_witness = geo.beta;
    }
  }
  return result;
}

}  // namespace

void validate_config(const SearchConfig& cfg) {
  if (cfg.dim == 0) raise(errc::invalid_config, "dim must be >= 1");
  if (cfg.restarts == 0) raise(errc::invalid_config, "restarts must be >= 1");
  if (!(cfg.radius_lo > 0.0) || !(cfg.radius_hi >= cfg.radius_lo))
    raise(errc::invalid_config, "radius range must satisfy 0 < lo <= hi");
  if (!(cfg.step_min > 0.0) || !(cfg.step_min < cfg.step_init))
    raise(errc::invalid_config, "steps must satisfy 0 < step_min < step_init");
  if (!(cfg.violation_threshold > 0.0))
    raise(errc::invalid_config, "violation threshold must be positive");
  if (cfg.max_iters_per_restart == 0)
    raise(errc::invalid_config, "iteration budget must be >= 1");
}

double violation_objective(const NormSpec& spec, const Vector& x,
                           const Vector& y) {
  const PairGeometry geo = pair_geometry(spec, x, y);
  return geo.alpha - geo.beta;
}

double parallelogram_defect(const NormSpec& spec, const Vector& x,
                            const Vector& y) {
  if (x.size() != y.size())
    raise(errc::dimension_mismatch,
          "x has dim " + std::to_string(x.size()) + ", y has dim " +
              std::to_string(y.size()));
  const double nx = norm(spec, x);
  const double ny = norm(spec, y);
  const double ns = norm(spec, vec_add(x, y));
  const double nd = norm(spec, vec_sub(x, y));
  return std::abs(ns * ns + nd * nd - 2.0 * nx * nx - 2.0 * ny * ny);
}

DetectionResult search_counterexample(const NormSpec& spec,
                                      const SearchConfig& cfg,
                                      unsigned threads) {
  return multi_start_search(spec, cfg, threads, guarded_alpha_minus_beta);
}

DetectionResult search_parallelogram_violation(const NormSpec& spec,
                                               const SearchConfig& cfg,
                                               unsigned threads) {
  return multi_start_search(spec, cfg, threads, guarded_parallelogram);
}

DetectionResult search_dunkl_williams_violation(const NormSpec& spec,
                                                const SearchConfig& cfg,
                                                unsigned threads) {
  return multi_start_search(spec, cfg, threads, guarded_dunkl_williams);
}

std::vector<double> default_gamma_grid() {
  std::vector<double> grid(61);
  for (std::size_t k = 0; k < grid.size(); ++k)
    grid[k] = std::pow(10.0, -3.0 + 0.1 * static_cast<double>(k));
  return grid;
}

std::vector<LorchViolation> lorch_check_pair(
    const NormSpec& spec, const Vector& x, const Vector& y,
    const std::vector<double>& gamma_grid) {
  std::vector<LorchViolation> violations;
  const double lhs = norm(spec, vec_add(x, y));
  const double tol = 1e-9 * std::max(lhs, 1.0);
  for (double gamma : gamma_grid) {
    Vector combo(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      combo[i] = gamma * x[i] + y[i] / gamma;
    const double rhs = norm(spec, combo);
    if (lhs > rhs + tol) violations.push_back({x, y, gamma, lhs, rhs});
  }
  return violations;
}

LorchResult lorch_scan(const NormSpec& spec, const SearchConfig& cfg,
                       const std::vector<double>& gamma_grid,
                       unsigned threads) {
  validate_config(cfg);
  validate_spec(spec, cfg.dim);
  if (gamma_grid.empty())
    raise(errc::invalid_config, "gamma grid must be nonempty");
  for (std::size_t k = 0; k < gamma_grid.size(); ++k) {
    if (!(gamma_grid[k] > 0.0) || !std::isfinite(gamma_grid[k]))
      raise(errc::invalid_config, "gamma grid entries must be positive");
    if (k > 0 && !(gamma_grid[k] > gamma_grid[k - 1]))
      raise(errc::invalid_config, "gamma grid must be strictly ascending");
  }

  std::vector<std::vector<LorchViolation>> per_pair(cfg.restarts);
  parallel_for_index(cfg.restarts, threads, [&](std::size_t i) {
    Rng rng(child_seed(cfg.seed, i));
    const Vector x =
        sample_vector(spec, cfg.dim, rng, cfg.radius_lo, cfg.radius_hi);
    Vector y =
        sample_vector(spec, cfg.dim, rng, cfg.radius_lo, cfg.radius_hi);
    // Equal-norm preparation: rescale rather than sample conditionally.
    y = vec_scale(y, norm(spec, x) / norm(spec, y));
    per_pair[i] = lorch_check_pair(spec, x, y, gamma_grid);
  });

  LorchResult result;
  result.pairs_tested = cfg.restarts;
  result.gammas_per_pair = gamma_grid.size();
  for (auto& list : per_pair)
    result.violations.insert(result.violations.end(),
                             std::make_move_iterator(list.begin()),
                             std::make_move_iterator(list.end()));
  return result;
}

const char* verdict_name(Verdict v) {
  return v == Verdict::CounterexampleFound ? "CounterexampleFound"
                                           : "NoViolationFound";
}

const char* space_verdict_name(SpaceVerdict v) {
  return v == SpaceVerdict::NotInnerProduct ? "NotInnerProduct"
                                            : "ConsistentWithInnerProduct";
}

ClassifyResult classify_space(const NormSpec& spec, const SearchConfig& cfg,
                              unsigned threads) {
  ClassifyResult result;
  result.alpha_beta = search_counterexample(spec, cfg, threads);
  result.lorch = lorch_scan(spec, cfg, default_gamma_grid(), threads);
  result.parallelogram = search_parallelogram_violation(spec, cfg, threads);

  const bool violated =
      result.alpha_beta.verdict == Verdict::CounterexampleFound ||
      !result.lorch.violations.empty() ||
      result.parallelogram.verdict == Verdict::CounterexampleFound;
  result.verdict = violated ? SpaceVerdict::NotInnerProduct
                            : SpaceVerdict::ConsistentWithInnerProduct;
  return result;
}

}  // namespace normgeo
