#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normgeo/norm.hpp"
#include "normgeo/rng.hpp"

namespace normgeo {

struct SearchConfig {
  std::size_t dim = 2;
  std::size_t restarts = 64;
  RngSeed seed{};
  double radius_lo = 0.25;
  double radius_hi = 4.0;
  double step_init = 0.5;
  double step_min = 1e-10;
  double violation_threshold = 1e-7;
  std::size_t max_iters_per_restart = 10000;
};

void validate_config(const SearchConfig& cfg);

enum class Verdict { CounterexampleFound, NoViolationFound };

/// Outcome of a multi-start maximization of a violation objective. A
/// CounterexampleFound verdict is a certificate: re-evaluating the objective
/// at the stored witness reproduces best_value exactly, the witness is
/// rescaled so max(||x||,||y||) = 1.
struct DetectionResult {
  Verdict verdict = Verdict::NoViolationFound;
  double best_value = 0.0;
  std::optional<Vector> witness_x;
  std::optional<Vector> witness_y;
  double alpha_at_witness = 0.0;
  double beta_at_witness = 0.0;
  std::size_t restarts_used = 0;
  std::uint64_t evaluations = 0;
};

struct LorchViolation {
  Vector x;
  Vector y;
  double gamma = 0.0;
  double lhs = 0.0;  // ||x+y||
  double rhs = 0.0;  // ||gamma x + gamma^-1 y||
};

struct LorchResult {
  std::vector<LorchViolation> violations;
  std::size_t pairs_tested = 0;
  std::size_t gammas_per_pair = 0;
};

/// alpha - beta. A positive value certifies the norm is not induced by an
/// inner product. Throws near_zero_vector.
double violation_objective(const NormSpec& spec, const Vector& x,
                           const Vector& y);

/// | ||x+y||^2 + ||x-y||^2 - 2||x||^2 - 2||y||^2 |. Zero exactly when the
/// parallelogram law holds; serves as an oracle independent of alpha/beta.
/// Zero vectors are allowed here (nothing is divided).
double parallelogram_defect(const NormSpec& spec, const Vector& x,
                            const Vector& y);

/// Multi-start pattern search maximizing alpha - beta. Deterministic for a
/// fixed config, independent of the number of worker threads.
DetectionResult search_counterexample(const NormSpec& spec,
                                      const SearchConfig& cfg,
                                      unsigned threads = 1);

/// Same engine, objective = parallelogram defect normalized by
/// ||x||^2 + ||y||^2.
DetectionResult search_parallelogram_violation(const NormSpec& spec,
                                               const SearchConfig& cfg,
                                               unsigned threads = 1);

/// Same engine, objective = alpha - 2||x-y||/(||x||+||y||), i.e. the excess
/// over the Dunkl-Williams constant-2 bound.
DetectionResult search_dunkl_williams_violation(const NormSpec& spec,
                                                const SearchConfig& cfg,
                                                unsigned threads = 1);

/// 61 log-spaced values covering [1e-3, 1e3]; includes gamma = 1.
std::vector<double> default_gamma_grid();

/// Checks ||x+y|| <= ||gamma x + gamma^-1 y|| for one equal-norm pair over
/// the whole grid and returns the violations found. Negative gamma needs no
/// scan: by norm symmetry it reduces to |gamma|.
std::vector<LorchViolation> lorch_check_pair(const NormSpec& spec,
                                             const Vector& x, const Vector& y,
                                             const std::vector<double>& gamma_grid);

/// Samples `restarts` pairs, rescales y to ||x||, and scans the grid.
LorchResult lorch_scan(const NormSpec& spec, const SearchConfig& cfg,
                       const std::vector<double>& gamma_grid,
                       unsigned threads = 1);

enum class SpaceVerdict { ConsistentWithInnerProduct, NotInnerProduct };

const char* verdict_name(Verdict v);
const char* space_verdict_name(SpaceVerdict v);

/// Aggregate of the three independent tests. NotInnerProduct as soon as any
/// of them produces a certified violation.
struct ClassifyResult {
  SpaceVerdict verdict = SpaceVerdict::ConsistentWithInnerProduct;
  DetectionResult alpha_beta;
  LorchResult lorch;
  DetectionResult parallelogram;
};

ClassifyResult classify_space(const NormSpec& spec, const SearchConfig& cfg,
                              unsigned threads = 1);

}  // namespace normgeo
