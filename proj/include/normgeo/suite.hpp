#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "normgeo/norm.hpp"
#include "normgeo/rng.hpp"

namespace normgeo {

struct SuiteConfig {
  std::size_t dim = 2;
  std::size_t pairs = 10000;
  RngSeed seed{};
  double radius_lo = 0.25;
  double radius_hi = 4.0;
};

/// Per-check failure counts, in a fixed registration order.
struct SuiteOutcome {
  std::vector<std::pair<std::string, std::size_t>> failures;
  std::size_t pairs_run = 0;
  std::size_t total_failures = 0;
};

/// Samples seeded pairs and checks every bound and invariant that must hold
/// in the given space. Inner-product families additionally get the
/// euclidean identity and the Dunkl-Williams constant-2 bound.
SuiteOutcome run_invariant_suite(const NormSpec& spec, const SuiteConfig& cfg);

}  // namespace normgeo
