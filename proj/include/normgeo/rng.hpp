#pragma once

#include <cstdint>
#include <random>

#include "normgeo/norm.hpp"

namespace normgeo {

struct RngSeed {
  std::uint64_t value = 0;
};

/// Deterministic random stream. Uniform and Gaussian draws are derived from
/// raw engine output so the stream is identical on every platform (the
/// standard distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(seed.value) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform_unit() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform_unit(); }

  /// Standard Gaussian via Box-Muller; the second draw of each pair is cached.
  double gaussian();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Derives an independent child stream seed from (root, index). Same inputs
/// always give the same child, so parallel work split by index stays
/// deterministic.
RngSeed child_seed(RngSeed root, std::uint64_t index);

/// Draws a nonzero vector with norm uniform in [radius_lo, radius_hi]:
/// Gaussian coordinates, rescaled to the target radius. All-zero draws are
/// rejected (capped at 1000 attempts).
Vector sample_vector(const NormSpec& spec, std::size_t dim, Rng& rng,
                     double radius_lo, double radius_hi);

}  // namespace normgeo
