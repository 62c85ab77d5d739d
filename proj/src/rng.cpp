#include "normgeo/rng.hpp"

#include <cmath>
#include <numbers>

namespace normgeo {

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] keeps the log finite.
  const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform_unit();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

RngSeed child_seed(RngSeed root, std::uint64_t index) {
  // splitmix64 finalizer over a per-index stream offset
  std::uint64_t z = root.value + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return RngSeed{z ^ (z >> 31)};
}

Vector sample_vector(const NormSpec& spec, std::size_t dim, Rng& rng,
                     double radius_lo, double radius_hi) {
  if (dim == 0) raise(errc::invalid_argument, "dimension must be >= 1");
  if (!(radius_lo > 0.0) || !(radius_hi >= radius_lo) ||
      !std::isfinite(radius_hi))
    raise(errc::invalid_argument,
          "radius range must satisfy 0 < lo <= hi < inf");

  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vector v(dim);
    bool nonzero = false;
    for (double& c : v) {
      c = rng.gaussian();
      nonzero = nonzero || c != 0.0;
    }
    if (!nonzero) continue;
    const double n = norm(spec, v);
    if (!(n > kNearZeroNorm) || !std::isfinite(n)) continue;
    const double target = rng.uniform(radius_lo, radius_hi);
    const double scale = target / n;
    for (double& c : v) c *= scale;
    return v;
  }
  raise(errc::internal_error, "vector sampling failed 1000 times in a row");
}

}  // namespace normgeo
