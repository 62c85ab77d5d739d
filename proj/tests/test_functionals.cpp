#include <cmath>
#include <functional>
#include <numbers>

#include <doctest.h>

#include "normgeo/functionals.hpp"
#include "normgeo/rng.hpp"
#include "normgeo/suite.hpp"
#include "normgeo/vec_ops.hpp"
#include "oracles.hpp"

using namespace normgeo;

namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected a normgeo::error");
  return errc::internal_error;
}

const BoundReport& find_bound(const std::vector<BoundReport>& bounds,
                              const std::string& name) {
  for (const BoundReport& b : bounds)
    if (b.name == name) return b;
  REQUIRE_MESSAGE(false, "missing bound ", name);
  return bounds.front();
}

}  // namespace

TEST_CASE("pair_geometry on the real line reproduces the sharpness pair") {
  const NormSpec line = LpNorm{1.0};
  const PairGeometry geo = pair_geometry(line, {-1.0}, {0.25});
  CHECK(geo.beta == 4.25);  // eps + 1/eps at eps = 0.25
  CHECK(geo.alpha == 2.0);
  CHECK(geo.norm_diff == 1.25);
  CHECK(geo.ratio == 4.0);
}

TEST_CASE("pair_geometry euclidean example") {
  const NormSpec euclid = LpNorm{2.0};
  const PairGeometry geo = pair_geometry(euclid, {1.0, 0.0}, {0.0, 2.0});
  CHECK(geo.alpha == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  // beta = ||(1/2, 0) - (0, 2)||_2
  CHECK(geo.beta == doctest::Approx(std::sqrt(4.25)).epsilon(1e-15));
  CHECK(geo.ratio == 0.5);
  CHECK(geo.norm_sum == doctest::Approx(std::sqrt(5.0)));
  CHECK(geo.abs_norm_gap == 1.0);
}

TEST_CASE("pair_geometry of identical vectors collapses to zero") {
  for (const NormSpec& spec :
       {NormSpec{LpNorm{1.0}}, NormSpec{LpNorm{kInfiniteP}},
        NormSpec{GramNorm{2, {2, 0, 0, 3}}}}) {
    const PairGeometry geo = pair_geometry(spec, {0.3, -0.7}, {0.3, -0.7});
    CHECK(geo.alpha <= 1e-12);
    CHECK(geo.beta <= 1e-12);
  }
}

TEST_CASE("pair_geometry rejects near-zero vectors and dim mismatches") {
  const NormSpec spec = LpNorm{2.0};
  CHECK(code_of([&] { pair_geometry(spec, {0.0, 0.0}, {1.0, 0.0}); }) ==
        errc::near_zero_vector);
  CHECK(code_of([&] { pair_geometry(spec, {1e-200, 0.0}, {1.0, 0.0}); }) ==
        errc::near_zero_vector);
  CHECK(code_of([&] { pair_geometry(spec, {1.0}, {1.0, 0.0}); }) ==
        errc::dimension_mismatch);
}

TEST_CASE("gap fixtures: real line pair") {
  const NormSpec line = LpNorm{1.0};
  const Vector x{1.0};
  const Vector y{-2.0};
  CHECK(maligranda_gap(line, x, y) == 2.0);
  CHECK(dehghan_gap(line, x, y) == 1.0);
}

TEST_CASE("gap fixtures: taxicab plane pair") {
  const NormSpec taxi = LpNorm{1.0};
  const Vector x{0.75, 0.75};
  const Vector y{-1.0, 0.0};
  CHECK(maligranda_gap(taxi, x, y) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dehghan_gap(taxi, x, y) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("neither refinement dominates the other") {
  const NormSpec line = LpNorm{1.0};
  CHECK(maligranda_gap(line, {1.0}, {-2.0}) >
        dehghan_gap(line, {1.0}, {-2.0}));
  const NormSpec taxi = LpNorm{1.0};
  CHECK(maligranda_gap(taxi, {0.75, 0.75}, {-1.0, 0.0}) <
        dehghan_gap(taxi, {0.75, 0.75}, {-1.0, 0.0}));
}

TEST_CASE("gaps vanish for identical vectors") {
  const NormSpec spec = LpNorm{3.0};
  const Vector x{0.4, -1.1};
  CHECK(std::abs(maligranda_gap(spec, x, x)) <= 1e-12);
  CHECK(std::abs(dehghan_gap(spec, x, x)) <= 1e-12);
}

TEST_CASE("triangle bounds on the fixture pairs") {
  const NormSpec taxi = LpNorm{1.0};
  const auto plane = triangle_bounds(taxi, {0.75, 0.75}, {-1.0, 0.0});
  const BoundReport& upper = find_bound(plane, "dehghan_upper");
  CHECK(upper.lhs == 1.0);  // ||(-1/4, 3/4)||_1
  CHECK(upper.rhs == doctest::Approx(7.0 / 6.0).epsilon(1e-13));
  CHECK(upper.holds);

  const auto line = triangle_bounds(taxi, {1.0}, {-2.0});
  const BoundReport& mal = find_bound(line, "maligranda_upper");
  CHECK(mal.lhs == 1.0);
  CHECK(mal.rhs == 1.0);  // 3 - 2*1
  CHECK(mal.slack == 0.0);
  CHECK(mal.holds);
}

TEST_CASE("triangle bounds collapse with zero slack for x = y") {
  const NormSpec spec = GramNorm{2, {1, 0, 0, 4}};
  for (const BoundReport& b : triangle_bounds(spec, {1.0, 0.5}, {1.0, 0.5})) {
    CHECK(std::abs(b.slack) <= 1e-12);
    CHECK(b.holds);
  }
}

TEST_CASE("min/max tie: upper and lower forms agree at equal norms") {
  const NormSpec spec = LpNorm{kInfiniteP};
  const Vector x{1.0, 0.25};
  const Vector y{-1.0, 0.75};  // both max-norm 1
  REQUIRE(norm(spec, x) == norm(spec, y));
  const auto bounds = triangle_bounds(spec, x, y);
  CHECK(find_bound(bounds, "maligranda_upper").rhs ==
        find_bound(bounds, "maligranda_lower").lhs);
  CHECK(find_bound(bounds, "dehghan_upper").rhs ==
        find_bound(bounds, "dehghan_lower").lhs);
}

TEST_CASE("angular bounds on worked pairs") {
  const NormSpec euclid = LpNorm{2.0};

  const auto perp = angular_bounds(euclid, {1.0, 0.0}, {0.0, 1.0});
  const BoundReport& ms = find_bound(perp, "massera_schaffer");
  CHECK(ms.lhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(ms.rhs == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(ms.slack == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(ms.holds);

  const auto colinear = angular_bounds(euclid, {1.0, 0.0}, {3.0, 0.0});
  const BoundReport& upper = find_bound(colinear, "angular_upper");
  CHECK(upper.lhs == 0.0);
  CHECK(upper.rhs == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(upper.holds);

  for (const BoundReport& b : angular_bounds(euclid, {0.6, 0.8}, {0.6, 0.8}))
    CHECK(b.holds);
}

TEST_CASE("angular upper estimate refines massera-schaffer") {
  // (||x-y|| + | ||x||-||y|| |)/max <= 2||x-y||/max, since the norm gap
  // never exceeds ||x-y||.
  for (const NormSpec& spec :
       {NormSpec{LpNorm{1.0}}, NormSpec{LpNorm{2.5}},
        NormSpec{LpNorm{kInfiniteP}}}) {
    Rng rng(RngSeed{29});
    for (int i = 0; i < 100; ++i) {
      const Vector x = sample_vector(spec, 3, rng, 0.25, 4.0);
      const Vector y = sample_vector(spec, 3, rng, 0.25, 4.0);
      const auto bounds = angular_bounds(spec, x, y);
      CHECK(find_bound(bounds, "angular_upper").rhs <=
            find_bound(bounds, "massera_schaffer").rhs * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("antipodal pairs stay finite and within bounds") {
  for (const NormSpec& spec :
       {NormSpec{LpNorm{1.0}}, NormSpec{LpNorm{2.0}},
        NormSpec{LpNorm{kInfiniteP}}}) {
    const Vector x{0.8, -0.6};
    const Vector y{-0.8, 0.6};
    const PairGeometry geo = pair_geometry(spec, x, y);
    CHECK(geo.norm_sum == 0.0);
    CHECK(std::isfinite(geo.alpha));
    CHECK(geo.alpha == doctest::Approx(2.0));
    CHECK(maligranda_gap(spec, x, y) == doctest::Approx(2.0));
    for (const BoundReport& b : triangle_bounds(spec, x, y)) CHECK(b.holds);
    for (const BoundReport& b : angular_bounds(spec, x, y)) CHECK(b.holds);
    for (const BoundReport& b : skew_angular_bounds(spec, x, y))
      CHECK(b.holds);
  }
}

TEST_CASE("dunkl williams constant 2 holds on inner-product specs") {
  const NormSpec gram = GramNorm{2, {1, 0, 0, 1}};
  Rng rng(RngSeed{11});
  for (int i = 0; i < 200; ++i) {
    const Vector x = sample_vector(gram, 2, rng, 0.25, 4.0);
    const Vector y = sample_vector(gram, 2, rng, 0.25, 4.0);
    CHECK(dunkl_williams_2(gram, x, y).holds);
  }
  const BoundReport same = dunkl_williams_2(gram, {1.0, 2.0}, {1.0, 2.0});
  CHECK(same.lhs == 0.0);
  CHECK(same.rhs == 0.0);
  CHECK(same.slack == 0.0);
  CHECK(same.holds);
}

TEST_CASE("dunkl williams constant 2 fails somewhere in the taxicab plane") {
  const NormSpec taxi = LpNorm{1.0};
  const double best = testutil::grid_max_pair_value(
      taxi, testutil::oracle_dw2_excess, 180, {1.5, 2.0, 4.0});
  CHECK(best > 1e-7);

  // The oracle found an excess; the report must flag the same violation.
  // At equal norms the bound is an equality, so scan an unequal ratio.
  bool violated = false;
  for (int i = 0; i < 180 && !violated; ++i)
    for (int j = 0; j < 180 && !violated; ++j) {
      const double a = 2.0 * std::numbers::pi * i / 180;
      const double b = 2.0 * std::numbers::pi * j / 180;
      Vector x{std::cos(a), std::sin(a)};
      Vector y{std::cos(b), std::sin(b)};
      x = vec_scale(x, 1.5 / norm(taxi, x));
      y = vec_scale(y, 1.0 / norm(taxi, y));
      if (testutil::oracle_dw2_excess(taxi, x, y) > 1e-4)
        violated = !dunkl_williams_2(taxi, x, y).holds;
    }
  CHECK(violated);
}

TEST_CASE("skew angular bounds") {
  const NormSpec line = LpNorm{1.0};
  const auto sharp = skew_angular_bounds(line, {-1.0}, {0.25});
  const BoundReport& mtype = find_bound(sharp, "mtype");
  CHECK(mtype.lhs == 4.25);
  CHECK(mtype.rhs == 6.25);  // (1 + 4) * 1.25
  CHECK(mtype.holds);

  const NormSpec spec = LpNorm{3.0};
  for (const BoundReport& b :
       skew_angular_bounds(spec, {0.4, 0.2}, {0.4, 0.2})) {
    CHECK(b.lhs == 0.0);
    CHECK(b.rhs == 0.0);
    CHECK(b.holds);
  }
}

TEST_CASE("skew upper is tight at equal norms") {
  const NormSpec spec = LpNorm{1.5};
  Rng rng(RngSeed{3});
  for (int i = 0; i < 50; ++i) {
    const Vector x = sample_vector(spec, 2, rng, 0.25, 4.0);
    Vector y = sample_vector(spec, 2, rng, 0.25, 4.0);
    y = vec_scale(y, norm(spec, x) / norm(spec, y));
    const BoundReport upper =
        find_bound(skew_angular_bounds(spec, x, y), "skew_upper");
    CHECK(std::abs(upper.slack) <= 1e-12);
  }
}

TEST_CASE("sharpness ratio routes through the pair machinery") {
  CHECK(sharpness_ratio(1.0) == 0.5);

  const double eps = 1e-4;
  const double oracle = testutil::sharpness_oracle(eps);
  CHECK(std::abs(sharpness_ratio(eps) - oracle) <= 1e-12 * oracle);

  double previous_gap = 2.0;  // 1 - ratio decreases as eps shrinks
  for (double e : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    const double ratio = sharpness_ratio(e);
    CHECK(std::abs(ratio - testutil::sharpness_oracle(e)) <= 1e-10);
    const double gap = 1.0 - ratio;
    CHECK(gap > 0.0);
    CHECK(gap <= 2.0 * e);
    CHECK(gap < previous_gap);
    previous_gap = gap;
  }

  CHECK(code_of([] { sharpness_ratio(0.0); }) == errc::invalid_argument);
  CHECK(code_of([] { sharpness_ratio(-1.0); }) == errc::invalid_argument);
}

TEST_CASE("euclidean identity defect") {
  const NormSpec identity = GramNorm{2, {1, 0, 0, 1}};

  // beta^2 - alpha^2 = 4.25 - 2 = 2.25 = (0.5 - 2)^2 for (1,0) vs (0,2).
  const PairGeometry geo = pair_geometry(identity, {1.0, 0.0}, {0.0, 2.0});
  const double skew = geo.ratio - 1.0 / geo.ratio;
  CHECK(geo.beta * geo.beta - geo.alpha * geo.alpha ==
        doctest::Approx(2.25).epsilon(1e-15));
  CHECK(skew * skew == doctest::Approx(2.25).epsilon(1e-15));
  CHECK(euclidean_identity_defect(identity, {1.0, 0.0}, {0.0, 2.0}) <=
        1e-14);

  // Equal norms: r = 1, so the defect reduces to |beta^2 - alpha^2|.
  CHECK(euclidean_identity_defect(identity, {3.0, 4.0}, {-4.0, 3.0}) <=
        1e-12);

  const NormSpec stretched = testutil::diagonal_gram({1.0, 4.0});
  Rng rng(RngSeed{17});
  for (int i = 0; i < 1000; ++i) {
    const Vector x = sample_vector(stretched, 2, rng, 0.25, 4.0);
    const Vector y = sample_vector(stretched, 2, rng, 0.25, 4.0);
    CHECK(euclidean_identity_defect(stretched, x, y) <= 1e-9);
  }

  CHECK(code_of([] {
          euclidean_identity_defect(LpNorm{3.0}, {1.0}, {2.0});
        }) == errc::not_inner_product_spec);
  CHECK_NOTHROW(euclidean_identity_defect(LpNorm{2.0}, {1.0, 0.0}, {0.0, 1.0}));
  CHECK_NOTHROW(euclidean_identity_defect(WeightedLpNorm{2.0, {1.0, 5.0}},
                                          {1.0, 0.0}, {0.0, 1.0}));
}

TEST_CASE("bound reports use relative slack with floor one") {
  CHECK(make_bound("t", 1.0, 1.0 - 5e-10).holds);
  CHECK_FALSE(make_bound("t", 1.0, 1.0 - 5e-9).holds);
  CHECK(make_bound("t", 1e-12, -1e-12).holds);  // floor of 1 absorbs it
  CHECK(make_bound("t", 2e9, 2e9 * (1.0 - 5e-10)).holds);
  CHECK_FALSE(make_bound("t", 2e9, 2e9 * (1.0 - 5e-9)).holds);
}

TEST_CASE("invariant suite is clean for every family") {
  std::vector<std::pair<NormSpec, std::size_t>> cases = {
      {LpNorm{1.0}, 2},
      {LpNorm{1.5}, 2},
      {LpNorm{2.0}, 2},
      {LpNorm{3.0}, 2},
      {LpNorm{kInfiniteP}, 2},
      {WeightedLpNorm{2.0, {1.0, 5.0}}, 2},
      {testutil::random_spd(3, RngSeed{1234}), 3},
  };
  for (const auto& [spec, dim] : cases) {
    SuiteConfig cfg;
    cfg.dim = dim;
    cfg.pairs = 10000;
    cfg.seed = RngSeed{2024};
    const SuiteOutcome outcome = run_invariant_suite(spec, cfg);
    CHECK(outcome.pairs_run == 10000);
    for (const auto& [name, count] : outcome.failures)
      CHECK_MESSAGE(count == 0, name, " failed ", count, " times for ",
                    canonical_spec_string(spec));
    CHECK(outcome.total_failures == 0);
  }
}

TEST_CASE("suite adds inner-product checks only for inner-product specs") {
  SuiteConfig cfg;
  cfg.dim = 2;
  cfg.pairs = 10;
  const auto has = [](const SuiteOutcome& o, const std::string& name) {
    for (const auto& [key, count] : o.failures)
      if (key == name) return true;
    return false;
  };
  const SuiteOutcome ip = run_invariant_suite(LpNorm{2.0}, cfg);
  CHECK(has(ip, "euclidean_identity_defect"));
  CHECK(has(ip, "dunkl_williams_2"));
  const SuiteOutcome lp = run_invariant_suite(LpNorm{1.0}, cfg);
  CHECK_FALSE(has(lp, "euclidean_identity_defect"));
  CHECK_FALSE(has(lp, "dunkl_williams_2"));
}
