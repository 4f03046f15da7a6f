#include <doctest.h>

#include <cmath>

#include "brio/delta.hpp"
#include "brio/errors.hpp"
#include "brio/random_data.hpp"
#include "brio/weak_form.hpp"

using namespace brio;
using doctest::Approx;

TEST_CASE("deficits") {
  CHECK(rh_deficit_v({1.0, 1.0}, {0.0, 0.0}, 1.0) == 1.0);
  // growth rate c[v] - [g] with right-minus-left jumps: the opposite sign
  CHECK(deficit_rate({1.0, 1.0}, {0.0, 0.0}, 1.0, Component::v) == -1.0);
  // [g]/[v] = U - 1 for a pure v-flip, so the flip carries no deficit there
  CHECK(deficit_rate({0.4, 2.0}, {0.4, -2.0}, 0.4 - 1.0, Component::v) == Approx(0.0).scale(1.0));
  CHECK(deficit_rate({0.4, 2.0}, {0.4, -2.0}, 0.4, Component::v) == Approx(-4.0));
}

TEST_CASE("generic single jump") {
  const RiemannData data{{1.0, 2.0}, {-1.0, 0.5}};
  SUBCASE("branch a, triangular flux") {
    const DeltaSolution s = generic_delta_shock(triangular_flux_pair(), data, JumpBranch::a);
    REQUIRE(s.singular.size() == 1);
    CHECK(s.singular[0].speed == 0.0);  // Burgers speed (u1+u2)/2
    CHECK(s.singular[0].component == Component::v);
    CHECK(s.singular[0].rate == Approx(0.0 * (0.5 - 2.0) - (0.5 * -2.0 - 2.0 * 0.0)));
    CHECK(s.regular.size() == 2);
  }
  SUBCASE("branch b, Brio flux") {
    const DeltaSolution s = generic_delta_shock(brio_flux_pair(), data, JumpBranch::b);
    REQUIRE(s.singular.size() == 1);
    CHECK(s.singular[0].component == Component::u);
    const double c = (brio_flux(data.right).second - brio_flux(data.left).second) / (0.5 - 2.0);
    CHECK(s.singular[0].speed == Approx(c));
  }
  CHECK_THROWS_AS(generic_delta_shock(brio_flux_pair(), {{1.0, 2.0}, {1.0, 0.0}}, JumpBranch::a),
                  DegenerateJump);
  CHECK_THROWS_AS(generic_delta_shock(brio_flux_pair(), {{1.0, 2.0}, {0.0, 2.0}}, JumpBranch::b),
                  DegenerateJump);
}

TEST_CASE("reference problem without sign change") {
  const DeltaSolution s = solve_brio({{1.0, 3.0}, {0.7, std::sqrt(14.0 - 0.49)}});
  CHECK_FALSE(s.sign_change);
  CHECK_FALSE(s.flip_speed.has_value());
  REQUIRE(s.singular.size() == 1);  // the 1-shock
  CHECK(cardinality(s) == 1);
  CHECK(s.fan->region == Region::II);
  CHECK(std::abs(s.singular[0].rate) > 1e-3);
  for (std::size_t i = 1; i < s.regular.size(); ++i) CHECK(s.regular[i].xi_lo == s.regular[i - 1].xi_hi);
  CHECK(s.regular.front().xi_lo == -INFINITY);
  CHECK(s.regular.back().xi_hi == INFINITY);
}

TEST_CASE("rarefaction pair with a sign change") {
  const DeltaSolution s = solve_brio({{0.0, 2.5}, {1.0, -2.5}});
  REQUIRE(s.fan->region == Region::I);
  CHECK(s.sign_change);
  REQUIRE(s.flip_speed.has_value());
  CHECK(*s.flip_speed == Approx(s.fan->middle.u - 1.0).epsilon(1e-15));
  CHECK(cardinality(s) == 0);  // the rh flip needs no delta
  CHECK(sample_regular(s, *s.flip_speed - 1e-9).v > 0.0);
  CHECK(sample_regular(s, *s.flip_speed + 1e-9).v < 0.0);
  for (double b : breakpoints(s)) CHECK(std::isfinite(b));

  const DeltaSolution paper = solve_brio({{0.0, 2.5}, {1.0, -2.5}}, {FlipSpeed::paper, {}});
  CHECK(*paper.flip_speed == Approx(s.fan->middle.u).epsilon(1e-15));
  CHECK_THROWS_AS(with_flip_speed(s, 5.0), OrderingViolation);
  const DeltaSolution moved = with_flip_speed(s, -1.0);
  CHECK(*moved.flip_speed == -1.0);
  CHECK_THROWS_AS(with_flip_speed(solve_brio({{1.0, 3.0}, {0.7, 3.0}}), 0.0), PreconditionError);
}

TEST_CASE("deficit identity on every delta of random region cases") {
  Rng rng(17);
  for (Region r : {Region::II, Region::III, Region::IV}) {
    for (int k = 0; k < 6; ++k) {
      const RegionCase c = random_region_case(rng, r, k % 2 == 0);
      const DeltaSolution s = solve_brio(c.data);
      for (const DeltaSingularity& d : s.singular) {
        const auto before = sample_regular(s, d.speed - 1e-9);
        const auto after = sample_regular(s, d.speed + 1e-9);
        CHECK(std::abs(d.rate - deficit_rate(before, after, d.speed, Component::v)) <= 1e-12 * (1.0 + std::abs(d.rate)));
        // the u-equation is exact across every jump
        CHECK(std::abs(deficit_rate(before, after, d.speed, Component::u)) <= 1e-9 * (1.0 + std::abs(d.speed)));
      }
    }
  }
}

TEST_CASE("sampling") {
  const DeltaSolution s = solve_brio({{1.0, 3.0}, {0.7, 3.5}});
  CHECK_THROWS_AS(sample_brio(s, 0.0, 0.0), PreconditionError);
  const BrioSample early = sample_brio(s, -0.5, 1e-12);
  CHECK(early.regular.u == 1.0);
  for (const SampledSingularity& d : early.singular) CHECK(std::abs(d.strength) < 1e-10);
  const BrioSample late = sample_brio(s, 100.0, 1.0);
  CHECK(late.regular.u == 0.7);
  CHECK(late.regular.v == 3.5);
}

TEST_CASE("non-uniqueness fixture") {
  const DeltaSolution s = nonuniqueness_example(1.5, -1.0, 2.0);
  CHECK(cardinality(s) == 2);
  CHECK(cardinality(solve_brio({{0.0, 0.0}, {0.0, 0.0}})) == 0);
  CHECK(nonuniqueness_example(0.0, -1.0, 2.0).singular.empty());
  for (const TestFunction& phi : standard_battery(s)) CHECK(weak_residual(s, phi).max_abs() <= 1e-10);
}

TEST_CASE("non-finite data") {
  CHECK_THROWS_AS(solve_brio({{NAN, 0.0}, {0.0, 0.0}}), DomainError);
  CHECK_THROWS_AS(generic_delta_shock(brio_flux_pair(), {{INFINITY, 0.0}, {0.0, 0.0}}, JumpBranch::a), DomainError);
}
