#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "brio/errors.hpp"
#include "brio/random_data.hpp"
#include "brio/riemann.hpp"

using namespace brio;
using doctest::Approx;

namespace {

// tests/oracles/oracles.py
constexpr double kMiddleU = 0.54067391492437806352;
constexpr double kMiddleQ = 6.400775468934071624;
constexpr double kSw1Speed = -3.0496318725365935972;
constexpr double kRw2Slow = 3.6126793258369216897;
constexpr double kRw2Fast = 3.909447398198281501;

const TransState kLeft{1.0, 5.0};
const TransState kRight{0.7, 7.0};

}  // namespace

TEST_CASE("middle state of the reference problem") {
  const TransState m = solve_middle(kLeft, kRight);
  CHECK(std::abs(m.u - kMiddleU) <= 1e-9);
  CHECK(std::abs(m.q - kMiddleQ) <= 1e-9);
  CHECK(classify(kLeft, kRight, m) == Region::II);

  const WaveFan fan = build_fan(kLeft, kRight);
  REQUIRE(fan.waves.size() == 2);
  CHECK(fan.region == Region::II);
  CHECK(fan.waves[0].kind == WaveKind::shock);
  CHECK(fan.waves[1].kind == WaveKind::rarefaction);
  CHECK(std::abs(fan.waves[0].speed_lo - kSw1Speed) <= 1e-9);
  CHECK(std::abs(fan.waves[1].speed_lo - kRw2Slow) <= 1e-9);
  CHECK(std::abs(fan.waves[1].speed_hi - kRw2Fast) <= 1e-12);
  CHECK(lax_check(fan.waves[0]));
}

TEST_CASE("brute-force tabulation agrees with the root finder") {
  // sign change of F1 - B2 on a 1e-4 grid, then linear interpolation
  const Forward1Curve f(kLeft);
  const Backward2Curve b(kRight);
  double prev_u = 0.0;
  double prev = f(prev_u) - b(prev_u);
  double root = std::numeric_limits<double>::quiet_NaN();
  for (int i = 1; i <= 20000; ++i) {
    const double u = i * 1e-4;
    const double d = f(u) - b(u);
    if ((prev > 0) != (d > 0)) {
      root = prev_u - prev * (u - prev_u) / (d - prev);
      break;
    }
    prev_u = u;
    prev = d;
  }
  CHECK(std::abs(root - solve_middle(kLeft, kRight).u) <= 1e-6);
}

TEST_CASE("the bracket scan window does not change the root") {
  for (double shift : {-0.31, 0.37, 0.9}) {
    RiemannOptions o;
    o.scan_shift = shift;
    CHECK(std::abs(solve_middle(kLeft, kRight, o).u - kMiddleU) <= 1e-9);
  }
}

TEST_CASE("domain and degenerate inputs") {
  CHECK_THROWS_AS(solve_middle({0.0, -1.0}, kRight), DomainError);
  CHECK_THROWS_AS(build_fan(kLeft, {2.0, 1.0}), DomainError);
  const WaveFan same = build_fan(kLeft, kLeft);
  CHECK(same.waves.empty());
  CHECK(same.region == Region::degenerate);
  CHECK(sample_fan(same, 0.3).q == 5.0);
}

TEST_CASE("single-wave problems") {
  SUBCASE("lone first-family shock") {
    const TransState right{0.7, sw1_q(kLeft, 0.7)};
    const WaveFan fan = build_fan(kLeft, right);
    REQUIRE(fan.waves.size() == 1);
    CHECK(fan.waves[0].family == Family::one);
    CHECK(fan.waves[0].kind == WaveKind::shock);
    CHECK(fan.region == Region::degenerate);
  }
  SUBCASE("lone second-family rarefaction") {
    const IntegralCurve c = rw_integrate(Family::two, kLeft, 1.5);
    const WaveFan fan = build_fan(kLeft, {1.5, c.samples.back().q});
    REQUIRE(fan.waves.size() == 1);
    CHECK(fan.waves[0].family == Family::two);
    CHECK(fan.waves[0].kind == WaveKind::rarefaction);
  }
}

TEST_CASE("Lax check rejects a reversed shock") {
  Wave w;
  w.family = Family::one;
  w.left = {0.7, sw1_q(kLeft, 0.7)};
  w.right = kLeft;  // expansive jump
  w.speed_lo = w.speed_hi = trans_shock_speed(w.left, w.right);
  CHECK_FALSE(lax_check(w));
  CHECK(lax_margin(w) < 0.0);
}

TEST_CASE("sampling the fan") {
  const WaveFan fan = build_fan(kLeft, kRight);
  CHECK(sample_fan(fan, -10.0).q == kLeft.q);
  CHECK(sample_fan(fan, 10.0).q == kRight.q);
  CHECK(sample_fan(fan, 0.0).u == Approx(kMiddleU).epsilon(1e-9));
  const Wave& rw = fan.waves[1];
  double prev_u = -1e300;
  for (int i = 0; i <= 50; ++i) {
    const double xi = rw.speed_lo + (rw.speed_hi - rw.speed_lo) * i / 50.0;
    const TransState s = sample_fan(fan, xi);
    CHECK(lambda_plus(s) == Approx(xi).epsilon(1e-10));
    CHECK(s.u >= prev_u);
    prev_u = s.u;
  }
}

TEST_CASE("forward-built cases land in their region with the prescribed waves") {
  Rng rng(2024);
  for (Region r : {Region::I, Region::II, Region::III, Region::IV}) {
    for (int k = 0; k < 10; ++k) {
      const RegionCase c = random_region_case(rng, r, k % 2 == 1);
      const WaveFan fan = build_fan(c.left, c.right);
      CHECK(fan.region == r);
      CHECK(std::abs(fan.middle.u - c.middle.u) <= 1e-8 * (1.0 + std::abs(c.middle.u)));
      CHECK(std::abs(fan.middle.q - c.middle.q) <= 1e-8 * (1.0 + std::abs(c.middle.q)));
      if (r == Region::II || r == Region::IV) CHECK(std::abs(fan.waves[0].speed_lo - c.c1) <= 1e-9 * (1.0 + std::abs(c.c1)));
      if (r == Region::III || r == Region::IV) CHECK(std::abs(fan.waves[1].speed_lo - c.c2) <= 1e-9 * (1.0 + std::abs(c.c2)));
      for (const Wave& w : fan.waves) CHECK(lax_check(w));
    }
  }
}

TEST_CASE("random pairs resolve into a consistent fan") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const auto [l, r] = random_state_pair(rng, 0.01);
    const WaveFan fan = build_fan(l, r);
    CHECK(above_critical(fan.middle));
    CHECK(std::abs(forward_1_curve(l, fan.middle.u) - backward_2_curve(r, fan.middle.u)) <=
          1e-9 * (1.0 + fan.middle.q));
    for (std::size_t k = 1; k < fan.waves.size(); ++k) {
      CHECK(fan.waves[k].speed_lo >= fan.waves[k - 1].speed_hi - 1e-12);
    }
  }
}
