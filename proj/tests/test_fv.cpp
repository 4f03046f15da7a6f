#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "brio/errors.hpp"
#include "brio/fv.hpp"
#include "brio/kernels.hpp"
#include "brio/random_data.hpp"

using namespace brio;

TEST_CASE("grid validation") {
  FvGrid g;
  CHECK_NOTHROW(g.validate());
  g.n_cells = 8;
  CHECK_THROWS_AS(g.validate(), PreconditionError);
  g = {};
  g.cfl = 0.95;
  CHECK_THROWS_AS(g.validate(), PreconditionError);
  g = {};
  g.final_time = 0.0;
  CHECK_THROWS_AS(g.validate(), PreconditionError);
  CHECK_THROWS_AS(fv_solve_trans({0.0, -1.0}, {0.0, 1.0}, FvGrid{}), DomainError);
}

TEST_CASE("constant data stays constant") {
  FvGrid g;
  g.n_cells = 200;
  const FvField f = fv_solve_trans({0.4, 2.0}, {0.4, 2.0}, g);
  CHECK(f.time == g.final_time);
  for (int i = 0; i < g.n_cells; ++i) {
    CHECK(std::abs(f.u[i] - 0.4) <= tol_fv);
    CHECK(std::abs(f.q[i] - 2.0) <= tol_fv);
  }
}

TEST_CASE("serial and OpenMP kernels are bit-identical") {
  FvGrid g;
  g.n_cells = 777;
  const TransState l{1.0, 5.0};
  const TransState r{0.7, 7.0};
  const FvField a = fv_solve_trans(l, r, g, Execution::serial);
  const FvField b = fv_solve_trans(l, r, g, Execution::parallel);
  CHECK(a.steps == b.steps);
  CHECK(a.u == b.u);
  CHECK(a.q == b.q);
  CHECK(max_wave_speed(Execution::serial, a.u, a.q) == max_wave_speed(Execution::parallel, a.u, a.q));
}

TEST_CASE("overshoot across a first-family rarefaction is small and shrinks") {
  const TransState l{1.0, 5.0};
  const IntegralCurve c = rw_integrate(Family::one, l, 2.0);
  const TransState r{2.0, c.samples.back().q};
  // start-up error at the fast edge of the fan; decays slowly with the mesh
  double prev = 1.0;
  for (int n : {250, 1000, 4000}) {
    FvGrid g;
    g.n_cells = n;
    const FvField f = fv_solve_trans(l, r, g);
    const auto [umin, umax] = std::minmax_element(f.u.begin(), f.u.end());
    CHECK(*umin >= 1.0 - 1e-12);
    CHECK(*umax - 2.0 <= 3e-2);
    CHECK(*umax - 2.0 < prev);
    prev = *umax - 2.0;
    for (int i = 0; i < n; ++i) CHECK(f.q[i] >= 0.5 * f.u[i] * f.u[i]);
  }
}

TEST_CASE("exact cell averages of a constant fan") {
  FvGrid g;
  g.n_cells = 64;
  const WaveFan fan = build_fan({0.2, 1.0}, {0.2, 1.0});
  const FvField e = exact_cell_averages(fan, g);
  for (int i = 0; i < g.n_cells; ++i) CHECK(e.q[i] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("error against the exact fan shrinks with the mesh") {
  Rng rng(7);
  const RegionCase c = random_region_case(rng, Region::IV, false);
  const WaveFan fan = build_fan(c.left, c.right);
  FvGrid g;
  g.n_cells = 256;
  const double coarse = compare_fan_fv(fan, g).total();
  g.n_cells = 1024;
  const double fine = compare_fan_fv(fan, g).total();
  CHECK(fine < coarse / 2.0);
}
