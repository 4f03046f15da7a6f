#include <doctest.h>

#include <cmath>
#include <random>

#include "brio/core.hpp"
#include "brio/errors.hpp"

using namespace brio;
using doctest::Approx;

TEST_CASE("energy and lift") {
  CHECK(energy({0.0, 0.0}) == 0.0);
  CHECK(energy({3.0, 4.0}) == 12.5);
  CHECK(energy({1.0, 0.6}) == energy({1.0, -0.6}));
  const TransState t = lift({1.0, 2.0});
  CHECK(t.u == 1.0);
  CHECK(t.q == 2.5);
}

TEST_CASE("project inverts lift on the matching branch") {
  const BrioState s = project({1.0, 0.5}, +1);
  CHECK(s.u == 1.0);
  CHECK(s.v == 0.0);
  const BrioState r = project(lift({0.7, -1.3}), -1);
  CHECK(r.u == 0.7);
  CHECK(r.v == Approx(-1.3).epsilon(1e-15));
  CHECK_THROWS_AS(project({1.0, 0.4}, 1), DomainError);
  // rounding-level deficits are clamped to the critical curve
  CHECK(project({1.0, 0.5 - 1e-14}, 1).v == 0.0);
}

TEST_CASE("fluxes") {
  CHECK(brio_flux({0.0, 0.0}).first == 0.0);
  CHECK(brio_flux({1.0, 3.0}).second == 0.0);
  CHECK(brio_flux({1.0, 3.0}).first == 5.0);
  CHECK(brio_flux({2.0, 3.0}).first == 6.5);
  CHECK(brio_flux({2.0, 3.0}).second == 3.0);
  const Flux2 f = trans_flux({1.0, 5.0});
  CHECK(f.first == 5.0);
  CHECK(f.second == Approx(29.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("energy flux is the entropy flux of the original system (finite differences)") {
  // grad(q) . DF = grad(G(u, q(u, v))) with DF = [[u, v], [v, u - 1]]
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  const double h = 1e-6;
  for (int i = 0; i < 200; ++i) {
    const BrioState s{d(rng), d(rng)};
    auto G = [](double u, double v) { return energy_flux(lift({u, v})); };
    const double gu = (G(s.u + h, s.v) - G(s.u - h, s.v)) / (2 * h);
    const double gv = (G(s.u, s.v + h) - G(s.u, s.v - h)) / (2 * h);
    CHECK(gu == Approx(s.u * s.u + s.v * s.v).epsilon(1e-7));
    CHECK(gv == Approx(s.v * (2.0 * s.u - 1.0)).epsilon(1e-7).scale(10.0));
    CHECK(trans_flux(lift(s)).first == Approx(brio_flux(s).first));
  }
}

TEST_CASE("transformed eigenstructure") {
  const TransEigen o = eigen_trans({0.0, 0.0});
  CHECK(o.lambda_minus == -1.0);
  CHECK(o.lambda_plus == 0.0);
  const TransEigen e = eigen_trans({1.0, 5.0});
  CHECK(e.lambda_minus == Approx((1.0 - std::sqrt(37.0)) / 2.0).epsilon(1e-15));
  CHECK(e.lambda_plus == Approx((1.0 + std::sqrt(37.0)) / 2.0).epsilon(1e-15));
  CHECK_THROWS_AS(eigen_trans({0.0, -1.0}), DomainError);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-4.0, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const TransState t = lift({d(rng), d(rng)});
    const TransEigen ev = eigen_trans(t);
    CHECK(ev.lambda_plus - ev.lambda_minus >= 1.0);
    const auto J = trans_jacobian(t);
    for (const auto& [lambda, r] : {std::pair{ev.lambda_minus, ev.r_minus}, std::pair{ev.lambda_plus, ev.r_plus}}) {
      const double scale = 1e-12 * (1.0 + std::hypot(t.u, t.q));
      CHECK(std::abs(J[0] * r[0] + J[1] * r[1] - lambda * r[0]) <= scale);
      CHECK(std::abs(J[2] * r[0] + J[3] * r[1] - lambda * r[1]) <= scale);
    }
  }
}

TEST_CASE("genuine nonlinearity products") {
  const auto o = genuine_nonlinearity({0.0, 0.0});
  CHECK(o[0] == 3.0);
  CHECK(o[1] == 1.0);
  const auto g = genuine_nonlinearity({1.0, 5.0});
  CHECK(g[0] == Approx(2.0 + 1.0 / std::sqrt(37.0)).epsilon(1e-15));
  CHECK(g[1] == Approx(2.0 - 1.0 / std::sqrt(37.0)).epsilon(1e-15));
  const auto c = genuine_nonlinearity({2.5, 3.125});
  CHECK(c[0] == 3.0);
  CHECK(c[1] == 1.0);
  CHECK_THROWS_AS(genuine_nonlinearity({0.0, -0.125}), DomainError);
}

TEST_CASE("original-system eigenvalues agree with the transformed ones") {
  const BrioEigen o = eigen_brio({0.0, 0.0});
  CHECK(o.lambda1 == -1.0);
  CHECK(o.lambda2 == 0.0);
  const BrioEigen a = eigen_brio({0.3, 1.7});
  const BrioEigen b = eigen_brio({0.3, -1.7});
  CHECK(a.lambda1 == b.lambda1);
  CHECK(a.lambda2 == b.lambda2);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const BrioState s{d(rng), d(rng)};
    const BrioEigen be = eigen_brio(s);
    const TransEigen te = eigen_trans(lift(s));
    CHECK(be.lambda1 < be.lambda2);
    worst = std::max({worst, std::abs(be.lambda1 - te.lambda_minus), std::abs(be.lambda2 - te.lambda_plus)});
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("shock speed of the first equation") {
  CHECK(brio_shock_speed({1.0, 2.0}, {3.0, 2.0}) == 2.0);
  CHECK(brio_shock_speed({1.0, 0.0}, {0.0, 1.0}) == 0.0);
  CHECK_THROWS_AS(brio_shock_speed({1.0, 0.0}, {1.0, 1.0}), DegenerateJump);
  const BrioState l{1.5, -0.4};
  const BrioState r{-0.2, 0.9};
  const double c = brio_shock_speed(l, r);
  CHECK(c * (l.u - r.u) == Approx(brio_flux(l).first - brio_flux(r).first));
}

TEST_CASE("flux pairs") {
  const FluxPair b = brio_flux_pair();
  const FluxPair t = triangular_flux_pair();
  CHECK(b.f({2.0, 3.0}) == 6.5);
  CHECK(b.g({2.0, 3.0}) == 3.0);
  CHECK(t.f({2.0, 3.0}) == 2.0);
  CHECK(t.g({2.0, 3.0}) == 3.0);
}
