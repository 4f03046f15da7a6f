#include "brio/random_data.hpp"

#include <cmath>

#include "brio/errors.hpp"
#include "brio/wave_curves.hpp"

namespace brio {

namespace {

double uniform(Rng& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

constexpr int kMaxAttempts = 1000;

}  // namespace

TransState random_state(Rng& rng, double margin, double u_range, double spread) {
  const double u = uniform(rng, -u_range, u_range);
  const double extra = spread > 0.0 ? uniform(rng, 0.0, spread) : 0.0;
  return {u, 0.5 * u * u + margin + extra};
}

std::pair<TransState, TransState> random_state_pair(Rng& rng, double margin) {
  const double spread = margin > 0.0 ? margin : 0.0;
  TransState l = random_state(rng, margin, 3.0, spread);
  TransState r = random_state(rng, margin, 3.0, spread);
  return {l, r};
}

RegionCase random_region_case(Rng& rng, Region region, bool sign_change, double min_gap,
                              const OdeOptions& ode) {
  if (region == Region::degenerate) throw PreconditionError("pick one of regions I-IV");
  const bool rw1 = region == Region::I || region == Region::III;
  const bool rw2 = region == Region::I || region == Region::II;

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const double ul = uniform(rng, -1.5, 1.5);
    const double vl = uniform(rng, 0.4, 2.5);
    const TransState left{ul, 0.5 * ul * ul + 0.5 * vl * vl};

    TransState middle;
    double c1 = 0.0;
    if (rw1) {
      const Forward1Curve curve(left, ode);
      const double um = ul + uniform(rng, 0.1, 1.0);
      if (um >= curve.rarefaction_limit()) continue;
      middle = {um, curve(um)};
    } else {
      const double um = ul - uniform(rng, 0.1, 1.5);
      middle = {um, sw1_q(left, um)};
      c1 = trans_shock_speed(left, middle);
    }
    if (critical_gap(middle) < min_gap) continue;

    TransState right;
    double c2 = 0.0;
    if (rw2) {
      const double ur = middle.u + uniform(rng, 0.1, 1.0);
      right = {ur, rw_integrate(Family::two, middle, ur, ode).samples.back().q};
    } else {
      const double ur = middle.u - uniform(rng, 0.1, 1.5);
      right = {ur, sw2_q(middle, ur)};
      c2 = trans_shock_speed(middle, right);
    }
    if (critical_gap(right) < min_gap) continue;

    // mirror v half of the time so both branches get exercised
    const int s = uniform(rng, 0.0, 1.0) < 0.5 ? 1 : -1;
    RegionCase out;
    out.region = region;
    out.sign_change = sign_change;
    out.left = left;
    out.middle = middle;
    out.right = right;
    out.c1 = c1;
    out.c2 = c2;
    out.data.left = project(left, s);
    out.data.right = project(right, sign_change ? -s : s);
    return out;
  }
  throw PreconditionError("could not construct data for the requested region");
}

RiemannData random_jump(Rng& rng) {
  RiemannData d;
  for (;;) {
    d.left = {uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
    d.right = {uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
    if (std::abs(d.left.u - d.right.u) > 0.1 && std::abs(d.left.v - d.right.v) > 0.1) return d;
  }
}

}  // namespace brio
