#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "brio/core.hpp"
#include "brio/riemann.hpp"

namespace brio {

using Rng = std::mt19937_64;

/// u uniform in [-u_range, u_range], q = u^2/2 + margin + extra with extra
/// uniform in [0, spread]. margin = spread = 0 gives states on the critical curve.
TransState random_state(Rng& rng, double margin, double u_range = 3.0, double spread = 2.0);

std::pair<TransState, TransState> random_state_pair(Rng& rng, double margin);

/// Riemann data built forwards from a left state along the wave curves, so
/// the region and middle state are known before solving.
struct RegionCase {
  Region region = Region::I;
  bool sign_change = false;
  RiemannData data;
  TransState left;
  TransState middle;
  TransState right;
  double c1 = 0.0;  ///< shock speeds; zero for rarefactions
  double c2 = 0.0;
};

/// `region` must be I..IV. Middle and right states keep v^2/2 >= min_gap.
RegionCase random_region_case(Rng& rng, Region region, bool sign_change, double min_gap = 0.05,
                              const OdeOptions& ode = {});

/// Two Brio states with distinct u and distinct v.
RiemannData random_jump(Rng& rng);

}  // namespace brio
