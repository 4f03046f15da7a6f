#pragma once

#include <memory>
#include <vector>

#include "brio/core.hpp"
#include "brio/wave_curves.hpp"

namespace brio {

enum class WaveKind { shock, rarefaction };

/// Labelling of the four wave combinations: I = RW1+RW2, II = SW1+RW2,
/// III = RW1+SW2, IV = SW1+SW2. Degenerate when a wave has zero strength.
enum class Region { I, II, III, IV, degenerate };

const char* region_name(Region region);

struct Wave {
  WaveKind kind = WaveKind::shock;
  Family family = Family::one;
  TransState left;
  TransState right;
  double speed_lo = 0.0;  ///< shock speed, or lambda at the slow edge of a fan
  double speed_hi = 0.0;
  std::shared_ptr<const IntegralCurve> curve;  ///< rarefactions only
};

struct WaveFan {
  TransState left;
  TransState middle;
  TransState right;
  std::vector<Wave> waves;  ///< family-one wave first; empty waves are omitted
  Region region = Region::degenerate;
};

struct RiemannOptions {
  double tol_root = 1e-12;
  /// |u_M - u_L| (or |u_R - u_M|) below this counts as a zero-strength wave.
  double tie_tol = 1e-10;
  /// Widens the bracket scan window on the left by this fraction of its
  /// width, which moves every scan node; the root must not depend on it.
  double scan_shift = 0.0;
  OdeOptions ode;
};

/// Intersection of the forward 1-curve through `left` with the inverse
/// 2-curve through `right`.
TransState solve_middle(TransState left, TransState right, const RiemannOptions& options = {});

Region classify(TransState left, TransState right, TransState middle,
                const RiemannOptions& options = {});

WaveFan build_fan(TransState left, TransState right, const RiemannOptions& options = {});

inline constexpr double tol_lax = 1e-10;

/// Lax inequalities for a shock, including the extra entering characteristic
/// (lambda_+(right) >= c for family one, lambda_-(left) <= c for family two).
/// Rarefactions are reported as admissible.
bool lax_check(const Wave& wave, double tol = tol_lax);

/// Smallest slack over all Lax inequalities of a shock (negative = violated).
double lax_margin(const Wave& wave);

/// Self-similar state at xi = x/t. At a shock position the right state is
/// returned.
TransState sample_fan(const WaveFan& fan, double xi);

/// State inside a rarefaction with lambda_family = xi (clamped to the fan).
TransState rarefaction_state(const Wave& wave, double xi);

}  // namespace brio
