#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "brio/core.hpp"
#include "brio/riemann.hpp"

namespace brio {

/// Which conservation law carries a singular part: the u-equation or the v-equation.
enum class Component { u, v };

/// Dirac mass of strength rate*t + constant carried on the line x = speed*t.
/// Solutions of Riemann problems use rate only (zero strength at t = 0); the
/// constant part hosts the non-uniqueness fixture.
struct DeltaSingularity {
  double speed = 0.0;
  double rate = 0.0;
  double constant = 0.0;
  Component component = Component::v;

  double strength(double t) const { return rate * t + constant; }
};

enum class SegmentKind { constant, rarefaction };

/// Piece of the regular part on xi_lo <= x/t < xi_hi.
struct RegularSegment {
  double xi_lo = 0.0;
  double xi_hi = 0.0;
  SegmentKind kind = SegmentKind::constant;
  BrioState state;                          ///< constant segments
  std::shared_ptr<const Wave> wave;         ///< rarefaction segments
  int sign = 1;                             ///< branch of v = sign*sqrt(2q - u^2)
};

/// Speed of the regular shock that flips the sign of v at u = U_M.
/// rh: U_M - 1, from [g]/[v] (no deficit). paper: U_M itself.
enum class FlipSpeed { rh, paper };

const char* flip_speed_name(FlipSpeed mode);

struct DeltaOptions {
  FlipSpeed flip_speed = FlipSpeed::rh;
  RiemannOptions riemann;
};

struct DeltaSolution {
  RiemannData initial;
  std::vector<RegularSegment> regular;  ///< ordered, covering the whole line
  std::vector<DeltaSingularity> singular;
  std::optional<WaveFan> fan;           ///< transformed fan, when built from one
  std::optional<double> flip_speed;     ///< speed of the v-flip shock, if any
  FlipSpeed flip_mode = FlipSpeed::rh;
  bool sign_change = false;
};

enum class JumpBranch { a, b };

/// Single-jump delta-shock for an arbitrary 2x2 flux. Branch a moves with
/// c = [f]/[u] and puts the deficit c[V] - [g] on the v-equation; branch b
/// uses c = [g]/[v] and puts c[U] - [f] on the u-equation.
DeltaSolution generic_delta_shock(const FluxPair& flux, const RiemannData& data, JumpBranch branch);

/// Rankine-Hugoniot deficit of the second Brio equation in the left-minus-right
/// form c(V_L - V_R) - (V_L(U_L-1) - V_R(U_R-1)).
double rh_deficit_v(BrioState left, BrioState right, double speed);

/// Growth rate c[w] - [flux] (jumps right minus left) of the delta needed on
/// `component` for a jump travelling at `speed` under the Brio flux.
double deficit_rate(BrioState left, BrioState right, double speed, Component component);

/// Admissible delta-type solution of the Brio Riemann problem.
DeltaSolution solve_brio(const RiemannData& data, const DeltaOptions& options = {});

/// Regular part at xi = x/t (right limit at breakpoints).
BrioState sample_regular(const DeltaSolution& solution, double xi);

struct SampledSingularity {
  double position = 0.0;
  double strength = 0.0;
  Component component = Component::v;
};

struct BrioSample {
  BrioState regular;
  std::vector<SampledSingularity> singular;
};

/// Requires t > 0.
BrioSample sample_brio(const DeltaSolution& solution, double x, double t);

/// Number of singularities with a nonzero strength.
int cardinality(const DeltaSolution& solution);

/// Zero regular part plus +beta at speed c1 and -beta at speed c2, both
/// constant in time. Solves the zero Riemann problem for any beta, c1, c2.
DeltaSolution nonuniqueness_example(double beta, double c1, double c2);

/// Copy of `solution` with its v-flip shock moved to `speed`. Throws
/// OrderingViolation if the new speed leaves the gap between the two waves,
/// PreconditionError if the solution has no flip.
DeltaSolution with_flip_speed(const DeltaSolution& solution, double speed);

/// Sorted breakpoints of the regular part (finite segment edges).
std::vector<double> breakpoints(const DeltaSolution& solution);

}  // namespace brio
