#pragma once

#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "brio/core.hpp"

namespace brio {

inline constexpr double tol_ode = 1e-10;
/// Band below q = u^2/2 that is clamped back onto the critical curve.
inline constexpr double tol_curve = 1e-8;

enum class Family { one = 1, two = 2 };
enum class Direction { increasing, decreasing };

/// Characteristic speed of `family` at `t` (lambda_- for family one).
double family_speed(Family family, TransState t);

struct CurveSample {
  double u = 0.0;
  double q = 0.0;
  double lambda = 0.0;  ///< characteristic speed of the curve's family, also dq/du
};

struct OdeOptions {
  double tol = tol_ode;
  /// Step cap is max_step * (1 + |u|); keeps the cubic Hermite dense output
  /// well inside the integration tolerance.
  double max_step = 0.01;
  int max_steps = 2'000'000;
};

/// Tabulated rarefaction curve dq/du = lambda_family(u, q) through `base`.
/// Samples are strictly monotone in u in the stated direction and the first
/// sample is the base state. Queries between samples use cubic Hermite
/// interpolation with the stored slopes.
struct IntegralCurve {
  Family family = Family::one;
  TransState base;
  Direction direction = Direction::increasing;
  std::vector<CurveSample> samples;

  double u_min() const;
  double u_max() const;
  bool covers(double u) const;
  /// Throws DomainError outside [u_min, u_max].
  double q_at(double u) const;
  TransState state_at(double u) const { return {u, q_at(u)}; }
};

/// Cubic Hermite evaluation on a monotone (either direction) sample run.
double hermite_q(std::span<const CurveSample> samples, double u);

// --- shock loci -----------------------------------------------------------

/// First-family shock locus through `base` (left state), defined for u_R <= u_L.
double sw1_q(TransState base, double u_right);
/// Second-family shock locus through `base` (left state), defined for u_R <= u_L.
double sw2_q(TransState base, double u_right);
/// Left states joined to the right state `base_right` by a second-family
/// shock, defined for u_L >= u_R.
double sw2_inv_q(TransState base_right, double u_left);

/// Speed (q_L - q_R)/(u_L - u_R) of a transformed shock.
double trans_shock_speed(TransState left, TransState right);

struct RhResidual {
  double mass = 0.0;    ///< c (u_L - u_R) - (q_L - q_R)
  double energy = 0.0;  ///< c (q_L - q_R) - (G_L - G_R)
};
RhResidual rh_residual(TransState left, TransState right, double speed);

// --- rarefaction curves ---------------------------------------------------

/// Integrates the rarefaction ODE from `base` to `u_target` with an adaptive
/// Dormand-Prince 5(4) pair. Family one integrated towards increasing u stops
/// where it meets the critical curve; asking for a target past that point
/// raises DomainError.
IntegralCurve rw_integrate(Family family, TransState base, double u_target,
                           const OdeOptions& options = {});

/// A rarefaction branch that is integrated lazily as queries reach further out.
/// The step sequence depends only on (family, base, direction, options), so
/// answers do not depend on the order of queries. Safe for concurrent use.
class RarefactionBranch {
 public:
  RarefactionBranch(Family family, TransState base, Direction direction,
                    OdeOptions options = {});

  Family family() const { return family_; }
  Direction direction() const { return direction_; }
  TransState base() const { return base_; }

  double q_at(double u) const;

  /// For branches that terminate on the critical curve, the u where they do.
  /// Integrates as far as needed to find it.
  std::optional<double> critical_limit() const;

  /// Samples from the base up to `u_target`, the last one placed at `u_target`.
  IntegralCurve snapshot(double u_target) const;

 private:
  void extend_to(double u) const;  // requires lock held
  bool reaches(double u) const;     // requires lock held
  bool terminates() const;

  Family family_;
  TransState base_;
  Direction direction_;
  OdeOptions options_;

  mutable std::mutex mutex_;
  mutable std::vector<CurveSample> samples_;
  mutable double step_ = 0.0;
  mutable double s_ = 0.0;    // integration variable dir * (u - u0)
  mutable double gap_ = 0.0;  // q - u^2/2 at s_
  mutable std::optional<double> limit_;
};

/// Family-one composite through a left state: SW1 for u < u_L, RW1 for u >= u_L.
class Forward1Curve {
 public:
  explicit Forward1Curve(TransState left, OdeOptions options = {});
  double operator()(double u) const;
  TransState left() const { return left_; }
  /// Largest u for which the curve stays in the physical domain.
  double rarefaction_limit() const;
  const RarefactionBranch& rarefaction() const { return *rw1_; }

 private:
  TransState left_;
  std::shared_ptr<const RarefactionBranch> rw1_;
};

/// Inverse family-two composite through a right state: backward RW2 for
/// u < u_R, inverse SW2 for u >= u_R.
class Backward2Curve {
 public:
  explicit Backward2Curve(TransState right, OdeOptions options = {});
  double operator()(double u) const;
  TransState right() const { return right_; }
  const RarefactionBranch& rarefaction() const { return *rw2_; }

 private:
  TransState right_;
  std::shared_ptr<const RarefactionBranch> rw2_;
};

/// Memoized evaluations of the composite curves (branches keyed by base state).
double forward_1_curve(TransState left, double u);
double backward_2_curve(TransState right, double u);

/// Shared, internally synchronized branch cache behind the free functions.
std::shared_ptr<const RarefactionBranch> cached_branch(Family family, TransState base,
                                                       Direction direction,
                                                       const OdeOptions& options = {});

// --- tabulation -----------------------------------------------------------

enum class CurveKind { sw1, sw2, rw1, rw2, sw2_inv, rw2_inv };

const char* curve_name(CurveKind kind);

/// Samples `points` values of the curve through `base` on its natural side of
/// the base, out to distance `span` in u. Samples that leave the physical
/// domain (or pass the end of a terminating rarefaction) are dropped.
std::vector<CurveSample> tabulate_curve(CurveKind kind, TransState base, double span,
                                        int points, const OdeOptions& options = {});

/// CSV with header `u,q,lambda`, 17 significant digits.
void write_curve_csv(std::ostream& os, std::span<const CurveSample> samples);

}  // namespace brio
