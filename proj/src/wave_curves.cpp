#include "brio/wave_curves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <tuple>

#include <boost/numeric/odeint.hpp>

#include "brio/errors.hpp"

namespace brio {

namespace odeint = boost::numeric::odeint;

double family_speed(Family family, TransState t) {
  return family == Family::one ? lambda_minus(t) : lambda_plus(t);
}

// --- IntegralCurve ----------------------------------------------------------

double hermite_q(std::span<const CurveSample> samples, double u) {
  if (samples.empty()) throw DomainError("empty curve");
  if (samples.size() == 1) return samples.front().q;
  const bool increasing = samples.back().u > samples.front().u;
  // first index whose u is past `u` in the direction of the run
  auto it = std::partition_point(samples.begin() + 1, samples.end() - 1,
                                 [&](const CurveSample& s) {
                                   return increasing ? s.u < u : s.u > u;
                                 });
  const CurveSample& b = *it;
  const CurveSample& a = *(it - 1);
  const double h = b.u - a.u;
  const double t = (u - a.u) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * a.q + h10 * h * a.lambda + h01 * b.q + h11 * h * b.lambda;
}

double IntegralCurve::u_min() const {
  return std::min(samples.front().u, samples.back().u);
}

double IntegralCurve::u_max() const {
  return std::max(samples.front().u, samples.back().u);
}

bool IntegralCurve::covers(double u) const {
  const double slack = 1e-12 * (1.0 + std::abs(u));
  return u >= u_min() - slack && u <= u_max() + slack;
}

double IntegralCurve::q_at(double u) const {
  if (samples.empty() || !covers(u)) {
    throw DomainError("u = " + std::to_string(u) + " outside the tabulated curve");
  }
  return hermite_q(samples, std::clamp(u, u_min(), u_max()));
}

// --- shock loci -------------------------------------------------------------

namespace {

double forward_shock_q(TransState base, double u_right, double sign) {
  const double d = base.u - u_right;
  if (d < -tol_zero) {
    throw PreconditionError("shock locus needs u_R <= u_L (u_L = " + std::to_string(base.u) +
                            ", u_R = " + std::to_string(u_right) + ")");
  }
  const double jump = std::max(d, 0.0);
  // 2q_L + 1/4 + d/2 - (2u_L^2 + 2u_L u_R - u_R^2)/3, rewritten without the
  // cancellation between q_L and u_L^2.
  double radicand = 2.0 * critical_gap(base) + 0.25 + 0.5 * jump + jump * jump / 3.0;
  if (radicand < 0.0) {
    if (radicand < -tol_domain * (1.0 + base.u * base.u)) {
      throw DomainError("negative radicand in shock locus");
    }
    radicand = 0.0;
  }
  return base.q - 0.5 * jump * (2.0 * u_right - 1.0) + sign * jump * std::sqrt(radicand);
}

}  // namespace

double sw1_q(TransState base, double u_right) { return forward_shock_q(base, u_right, +1.0); }

double sw2_q(TransState base, double u_right) { return forward_shock_q(base, u_right, -1.0); }

double sw2_inv_q(TransState base_right, double u_left) {
  const double d = u_left - base_right.u;
  if (d < -tol_zero) {
    throw PreconditionError("inverse SW2 needs u_L >= u_R");
  }
  const double jump = std::max(d, 0.0);
  // 8q_R + 1 + 4u_L^2/3 - 8u_L u_R/3 - 8u_R^2/3 - 2u_L + 2u_R
  double radicand = discriminant(base_right) - 2.0 * jump + 4.0 * jump * jump / 3.0;
  if (radicand < 0.0) {
    if (radicand < -tol_domain * (1.0 + base_right.u * base_right.u)) {
      throw DomainError("negative radicand in inverse SW2");
    }
    radicand = 0.0;
  }
  return base_right.q + 0.5 * jump * (2.0 * u_left - 1.0) + 0.5 * jump * std::sqrt(radicand);
}

double trans_shock_speed(TransState left, TransState right) {
  const double du = left.u - right.u;
  if (std::abs(du) < tol_zero) throw DegenerateJump("shock with [u] = 0");
  return (left.q - right.q) / du;
}

RhResidual rh_residual(TransState left, TransState right, double speed) {
  return {speed * (left.u - right.u) - (left.q - right.q),
          speed * (left.q - right.q) - (energy_flux(left) - energy_flux(right))};
}

// --- rarefaction integration -------------------------------------------------

namespace {

using OdeState = std::array<double, 1>;
using Dopri = odeint::runge_kutta_dopri5<OdeState>;

// Unclamped variant used inside the right-hand side: the integrator may probe
// slightly below the critical curve within a step.
double speed_for_rhs(Family family, double u, double q) {
  const double d = std::max(8.0 * q - 4.0 * u * u + 1.0, 0.0);
  const double root = std::sqrt(d);
  return family == Family::one ? 0.5 * (2.0 * u - 1.0 - root) : 0.5 * (2.0 * u - 1.0 + root);
}

}  // namespace

RarefactionBranch::RarefactionBranch(Family family, TransState base, Direction direction,
                                     OdeOptions options)
    : family_(family), base_(base), direction_(direction), options_(options) {
  if (!above_critical(base)) {
    throw DomainError("rarefaction base below the critical curve");
  }
  samples_.push_back({base.u, base.q, speed_for_rhs(family, base.u, base.q)});
  step_ = 1e-3 * (1.0 + std::abs(base.u));
  gap_ = critical_gap(base);
  if (terminates() && critical_gap(base) <= tol_domain * (1.0 + base.u * base.u)) {
    limit_ = base.u;
  }
}

bool RarefactionBranch::terminates() const {
  return family_ == Family::one && direction_ == Direction::increasing;
}

bool RarefactionBranch::reaches(double u) const {
  const double last = samples_.back().u;
  return direction_ == Direction::increasing ? last >= u : last <= u;
}

void RarefactionBranch::extend_to(double u_target) const {
  if (reaches(u_target) || limit_) return;
  const double dir = direction_ == Direction::increasing ? 1.0 : -1.0;
  const double u0 = base_.u;
  const Family family = family_;
  // Integrate in s = dir * (u - u0) so the independent variable always grows.
  // The unknown is the gap g = q - u^2/2, for which g' = (-1 -+ sqrt(1 + 8g))/2:
  // g = 0 is then an exact fixed point of every stage, and the curve is not
  // pushed off the critical line by the error it allows.
  const double root_sign = family == Family::one ? -1.0 : 1.0;
  auto rhs = [dir, root_sign](const OdeState& x, OdeState& dxdt, double) {
    dxdt[0] = dir * 0.5 * (-1.0 + root_sign * std::sqrt(std::max(1.0 + 8.0 * x[0], 0.0)));
  };
  auto stepper = odeint::make_controlled<Dopri>(options_.tol, options_.tol);

  // resume from the exact integrator state, not the rounded last sample
  OdeState x{gap_};
  double s = s_;
  int steps = 0;
  while (!reaches(u_target) && !limit_) {
    if (++steps > options_.max_steps) throw StepFailure("rarefaction integration exceeded step budget");
    const double u_now = u0 + dir * s;
    double ds = std::min(step_, options_.max_step * (1.0 + std::abs(u_now)));
    const double s_before = s;
    const double q_before = samples_.back().q;
    if (stepper.try_step(rhs, x, s, ds) != odeint::success) {
      step_ = ds;
      if (ds < 1e-14 * (1.0 + std::abs(u_now))) {
        throw StepFailure("rarefaction step size underflow at u = " + std::to_string(u_now));
      }
      continue;
    }
    step_ = ds;
    const double u_new = u0 + dir * s;
    const double gap = x[0];
    double q_new = 0.5 * u_new * u_new + gap;

    if (terminates() && gap < 0.0) {
      // Locate the crossing inside the last step on the Hermite interpolant.
      const CurveSample a{u0 + dir * s_before, q_before,
                          speed_for_rhs(family, u0 + dir * s_before, q_before)};
      const CurveSample b{u_new, q_new, speed_for_rhs(family, u_new, q_new)};
      const std::array<CurveSample, 2> run{a, b};
      double lo = a.u;
      double hi = b.u;
      for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double g = hermite_q(run, mid) - 0.5 * mid * mid;
        (g >= 0.0 ? lo : hi) = mid;
      }
      const double uc = lo;
      samples_.push_back({uc, 0.5 * uc * uc, uc - 1.0});
      limit_ = uc;
      break;
    }
    if (!terminates() && gap < 0.0) {
      if (gap < -tol_curve * (1.0 + u_new * u_new)) {
        throw DomainError("rarefaction curve crossed below q = u^2/2 at u = " +
                          std::to_string(u_new));
      }
      q_new = 0.5 * u_new * u_new;
      x[0] = 0.0;
      stepper = odeint::make_controlled<Dopri>(options_.tol, options_.tol);
    }
    samples_.push_back({u_new, q_new, speed_for_rhs(family, u_new, q_new)});
    s_ = s;
    gap_ = x[0];
  }
}

double RarefactionBranch::q_at(double u) const {
  std::lock_guard lock(mutex_);
  const bool behind = direction_ == Direction::increasing ? u < base_.u : u > base_.u;
  if (behind) {
    if (std::abs(u - base_.u) <= 1e-14 * (1.0 + std::abs(u))) return base_.q;
    throw DomainError("query behind the rarefaction base");
  }
  extend_to(u);
  if (!reaches(u)) {
    const double slack = 1e-12 * (1.0 + std::abs(u));
    if (limit_ && std::abs(u - *limit_) <= slack) return samples_.back().q;
    throw DomainError("rarefaction curve leaves the physical domain at u = " +
                      std::to_string(limit_.value_or(u)));
  }
  return hermite_q(samples_, u);
}

std::optional<double> RarefactionBranch::critical_limit() const {
  if (!terminates()) return std::nullopt;
  std::lock_guard lock(mutex_);
  while (!limit_) {
    const double last = samples_.back().u;
    extend_to(last + 1.0 + std::abs(last));
  }
  return limit_;
}

IntegralCurve RarefactionBranch::snapshot(double u_target) const {
  const double q_target = q_at(u_target);
  std::lock_guard lock(mutex_);
  IntegralCurve curve;
  curve.family = family_;
  curve.base = base_;
  curve.direction = direction_;
  curve.samples.push_back(samples_.front());
  if (u_target == base_.u) return curve;
  const bool inc = direction_ == Direction::increasing;
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    const double u = samples_[i].u;
    if (inc ? u >= u_target : u <= u_target) break;
    curve.samples.push_back(samples_[i]);
  }
  const double gap = q_target - 0.5 * u_target * u_target;
  const double lambda =
      speed_for_rhs(family_, u_target, gap < 0.0 ? 0.5 * u_target * u_target : q_target);
  curve.samples.push_back({u_target, q_target, lambda});
  return curve;
}

IntegralCurve rw_integrate(Family family, TransState base, double u_target,
                           const OdeOptions& options) {
  if (!std::isfinite(u_target)) throw PreconditionError("non-finite integration target");
  const Direction dir = u_target >= base.u ? Direction::increasing : Direction::decreasing;
  RarefactionBranch branch(family, base, dir, options);
  return branch.snapshot(u_target);
}

// --- composites ---------------------------------------------------------------

Forward1Curve::Forward1Curve(TransState left, OdeOptions options)
    : left_(left),
      rw1_(std::make_shared<RarefactionBranch>(Family::one, left, Direction::increasing,
                                               options)) {}

double Forward1Curve::operator()(double u) const {
  return u < left_.u ? sw1_q(left_, u) : rw1_->q_at(u);
}

double Forward1Curve::rarefaction_limit() const { return *rw1_->critical_limit(); }

Backward2Curve::Backward2Curve(TransState right, OdeOptions options)
    : right_(right),
      rw2_(std::make_shared<RarefactionBranch>(Family::two, right, Direction::decreasing,
                                               options)) {}

double Backward2Curve::operator()(double u) const {
  return u < right_.u ? rw2_->q_at(u) : sw2_inv_q(right_, u);
}

namespace {

using CacheKey = std::tuple<int, int, double, double, double, double>;

struct BranchCache {
  std::mutex mutex;
  std::map<CacheKey, std::shared_ptr<const RarefactionBranch>> entries;
};

BranchCache& branch_cache() {
  static BranchCache cache;
  return cache;
}

constexpr std::size_t kMaxCachedBranches = 512;

}  // namespace

std::shared_ptr<const RarefactionBranch> cached_branch(Family family, TransState base,
                                                       Direction direction,
                                                       const OdeOptions& options) {
  BranchCache& cache = branch_cache();
  const CacheKey key{static_cast<int>(family), static_cast<int>(direction), base.u, base.q,
                     options.tol, options.max_step};
  std::lock_guard lock(cache.mutex);
  if (auto it = cache.entries.find(key); it != cache.entries.end()) return it->second;
  if (cache.entries.size() >= kMaxCachedBranches) cache.entries.clear();
  auto branch = std::make_shared<const RarefactionBranch>(family, base, direction, options);
  cache.entries.emplace(key, branch);
  return branch;
}

double forward_1_curve(TransState left, double u) {
  if (u < left.u) return sw1_q(left, u);
  return cached_branch(Family::one, left, Direction::increasing)->q_at(u);
}

double backward_2_curve(TransState right, double u) {
  if (u >= right.u) return sw2_inv_q(right, u);
  return cached_branch(Family::two, right, Direction::decreasing)->q_at(u);
}

// --- tabulation -----------------------------------------------------------------

const char* curve_name(CurveKind kind) {
  switch (kind) {
    case CurveKind::sw1: return "sw1";
    case CurveKind::sw2: return "sw2";
    case CurveKind::rw1: return "rw1";
    case CurveKind::rw2: return "rw2";
    case CurveKind::sw2_inv: return "sw2_inv";
    case CurveKind::rw2_inv: return "rw2_inv";
  }
  return "?";
}

std::vector<CurveSample> tabulate_curve(CurveKind kind, TransState base, double span,
                                        int points, const OdeOptions& options) {
  if (points < 2) throw PreconditionError("need at least two curve points");
  if (!(span > 0.0)) throw PreconditionError("curve span must be positive");
  const bool left_side = kind == CurveKind::sw1 || kind == CurveKind::sw2 ||
                         kind == CurveKind::rw2_inv;
  const Family family =
      (kind == CurveKind::sw1 || kind == CurveKind::rw1) ? Family::one : Family::two;

  std::optional<RarefactionBranch> branch;
  if (kind == CurveKind::rw1 || kind == CurveKind::rw2) {
    branch.emplace(family, base, Direction::increasing, options);
  } else if (kind == CurveKind::rw2_inv) {
    branch.emplace(family, base, Direction::decreasing, options);
  }

  std::vector<CurveSample> out;
  out.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double frac = static_cast<double>(i) / (points - 1);
    const double u = left_side ? base.u - span + span * frac : base.u + span * frac;
    double q = 0.0;
    try {
      switch (kind) {
        case CurveKind::sw1: q = sw1_q(base, u); break;
        case CurveKind::sw2: q = sw2_q(base, u); break;
        case CurveKind::sw2_inv: q = sw2_inv_q(base, u); break;
        default: q = branch->q_at(u); break;
      }
    } catch (const DomainError&) {
      continue;
    }
    const TransState t{u, q};
    if (!above_critical(t)) continue;
    out.push_back({u, q, family_speed(family, t)});
  }
  return out;
}

void write_curve_csv(std::ostream& os, std::span<const CurveSample> samples) {
  os << "u,q,lambda\n";
  char line[128];
  for (const CurveSample& s : samples) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", s.u, s.q, s.lambda);
    os << line;
  }
}

}  // namespace brio
