#include "brio/delta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "brio/errors.hpp"

namespace brio {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kOrderingTol = 1e-10;

int sign_of(double v) { return v < 0.0 ? -1 : 1; }

// Sign pair for the two sides. A zero datum takes the sign of the other side.
std::pair<int, int> side_signs(const RiemannData& data) {
  const double vl = data.left.v;
  const double vr = data.right.v;
  if (vl == 0.0 && vr == 0.0) return {1, 1};
  if (vl == 0.0) return {sign_of(vr), sign_of(vr)};
  if (vr == 0.0) return {sign_of(vl), sign_of(vl)};
  return {sign_of(vl), sign_of(vr)};
}

void require_finite(const RiemannData& data) {
  for (double x : {data.left.u, data.left.v, data.right.u, data.right.v}) {
    if (!std::isfinite(x)) throw DomainError("Riemann data must be finite");
  }
}

class SegmentBuilder {
 public:
  explicit SegmentBuilder(std::vector<RegularSegment>& out) : out_(out) {}

  void constant_until(double hi, BrioState state) {
    if (hi > cursor_) {
      RegularSegment seg;
      seg.xi_lo = cursor_;
      seg.xi_hi = hi;
      seg.kind = SegmentKind::constant;
      seg.state = state;
      out_.push_back(seg);
    }
    cursor_ = std::max(cursor_, hi);
  }

  void rarefaction(const Wave& wave, int sign) {
    RegularSegment seg;
    seg.xi_lo = wave.speed_lo;
    seg.xi_hi = wave.speed_hi;
    seg.kind = SegmentKind::rarefaction;
    seg.wave = std::make_shared<const Wave>(wave);
    seg.sign = sign;
    out_.push_back(seg);
    cursor_ = wave.speed_hi;
  }

  double cursor() const { return cursor_; }

 private:
  std::vector<RegularSegment>& out_;
  double cursor_ = -kInf;
};

}  // namespace

const char* flip_speed_name(FlipSpeed mode) { return mode == FlipSpeed::rh ? "rh" : "paper"; }

double rh_deficit_v(BrioState left, BrioState right, double speed) {
  return speed * (left.v - right.v) - (left.v * (left.u - 1.0) - right.v * (right.u - 1.0));
}

double deficit_rate(BrioState left, BrioState right, double speed, Component component) {
  const Flux2 fl = brio_flux(left);
  const Flux2 fr = brio_flux(right);
  if (component == Component::u) {
    return speed * (right.u - left.u) - (fr.first - fl.first);
  }
  return speed * (right.v - left.v) - (fr.second - fl.second);
}

DeltaSolution generic_delta_shock(const FluxPair& flux, const RiemannData& data,
                                  JumpBranch branch) {
  require_finite(data);
  const BrioState l = data.left;
  const BrioState r = data.right;
  const double df = flux.f(r) - flux.f(l);
  const double dg = flux.g(r) - flux.g(l);
  DeltaSingularity delta;
  if (branch == JumpBranch::a) {
    if (std::abs(r.u - l.u) < tol_zero) throw DegenerateJump("branch a needs u1 != u2");
    delta.speed = df / (r.u - l.u);
    delta.rate = delta.speed * (r.v - l.v) - dg;
    delta.component = Component::v;
  } else {
    if (std::abs(r.v - l.v) < tol_zero) throw DegenerateJump("branch b needs v1 != v2");
    delta.speed = dg / (r.v - l.v);
    delta.rate = delta.speed * (r.u - l.u) - df;
    delta.component = Component::u;
  }
  DeltaSolution sol;
  sol.initial = data;
  SegmentBuilder builder(sol.regular);
  builder.constant_until(delta.speed, l);
  builder.constant_until(kInf, r);
  sol.singular.push_back(delta);
  return sol;
}

DeltaSolution solve_brio(const RiemannData& data, const DeltaOptions& options) {
  require_finite(data);
  const auto [sign_left, sign_right] = side_signs(data);

  DeltaSolution sol;
  sol.initial = data;
  sol.flip_mode = options.flip_speed;
  sol.sign_change = sign_left != sign_right;
  sol.fan = build_fan(lift(data.left), lift(data.right), options.riemann);
  const WaveFan& fan = *sol.fan;

  const Wave* first = nullptr;
  const Wave* second = nullptr;
  for (const Wave& w : fan.waves) (w.family == Family::one ? first : second) = &w;

  const BrioState middle_left = project(fan.middle, sign_left);
  const BrioState middle_right = project(fan.middle, sign_right);
  const bool flip = sol.sign_change && middle_left.v != middle_right.v;

  SegmentBuilder builder(sol.regular);
  BrioState current = data.left;

  auto add_delta = [&](double speed, BrioState from, BrioState to) {
    DeltaSingularity d;
    d.speed = speed;
    d.rate = deficit_rate(from, to, speed, Component::v);
    d.component = Component::v;
    sol.singular.push_back(d);
  };

  if (first) {
    builder.constant_until(first->speed_lo, current);
    const BrioState after = (second || flip) ? middle_left : data.right;
    if (first->kind == WaveKind::shock) {
      add_delta(first->speed_lo, current, after);
    } else {
      builder.rarefaction(*first, sign_left);
    }
    current = after;
  }

  if (flip) {
    const double c_flip =
        options.flip_speed == FlipSpeed::rh ? fan.middle.u - 1.0 : fan.middle.u;
    const double lower = first ? first->speed_hi : -kInf;
    const double upper = second ? second->speed_lo : kInf;
    const double slack = kOrderingTol * (1.0 + std::abs(c_flip));
    if (c_flip < lower - slack || c_flip > upper + slack) {
      throw OrderingViolation("v-flip speed " + std::to_string(c_flip) +
                              " outside the gap between the waves [" + std::to_string(lower) +
                              ", " + std::to_string(upper) + "]");
    }
    const double placed = std::clamp(c_flip, lower, upper);
    builder.constant_until(placed, current);
    sol.flip_speed = placed;
    current = second ? middle_right : data.right;
  }

  if (second) {
    builder.constant_until(second->speed_lo, current);
    if (second->kind == WaveKind::shock) {
      add_delta(second->speed_lo, current, data.right);
    } else {
      builder.rarefaction(*second, sign_right);
    }
    current = data.right;
  }
  builder.constant_until(kInf, current);
  return sol;
}

BrioState sample_regular(const DeltaSolution& solution, double xi) {
  const auto& segs = solution.regular;
  auto it = std::upper_bound(segs.begin(), segs.end(), xi,
                             [](double x, const RegularSegment& s) { return x < s.xi_lo; });
  const RegularSegment& seg = it == segs.begin() ? segs.front() : *(it - 1);
  if (seg.kind == SegmentKind::constant) return seg.state;
  return project(rarefaction_state(*seg.wave, xi), seg.sign);
}

BrioSample sample_brio(const DeltaSolution& solution, double x, double t) {
  if (!(t > 0.0)) throw PreconditionError("sample_brio needs t > 0");
  BrioSample out;
  out.regular = sample_regular(solution, x / t);
  for (const DeltaSingularity& d : solution.singular) {
    out.singular.push_back({d.speed * t, d.strength(t), d.component});
  }
  return out;
}

int cardinality(const DeltaSolution& solution) {
  return static_cast<int>(std::count_if(
      solution.singular.begin(), solution.singular.end(), [](const DeltaSingularity& d) {
        return std::abs(d.rate) > tol_zero || std::abs(d.constant) > tol_zero;
      }));
}

DeltaSolution nonuniqueness_example(double beta, double c1, double c2) {
  DeltaSolution sol;
  SegmentBuilder builder(sol.regular);
  builder.constant_until(kInf, BrioState{0.0, 0.0});
  if (beta != 0.0 && c1 != c2) {
    sol.singular.push_back({c1, 0.0, beta, Component::v});
    sol.singular.push_back({c2, 0.0, -beta, Component::v});
  }
  return sol;
}

DeltaSolution with_flip_speed(const DeltaSolution& solution, double speed) {
  if (!solution.flip_speed) throw PreconditionError("solution has no v-flip shock");
  DeltaSolution out = solution;
  auto& segs = out.regular;
  for (std::size_t i = 1; i < segs.size(); ++i) {
    if (segs[i].xi_lo != *solution.flip_speed) continue;
    if (segs[i - 1].kind != SegmentKind::constant || segs[i].kind != SegmentKind::constant) continue;
    if (!(speed > segs[i - 1].xi_lo && speed < segs[i].xi_hi)) {
      throw OrderingViolation("moved v-flip would cross a neighbouring wave");
    }
    segs[i - 1].xi_hi = speed;
    segs[i].xi_lo = speed;
    out.flip_speed = speed;
    return out;
  }
  throw PreconditionError("v-flip breakpoint not found among the regular segments");
}

std::vector<double> breakpoints(const DeltaSolution& solution) {
  std::vector<double> xs;
  for (const RegularSegment& s : solution.regular) {
    if (std::isfinite(s.xi_lo)) xs.push_back(s.xi_lo);
    if (std::isfinite(s.xi_hi)) xs.push_back(s.xi_hi);
  }
  for (const DeltaSingularity& d : solution.singular) xs.push_back(d.speed);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace brio
