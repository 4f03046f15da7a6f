#include "brio/property_suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "brio/errors.hpp"
#include "brio/fv.hpp"
#include "brio/random_data.hpp"
#include "brio/riemann.hpp"
#include "brio/wave_curves.hpp"

namespace brio {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Collector {
 public:
  explicit Collector(Report& report) : report_(report) {}

  void add(const std::string& name, double measured, double tolerance) {
    Check c;
    c.name = name;
    c.measured = measured;
    c.tolerance = tolerance;
    c.passed = std::isfinite(measured) && measured <= tolerance;
    report_.checks.push_back(c);
  }

 private:
  Report& report_;
};

double uniform(Rng& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

// --- core ----------------------------------------------------------------

void core_checks(Rng& rng, Collector& out) {
  double eig = 0.0;
  double agree = 0.0;
  double gn_outside = 0.0;
  double hyper = 0.0;
  double roundtrip = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const BrioState s{uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0)};
    const TransState t = lift(s);
    const TransEigen e = eigen_trans(t);
    const auto J = trans_jacobian(t);
    const double norm = 1.0 + std::hypot(t.u, t.q);
    for (const auto& [lambda, r] : {std::pair{e.lambda_minus, e.r_minus}, std::pair{e.lambda_plus, e.r_plus}}) {
      const double a = J[0] * r[0] + J[1] * r[1] - lambda * r[0];
      const double b = J[2] * r[0] + J[3] * r[1] - lambda * r[1];
      eig = std::max(eig, std::hypot(a, b) / norm);
    }
    const BrioEigen be = eigen_brio(s);
    agree = std::max({agree, std::abs(be.lambda1 - e.lambda_minus), std::abs(be.lambda2 - e.lambda_plus)});
    const auto gn = genuine_nonlinearity(t);
    for (double g : gn) gn_outside = std::max({gn_outside, 1.0 - g, g - 3.0});
    hyper = std::max(hyper, 1.0 - (e.lambda_plus - e.lambda_minus));
    const int sign = s.v < 0.0 ? -1 : 1;
    roundtrip = std::max(roundtrip, std::abs(energy(project(t, sign)) - energy(s)) / (1.0 + energy(s)));
  }
  out.add("eigen_identity", eig, 1e-12);
  out.add("eigen_brio_agreement", agree, 1e-12);
  out.add("genuine_nonlinearity_range", std::max(gn_outside, 0.0), 1e-15);
  out.add("strict_hyperbolicity", std::max(hyper, 0.0), 1e-12);
  out.add("energy_projection_roundtrip", roundtrip, 1e-15);
}

// --- curves --------------------------------------------------------------

void curve_checks(Rng& rng, const SuiteHooks& hooks, Collector& out) {
  double drift = 0.0;
  for (double u0 : {-2.0, 0.0, 1.0, 3.0}) {
    const IntegralCurve c = rw_integrate(Family::two, {u0, 0.5 * u0 * u0}, u0 + 5.0);
    for (const CurveSample& s : c.samples) drift = std::max(drift, std::abs(s.q - 0.5 * s.u * s.u));
  }
  out.add("critical_curve_invariance", drift, 1e-8);

  double lambda_drop = 0.0;
  double qtilde_rise = 0.0;
  double slope = 0.0;
  double rw2_below = 0.0;
  double rw2_slope = 0.0;
  for (int i = 0; i < 12; ++i) {
    const TransState base = random_state(rng, 0.05, 2.0, 3.0);
    const Forward1Curve f(base);
    const double limit = f.rarefaction_limit();
    const double target = std::min(base.u + 2.0, base.u + 0.999 * (limit - base.u));
    if (target > base.u) {
      const IntegralCurve c = f.rarefaction().snapshot(target);
      for (std::size_t k = 1; k < c.samples.size(); ++k) {
        const CurveSample& a = c.samples[k - 1];
        const CurveSample& b = c.samples[k];
        lambda_drop = std::max(lambda_drop, a.lambda - b.lambda);
        const double ta = discriminant({a.u, a.q});
        const double tb = discriminant({b.u, b.q});
        qtilde_rise = std::max(qtilde_rise, tb - ta);
        slope = std::max(slope, b.lambda - (b.u - 1.0));
      }
    }
    const Backward2Curve g(base);
    const IntegralCurve c2 = g.rarefaction().snapshot(base.u - 10.0);
    for (const CurveSample& s : c2.samples) {
      rw2_below = std::max(rw2_below, -critical_gap({s.u, s.q}));
      rw2_slope = std::max(rw2_slope, s.u - s.lambda);
    }
  }
  out.add("rw1_lambda_increasing", lambda_drop, 1e-10);
  out.add("rw1_qtilde_decreasing", qtilde_rise, 1e-10);
  out.add("rw1_slope_bound", std::max(slope, 0.0), 1e-12);
  out.add("rw2_backward_above_critical", std::max(rw2_below, 0.0), 1e-12);
  out.add("rw2_backward_slope", std::max(rw2_slope, 0.0), 1e-12);

  double rh = 0.0;
  double lax1 = 0.0;
  double lax2 = 0.0;
  const double steps[] = {1e-6, 1e-3, 0.1, 0.5, 1.0, 2.0, 5.0, 50.0, 1e3};
  for (int i = 0; i < 20; ++i) {
    const TransState left = i == 0 ? TransState{1.0, 5.0} : random_state(rng, 0.1, 2.0, 3.0);
    for (double d : steps) {
      const double ur = left.u - d;
      for (int fam = 1; fam <= 2; ++fam) {
        const double qr = fam == 1 ? hooks.sw1(left, ur) : hooks.sw2(left, ur);
        const TransState right{ur, qr};
        if (!above_critical(right)) {
          // the 1-shock locus never leaves the domain; a state that does is a failure
          if (fam == 1) lax1 = kInf;
          continue;
        }
        const double c = trans_shock_speed(left, right);
        const RhResidual r = rh_residual(left, right, c);
        const double scale = 1.0 + std::abs(energy_flux(left)) + std::abs(energy_flux(right)) +
                             std::abs(c) * (std::abs(left.q) + std::abs(right.q));
        rh = std::max(rh, std::max(std::abs(r.mass), std::abs(r.energy)) / scale);
        Wave w;
        w.family = fam == 1 ? Family::one : Family::two;
        w.left = left;
        w.right = right;
        w.speed_lo = w.speed_hi = c;
        const double violation = -lax_margin(w) / (1.0 + std::abs(c));
        (fam == 1 ? lax1 : lax2) = std::max(fam == 1 ? lax1 : lax2, violation);
      }
    }
  }
  out.add("shock_rankine_hugoniot", rh, 1e-10);
  out.add("shock_lax_family1", std::max(lax1, 0.0), tol_lax);
  out.add("shock_lax_family2", std::max(lax2, 0.0), tol_lax);
}

// --- Riemann -------------------------------------------------------------

void riemann_checks(Rng& rng, int pairs, Collector& out) {
  double residual = 0.0;
  double domain = 0.0;
  double lax = 0.0;
  double shift = 0.0;
  const double margins[] = {0.0, 0.1, 1.0, 10.0};
  for (int i = 0; i <= pairs; ++i) {
    auto [l, r] = i == pairs ? std::pair<TransState, TransState>{{1.0, 5.0}, {0.7, 7.0}}
                             : random_state_pair(rng, margins[i % 4]);
    const WaveFan fan = build_fan(l, r);
    const TransState m = fan.middle;
    const double gap = std::abs(forward_1_curve(l, m.u) - backward_2_curve(r, m.u));
    if (fan.region != Region::degenerate) residual = std::max(residual, gap / (1.0 + std::abs(m.q)));
    domain = std::max(domain, -critical_gap(m));
    for (const Wave& w : fan.waves) {
      if (w.kind == WaveKind::shock) lax = std::max(lax, -lax_margin(w) / (1.0 + std::abs(w.speed_lo)));
    }
    RiemannOptions shifted;
    shifted.scan_shift = 0.37;
    const TransState m2 = solve_middle(l, r, shifted);
    shift = std::max({shift, std::abs(m2.u - m.u), std::abs(m2.q - m.q) / (1.0 + std::abs(m.q))});
  }
  out.add("middle_state_residual", residual, 1e-9);
  out.add("middle_state_domain", std::max(domain, 0.0), 1e-9);
  out.add("fan_shocks_lax", std::max(lax, 0.0), tol_lax);
  out.add("middle_state_bracket_independence", shift, 1e-9);
}

// --- delta solutions -----------------------------------------------------

int expected_cardinality(Region region) {
  switch (region) {
    case Region::I: return 0;
    case Region::II:
    case Region::III: return 1;
    case Region::IV: return 2;
    case Region::degenerate: return 0;
  }
  return 0;
}

std::vector<double> split_speeds(const RegularSegment& seg, int count) {
  double lo = seg.xi_lo;
  double hi = seg.xi_hi;
  if (!std::isfinite(lo) && !std::isfinite(hi)) {
    lo = -1.0;
    hi = 1.0;
  } else if (!std::isfinite(lo)) {
    lo = hi - 2.0;
  } else if (!std::isfinite(hi)) {
    hi = lo + 2.0;
  }
  std::vector<double> s;
  for (int j = 1; j <= count; ++j) s.push_back(lo + (hi - lo) * j / (count + 1));
  return s;
}

struct DeltaStats {
  double weak = 0.0;
  double deficit = 0.0;
  double u_exact = 0.0;
  double ordering = 0.0;
  double lift = 0.0;
  double signs = 0.0;
  double roundtrip = 0.0;
  double middle = 0.0;
  double speeds = 0.0;
  int cardinality_mismatch = 0;
  int minimality_violations = 0;
  double minimality_weak = 0.0;
};

void check_solution(const DeltaSolution& sol, const RegionCase* built, const SuiteOptions& opt,
                    Rng& rng, bool enumerate, DeltaStats& st) {
  const FluxPair flux = brio_flux_pair();
  const RiemannData& data = sol.initial;
  const double scale = 1.0 + std::max({std::abs(data.left.u), std::abs(data.left.v),
                                       std::abs(data.right.u), std::abs(data.right.v)});
  const auto battery = standard_battery(sol);
  const auto res = weak_residuals(sol, battery, flux, opt.weak, opt.exec);
  st.weak = std::max(st.weak, max_residual(res) / scale);

  for (const DeltaSingularity& d : sol.singular) {
    const auto [l, r] = states_around(sol, d.speed);
    const Flux2 fl = brio_flux(l);
    const Flux2 fr = brio_flux(r);
    const double rate = d.speed * (r.v - l.v) - (fr.second - fl.second);
    st.deficit = std::max(st.deficit, std::abs(rate - d.rate));
    st.u_exact = std::max(st.u_exact, std::abs(d.speed * (r.u - l.u) - (fr.first - fl.first)));
  }

  const WaveFan& fan = *sol.fan;
  if (sol.flip_speed) {
    const double c = *sol.flip_speed;
    double lo = -kInf;
    double hi = kInf;
    for (const Wave& w : fan.waves) {
      if (w.family == Family::one) lo = w.speed_hi;
      else hi = w.speed_lo;
    }
    st.ordering = std::max({st.ordering, (lo - c) / (1.0 + std::abs(c)), (c - hi) / (1.0 + std::abs(c))});
  }

  const double span_lo = breakpoints(sol).empty() ? -1.0 : breakpoints(sol).front() - 1.0;
  const double span_hi = breakpoints(sol).empty() ? 1.0 : breakpoints(sol).back() + 1.0;
  const int sign_l = data.left.v < 0.0 || (data.left.v == 0.0 && data.right.v < 0.0) ? -1 : 1;
  const int sign_r = data.right.v < 0.0 || (data.right.v == 0.0 && data.left.v < 0.0) ? -1 : 1;
  for (int k = 0; k < 50; ++k) {
    const double xi = uniform(rng, span_lo, span_hi);
    const BrioState s = sample_regular(sol, xi);
    const TransState t = sample_fan(fan, xi);
    const TransState ls = lift(s);
    st.lift = std::max({st.lift, std::abs(ls.u - t.u), std::abs(ls.q - t.q) / (1.0 + std::abs(t.q))});
    st.signs = std::max(st.signs, std::abs(s.v * s.v - (2.0 * t.q - t.u * t.u)) / (1.0 + std::abs(t.q)));
    const double boundary = sol.flip_speed ? *sol.flip_speed : kInf;
    const int want = xi < boundary ? sign_l : sign_r;
    if (s.v != 0.0 && (s.v < 0.0 ? -1 : 1) != want) st.signs = kInf;
  }

  if (built) {
    if (fan.region != built->region) ++st.roundtrip;
    st.middle = std::max({st.middle, std::abs(fan.middle.u - built->middle.u),
                          std::abs(fan.middle.q - built->middle.q) / (1.0 + std::abs(built->middle.q))});
    for (const Wave& w : fan.waves) {
      if (w.kind != WaveKind::shock) continue;
      const double want = w.family == Family::one ? built->c1 : built->c2;
      st.speeds = std::max(st.speeds, std::abs(w.speed_lo - want));
    }
    if (cardinality(sol) != expected_cardinality(built->region)) ++st.cardinality_mismatch;
  }

  if (!enumerate) return;
  const int base = cardinality(sol);
  for (std::size_t i = 0; i < sol.regular.size(); ++i) {
    if (sol.regular[i].kind != SegmentKind::constant) continue;
    for (int k = 1; k <= 3; ++k) {
      const DeltaSolution alt = insert_flip_pairs(sol, i, split_speeds(sol.regular[i], 2 * k));
      if (cardinality(alt) < base) ++st.minimality_violations;
      const auto alt_battery = standard_battery(alt);
      const auto alt_res = weak_residuals(alt, alt_battery, flux, opt.weak, opt.exec);
      st.minimality_weak = std::max(st.minimality_weak, max_residual(alt_res) / scale);
    }
  }
}

void delta_checks(Rng& rng, const SuiteOptions& opt, Collector& out) {
  DeltaStats st;
  DeltaOptions dopt;
  int enumerated = 0;
  auto finish = [&](const RiemannData& data, const RegionCase* built) {
    try {
      DeltaSolution sol = solve_brio(data, dopt);
      if (opt.hooks.flip_offset && sol.flip_speed) {
        sol = with_flip_speed(sol, sol.fan->middle.u + *opt.hooks.flip_offset);
      }
      check_solution(sol, built, opt, rng, enumerated++ < 8, st);
    } catch (const OrderingViolation&) {
      st.ordering = kInf;
    }
  };
  for (int round = 0; round < opt.delta_rounds; ++round) {
    for (Region region : {Region::I, Region::II, Region::III, Region::IV}) {
      for (bool sign_change : {false, true}) {
        const RegionCase c = random_region_case(rng, region, sign_change);
        finish(c.data, &c);
      }
    }
  }
  // wide rarefactions around a strongly magnetised middle state
  finish({{0.0, 2.5}, {1.0, -2.5}}, nullptr);
  finish({{1.0, 3.0}, {0.7, -3.6}}, nullptr);
  out.add("delta_weak_residual", st.weak, opt.tol_weak);
  out.add("delta_deficit_identity", st.deficit, 1e-12);
  out.add("delta_u_equation_exact", st.u_exact, 1e-10);
  out.add("flip_speed_ordering", std::max(st.ordering, 0.0), 1e-10);
  out.add("lift_consistency", st.lift, 1e-10);
  out.add("sign_bookkeeping", st.signs, 1e-10);
  out.add("region_roundtrip", st.roundtrip, 0.0);
  out.add("construction_middle_state", st.middle, 1e-9);
  out.add("construction_shock_speeds", st.speeds, 1e-9);
  out.add("delta_cardinality", st.cardinality_mismatch, 0.0);
  out.add("minimality_cardinality", st.minimality_violations, 0.0);
  out.add("minimality_alternatives_weak", st.minimality_weak, opt.tol_weak);
}

void fixture_checks(Rng& rng, const SuiteOptions& opt, Collector& out) {
  const DeltaSolution two = nonuniqueness_example(1.0, -1.0, 1.0);
  const DeltaSolution zero = solve_brio({{0.0, 0.0}, {0.0, 0.0}});
  const auto battery = standard_battery(two);
  const double r_two = max_residual(weak_residuals(two, battery, brio_flux_pair(), opt.weak, opt.exec));
  const double r_zero = max_residual(weak_residuals(zero, battery, brio_flux_pair(), opt.weak, opt.exec));
  out.add("nonuniqueness_fixture_weak", std::max(r_two, r_zero), 1e-8);
  out.add("nonuniqueness_cardinality_selects_zero",
          cardinality(two) == 2 && cardinality(zero) == 0 ? 0.0 : 1.0, 0.0);

  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const RiemannData d = random_jump(rng);
    const FluxPair tri = triangular_flux_pair();
    const FluxPair br = brio_flux_pair();
    for (const auto& [flux, branch] : {std::pair{br, JumpBranch::a}, std::pair{br, JumpBranch::b},
                                       std::pair{tri, JumpBranch::a}}) {
      const DeltaSolution s = generic_delta_shock(flux, d, branch);
      const auto b = standard_battery(s);
      worst = std::max(worst, max_residual(weak_residuals(s, b, flux, opt.weak, opt.exec)));
    }
  }
  out.add("generic_delta_shock_weak", worst, 1e-8);

  FvGrid g;
  g.n_cells = 64;
  g.final_time = 0.25;
  const FvField f = fv_solve_trans({0.3, 1.2}, {0.3, 1.2}, g, opt.exec);
  double drift = 0.0;
  for (std::size_t i = 0; i < f.u.size(); ++i) {
    drift = std::max({drift, std::abs(f.u[i] - 0.3), std::abs(f.q[i] - 1.2)});
  }
  out.add("fv_constant_state", drift, 1e-14);
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::pair<BrioState, BrioState> states_around(const DeltaSolution& solution, double speed) {
  const auto& segs = solution.regular;
  for (std::size_t i = 1; i < segs.size(); ++i) {
    if (segs[i].xi_lo != speed) continue;
    const RegularSegment& prev = segs[i - 1];
    const BrioState left = prev.kind == SegmentKind::constant
                               ? prev.state
                               : project(rarefaction_state(*prev.wave, speed), prev.sign);
    return {left, sample_regular(solution, speed)};
  }
  throw PreconditionError("no regular breakpoint at the requested speed");
}

DeltaSolution insert_flip_pairs(const DeltaSolution& solution, std::size_t segment,
                                std::span<const double> speeds) {
  if (segment >= solution.regular.size() ||
      solution.regular[segment].kind != SegmentKind::constant) {
    throw PreconditionError("flip pairs go into a constant segment");
  }
  const RegularSegment& seg = solution.regular[segment];
  double prev = seg.xi_lo;
  for (double s : speeds) {
    if (!(s > prev && s < seg.xi_hi)) throw PreconditionError("flip speeds must increase inside the segment");
    prev = s;
  }
  DeltaSolution out = solution;
  out.regular.clear();
  out.regular.insert(out.regular.end(), solution.regular.begin(), solution.regular.begin() + segment);
  BrioState state = seg.state;
  double lo = seg.xi_lo;
  for (double s : speeds) {
    RegularSegment piece = seg;
    piece.xi_lo = lo;
    piece.xi_hi = s;
    piece.state = state;
    out.regular.push_back(piece);
    const BrioState next{state.u, -state.v};
    const double rate = deficit_rate(state, next, s, Component::v);
    if (std::abs(rate) > tol_zero) out.singular.push_back({s, rate, 0.0, Component::v});
    state = next;
    lo = s;
  }
  RegularSegment last = seg;
  last.xi_lo = lo;
  last.state = state;
  out.regular.push_back(last);
  out.regular.insert(out.regular.end(), solution.regular.begin() + segment + 1, solution.regular.end());
  return out;
}

Report property_suite(const SuiteOptions& options) {
  Report report;
  report.seed = options.seed;
  Collector out(report);
  Rng rng(options.seed);
  core_checks(rng, out);
  curve_checks(rng, options.hooks, out);
  riemann_checks(rng, options.random_pairs, out);
  delta_checks(rng, options, out);
  fixture_checks(rng, options, out);
  return report;
}

}  // namespace brio
