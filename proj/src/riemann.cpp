#include "brio/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "brio/errors.hpp"

namespace brio {

const char* region_name(Region region) {
  switch (region) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::IV: return "IV";
    case Region::degenerate: return "Degenerate";
  }
  return "?";
}

namespace {

constexpr int kScanIntervals = 64;
constexpr int kMaxWindowDoublings = 40;

// Characteristic speed with the discriminant clamped at zero; interpolated
// rarefaction states may sit a hair under the critical curve.
double clamped_speed(Family family, double u, double q) {
  const double root = std::sqrt(std::max(8.0 * q - 4.0 * u * u + 1.0, 0.0));
  return family == Family::one ? 0.5 * (2.0 * u - 1.0 - root) : 0.5 * (2.0 * u - 1.0 + root);
}

struct Curves {
  Forward1Curve forward;
  Backward2Curve backward;
};

void require_physical(TransState t, const char* which) {
  if (!std::isfinite(t.u) || !std::isfinite(t.q)) {
    throw DomainError(std::string(which) + " state is not finite");
  }
  if (!above_critical(t)) {
    throw DomainError(std::string(which) + " state lies below the critical curve q = u^2/2");
  }
}

TransState find_middle(const Curves& curves, const RiemannOptions& options) {
  const TransState left = curves.forward.left();
  const TransState right = curves.backward.right();
  auto phi = [&](double u) { return curves.forward(u) - curves.backward(u); };
  auto middle_at = [&](double u) {
    const double q = 0.5 * (curves.forward(u) + curves.backward(u));
    return TransState{u, std::max(q, 0.5 * u * u)};
  };

  // The 1-curve is physical only up to u_cap, and there it sits on the
  // critical curve while the inverse 2-curve never drops below it: phi <= 0.
  const double u_cap = curves.forward.rarefaction_limit();
  const double phi_cap = phi(u_cap);
  const double q_cap = curves.backward(u_cap);
  if (std::abs(phi_cap) <= options.tol_root * (1.0 + std::abs(q_cap))) return middle_at(u_cap);

  const double lo0 = std::min(left.u, right.u);
  const double hi0 = std::max(left.u, right.u);
  auto tolerance = [&](double a, double b) {
    return std::abs(b - a) <= options.tol_root * (1.0 + std::max(std::abs(a), std::abs(b)));
  };

  for (int k = 0; k <= kMaxWindowDoublings; ++k) {
    const double width = std::ldexp(1.0, k);
    double a = lo0 - width;
    double b = hi0 + width;
    a -= std::abs(options.scan_shift) * (b - a);
    b = std::min(b, u_cap);
    if (!(b > a)) continue;
    const double h = (b - a) / kScanIntervals;
    double x_prev = a;
    double f_prev = phi(a);
    if (f_prev == 0.0) return middle_at(a);
    for (int i = 1; i <= kScanIntervals; ++i) {
      const double x = i == kScanIntervals ? b : a + i * h;
      const double f = phi(x);
      if (f == 0.0) return middle_at(x);
      if ((f_prev > 0.0) != (f > 0.0)) {
        std::uintmax_t max_iter = 200;
        const auto [r0, r1] = boost::math::tools::toms748_solve(phi, x_prev, x, f_prev, f,
                                                                tolerance, max_iter);
        const double f0 = std::abs(phi(r0));
        const double f1 = std::abs(phi(r1));
        return middle_at(f0 <= f1 ? r0 : r1);
      }
      x_prev = x;
      f_prev = f;
    }
  }
  throw BracketFailure("no sign change of the curve difference in the scan window");
}

}  // namespace

TransState solve_middle(TransState left, TransState right, const RiemannOptions& options) {
  require_physical(left, "left");
  require_physical(right, "right");
  if (left.u == right.u && left.q == right.q) return left;
  const Curves curves{Forward1Curve(left, options.ode), Backward2Curve(right, options.ode)};
  return find_middle(curves, options);
}

Region classify(TransState left, TransState right, TransState middle,
                const RiemannOptions& options) {
  const bool first_zero = std::abs(middle.u - left.u) <= options.tie_tol;
  const bool second_zero = std::abs(right.u - middle.u) <= options.tie_tol;
  if (first_zero || second_zero) return Region::degenerate;
  const bool rw1 = middle.u > left.u;
  const bool rw2 = right.u > middle.u;
  if (rw1 && rw2) return Region::I;
  if (!rw1 && rw2) return Region::II;
  if (rw1 && !rw2) return Region::III;
  return Region::IV;
}

WaveFan build_fan(TransState left, TransState right, const RiemannOptions& options) {
  require_physical(left, "left");
  require_physical(right, "right");
  WaveFan fan{left, left, right, {}, Region::degenerate};
  if (left.u == right.u && left.q == right.q) return fan;

  const Curves curves{Forward1Curve(left, options.ode), Backward2Curve(right, options.ode)};
  TransState middle = find_middle(curves, options);
  const bool first_zero = std::abs(middle.u - left.u) <= options.tie_tol;
  const bool second_zero = std::abs(right.u - middle.u) <= options.tie_tol;
  if (first_zero) middle = left;
  else if (second_zero) middle = right;
  fan.middle = middle;
  fan.region = classify(left, right, middle, options);

  if (!first_zero) {
    Wave w;
    w.family = Family::one;
    w.left = left;
    w.right = middle;
    if (middle.u < left.u) {
      w.kind = WaveKind::shock;
      w.speed_lo = w.speed_hi = trans_shock_speed(left, middle);
    } else {
      w.kind = WaveKind::rarefaction;
      auto curve =
          std::make_shared<IntegralCurve>(curves.forward.rarefaction().snapshot(middle.u));
      w.speed_lo = curve->samples.front().lambda;
      w.speed_hi = curve->samples.back().lambda;
      w.curve = std::move(curve);
    }
    fan.waves.push_back(std::move(w));
  }
  if (!second_zero && !(first_zero && middle.u == right.u)) {
    Wave w;
    w.family = Family::two;
    w.left = middle;
    w.right = right;
    if (right.u < middle.u) {
      w.kind = WaveKind::shock;
      w.speed_lo = w.speed_hi = trans_shock_speed(middle, right);
    } else {
      w.kind = WaveKind::rarefaction;
      auto curve =
          std::make_shared<IntegralCurve>(curves.backward.rarefaction().snapshot(middle.u));
      w.speed_lo = curve->samples.back().lambda;
      w.speed_hi = curve->samples.front().lambda;
      w.curve = std::move(curve);
    }
    fan.waves.push_back(std::move(w));
  }
  return fan;
}

double lax_margin(const Wave& wave) {
  if (wave.kind != WaveKind::shock) return 0.0;
  const double c = wave.speed_lo;
  const TransEigen l = eigen_trans(wave.left);
  const TransEigen r = eigen_trans(wave.right);
  if (wave.family == Family::one) {
    return std::min({l.lambda_minus - c, c - r.lambda_minus, r.lambda_plus - c});
  }
  return std::min({l.lambda_plus - c, c - r.lambda_plus, c - l.lambda_minus});
}

bool lax_check(const Wave& wave, double tol) {
  if (wave.kind != WaveKind::shock) return true;
  return lax_margin(wave) >= -tol * (1.0 + std::abs(wave.speed_lo));
}

TransState rarefaction_state(const Wave& wave, double xi) {
  const IntegralCurve& curve = *wave.curve;
  const Family family = wave.family;
  double lo = curve.u_min();
  double hi = curve.u_max();
  auto state = [&](double u) {
    const double q = curve.q_at(u);
    return TransState{u, std::max(q, 0.5 * u * u)};
  };
  auto speed = [&](double u) {
    const TransState s = state(u);
    return clamped_speed(family, s.u, s.q);
  };
  double g_lo = speed(lo) - xi;
  double g_hi = speed(hi) - xi;
  if (g_lo >= 0.0) return state(lo);
  if (g_hi <= 0.0) return state(hi);

  // lambda is increasing in u along the curve (genuine nonlinearity), so a
  // Newton step kept inside the bracket converges; bisection otherwise.
  double u = lo - g_lo * (hi - lo) / (g_hi - g_lo);
  for (int it = 0; it < 200; ++it) {
    const TransState s = state(u);
    const double g = clamped_speed(family, s.u, s.q) - xi;
    if (g == 0.0) break;
    (g < 0.0 ? lo : hi) = u;
    if (hi - lo <= 4e-16 * (1.0 + std::abs(u))) break;
    const double d = std::max(discriminant(s), 1e-300);
    const double slope = family == Family::one ? 2.0 + 1.0 / std::sqrt(d) : 2.0 - 1.0 / std::sqrt(d);
    double next = u - g / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - u) <= 1e-16 * (1.0 + std::abs(u))) {
      u = next;
      break;
    }
    u = next;
  }
  return state(u);
}

TransState sample_fan(const WaveFan& fan, double xi) {
  for (const Wave& w : fan.waves) {
    if (xi < w.speed_lo) return w.left;
    if (w.kind == WaveKind::rarefaction && xi < w.speed_hi) return rarefaction_state(w, xi);
  }
  return fan.right;
}

}  // namespace brio
