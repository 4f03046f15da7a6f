#include "brio/weak_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "brio/errors.hpp"
#include "brio/riemann.hpp"

namespace brio {

namespace {

double bump(double s, int p) {
  if (std::abs(s) >= 1.0) return 0.0;
  return std::pow(1.0 - s * s, p);
}

double bump_prime(double s, int p) {
  if (std::abs(s) >= 1.0) return 0.0;
  return -2.0 * p * s * std::pow(1.0 - s * s, p - 1);
}

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

template <unsigned N>
Rule expand_rule() {
  using G = boost::math::quadrature::gauss<double, N>;
  const auto& a = G::abscissa();
  const auto& wt = G::weights();
  Rule r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) {
      r.x.push_back(0.0);
      r.w.push_back(wt[i]);
      continue;
    }
    r.x.push_back(-a[i]);
    r.w.push_back(wt[i]);
    r.x.push_back(a[i]);
    r.w.push_back(wt[i]);
  }
  return r;
}

const Rule& rule(int nodes) {
  static const Rule r4 = expand_rule<4>();
  static const Rule r8 = expand_rule<8>();
  static const Rule r16 = expand_rule<16>();
  static const Rule r32 = expand_rule<32>();
  static const Rule r64 = expand_rule<64>();
  switch (nodes) {
    case 4: return r4;
    case 8: return r8;
    case 16: return r16;
    case 32: return r32;
    case 64: return r64;
    default: throw PreconditionError("unsupported Gauss-Legendre order " + std::to_string(nodes));
  }
}

// Neumaier's compensated sum.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Pair {
  double u = 0.0;
  double v = 0.0;
};

// Applies `fn(x)` -> weight-free integrand on every panel of [a, b].
template <class Fn>
Pair integrate(double a, double b, const Rule& r, int panels, Fn&& fn) {
  Pair out;
  if (!(b > a)) return out;
  const double h = (b - a) / panels;
  for (int k = 0; k < panels; ++k) {
    const double lo = a + k * h;
    const double hi = k + 1 == panels ? b : lo + h;
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    Accumulator su, sv;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
      const Pair f = fn(mid + half * r.x[i]);
      su.add(r.w[i] * f.u);
      sv.add(r.w[i] * f.v);
    }
    out.u += half * su.value();
    out.v += half * sv.value();
  }
  return out;
}

class Evaluator {
 public:
  Evaluator(const DeltaSolution& sol, const TestFunction& phi, const FluxPair& flux,
            const WeakOptions& opt)
      : sol_(sol), phi_(phi), flux_(flux), opt_(opt), rule_(rule(opt.nodes)) {
    if (opt.panels < 1) throw PreconditionError("panel count must be positive");
    xi_ = breakpoints(sol);
  }

  WeakResidual run() const {
    const double ta = std::max(0.0, phi_.t0 - phi_.wt);
    const double tb = phi_.t0 + phi_.wt;
    const double xa = phi_.x0 - phi_.wx;
    const double xb = phi_.x0 + phi_.wx;
    Accumulator ru, rv;
    if (tb > 0.0) {
      std::vector<double> ts{ta, tb};
      for (double xi : xi_) {
        if (xi == 0.0) continue;
        for (double edge : {xa, xb}) {
          const double t = edge / xi;
          if (t > ta && t < tb) ts.push_back(t);
        }
      }
      std::sort(ts.begin(), ts.end());
      for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
        const Pair p = integrate(ts[k], ts[k + 1], rule_, opt_.panels,
                                 [&](double t) { return slice(t, xa, xb); });
        ru.add(p.u);
        rv.add(p.v);
      }
      for (const DeltaSingularity& d : sol_.singular) {
        const Pair p = line_term(d, ta, tb, xa, xb);
        ru.add(p.u);
        rv.add(p.v);
      }
    }
    if (ta == 0.0) {
      const Pair p = initial_term(xa, xb);
      ru.add(p.u);
      rv.add(p.v);
    }
    WeakResidual out{ru.value(), rv.value()};
    if (!std::isfinite(out.r_u) || !std::isfinite(out.r_v)) {
      throw QuadratureFailure("non-finite weak residual");
    }
    return out;
  }

 private:
  Pair integrand(BrioState s, double x, double t) const {
    const double pt = phi_.dt(x, t);
    const double px = phi_.dx(x, t);
    return {s.u * pt + flux_.f(s) * px, s.v * pt + flux_.g(s) * px};
  }

  const RegularSegment& segment_at(double xi) const {
    const auto& segs = sol_.regular;
    auto it = std::upper_bound(segs.begin(), segs.end(), xi,
                               [](double x, const RegularSegment& s) { return x < s.xi_lo; });
    return it == segs.begin() ? segs.front() : *(it - 1);
  }

  // x-integral at fixed t > 0, split at every ray.
  Pair slice(double t, double xa, double xb) const {
    std::vector<double> xs{xa};
    for (double xi : xi_) {
      const double x = xi * t;
      if (x > xa && x < xb) xs.push_back(x);
    }
    xs.push_back(xb);
    Pair total;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
      const double a = xs[k];
      const double b = xs[k + 1];
      if (!(b > a)) continue;
      const RegularSegment& seg = segment_at(0.5 * (a + b) / t);
      Pair p;
      if (seg.kind == SegmentKind::constant) {
        p = integrate(a, b, rule_, opt_.panels,
                      [&](double x) { return integrand(seg.state, x, t); });
      } else {
        p = fan_piece(seg, a, b, t);
      }
      total.u += p.u;
      total.v += p.v;
    }
    return total;
  }

  // Inside a rarefaction the integral runs along the curve: x = t lambda(u),
  // dx = t (grad lambda . r) du.
  Pair fan_piece(const RegularSegment& seg, double a, double b, double t) const {
    const Wave& wave = *seg.wave;
    const double ua = rarefaction_state(wave, a / t).u;
    const double ub = rarefaction_state(wave, b / t).u;
    const IntegralCurve& curve = *wave.curve;
    const double sgn = wave.family == Family::one ? 1.0 : -1.0;
    return integrate(ua, ub, rule_, opt_.panels, [&](double u) {
      const double q = std::max(curve.q_at(u), 0.5 * u * u);
      const TransState ts{u, q};
      const double root = std::sqrt(std::max(discriminant(ts), 1.0));
      const double lambda = 0.5 * (2.0 * u - 1.0 + (wave.family == Family::one ? -root : root));
      const double jac = t * (2.0 + sgn / root);
      const Pair f = integrand(project(ts, seg.sign), t * lambda, t);
      return Pair{f.u * jac, f.v * jac};
    });
  }

  Pair line_term(const DeltaSingularity& d, double ta, double tb, double xa, double xb) const {
    std::vector<double> ts{ta, tb};
    if (d.speed != 0.0) {
      for (double edge : {xa, xb}) {
        const double t = edge / d.speed;
        if (t > ta && t < tb) ts.push_back(t);
      }
    }
    std::sort(ts.begin(), ts.end());
    const double weight = opt_.arclength ? std::sqrt(1.0 + d.speed * d.speed) : 1.0;
    Pair out;
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
      const Pair p = integrate(ts[k], ts[k + 1], rule_, opt_.panels, [&](double t) {
        const double x = d.speed * t;
        const double tangential = phi_.dt(x, t) + d.speed * phi_.dx(x, t);
        const double val = weight * d.strength(t) * tangential;
        return d.component == Component::u ? Pair{val, 0.0} : Pair{0.0, val};
      });
      out.u += p.u;
      out.v += p.v;
    }
    return out;
  }

  Pair initial_term(double xa, double xb) const {
    const BrioState l = sol_.initial.left;
    const BrioState r = sol_.initial.right;
    auto side = [&](double a, double b, BrioState s) {
      return integrate(a, b, rule_, opt_.panels, [&](double x) {
        const double w = phi_.value(x, 0.0);
        return Pair{s.u * w, s.v * w};
      });
    };
    const Pair pl = side(xa, std::min(xb, 0.0), l);
    const Pair pr = side(std::max(xa, 0.0), xb, r);
    return {pl.u + pr.u, pl.v + pr.v};
  }

  const DeltaSolution& sol_;
  const TestFunction& phi_;
  const FluxPair& flux_;
  const WeakOptions& opt_;
  const Rule& rule_;
  std::vector<double> xi_;
};

}  // namespace

double TestFunction::value(double x, double t) const {
  return bump((x - x0) / wx, p) * bump((t - t0) / wt, p);
}

double TestFunction::dx(double x, double t) const {
  return bump_prime((x - x0) / wx, p) / wx * bump((t - t0) / wt, p);
}

double TestFunction::dt(double x, double t) const {
  return bump((x - x0) / wx, p) * bump_prime((t - t0) / wt, p) / wt;
}

void TestFunction::validate() const {
  if (p < 3) throw PreconditionError("test function exponent must be at least 3");
  if (!(wx > 0.0) || !(wt > 0.0)) throw PreconditionError("test function half-widths must be positive");
  if (!std::isfinite(x0) || !std::isfinite(t0) || !std::isfinite(wx) || !std::isfinite(wt)) {
    throw PreconditionError("test function parameters must be finite");
  }
}

double WeakResidual::max_abs() const { return std::max(std::abs(r_u), std::abs(r_v)); }

WeakResidual weak_residual(const DeltaSolution& solution, const TestFunction& phi,
                           const FluxPair& flux, const WeakOptions& options) {
  phi.validate();
  if (solution.regular.empty()) throw PreconditionError("solution has no regular part");
  return Evaluator(solution, phi, flux, options).run();
}

WeakResidual weak_residual(const DeltaSolution& solution, const TestFunction& phi,
                           const WeakOptions& options) {
  return weak_residual(solution, phi, brio_flux_pair(), options);
}

std::vector<WeakResidual> weak_residuals(const DeltaSolution& solution,
                                         std::span<const TestFunction> phis,
                                         const FluxPair& flux, const WeakOptions& options,
                                         Execution exec) {
  std::vector<WeakResidual> out(phis.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(phis.size());
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = weak_residual(solution, phis[i], flux, options);
    return out;
  }
  // Exceptions may not leave a parallel region; carry the first one out.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = weak_residual(solution, phis[i], flux, options);
    } catch (...) {
#pragma omp critical(brio_weak_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<TestFunction> standard_battery(const DeltaSolution& solution, double horizon) {
  double lo = -1.0;
  double hi = 1.0;
  const std::vector<double> xs = breakpoints(solution);
  if (!xs.empty()) {
    lo = xs.front() - 0.5;
    hi = xs.back() + 0.5;
  }
  const double span = hi - lo;
  std::vector<TestFunction> out;
  out.reserve(25);
  for (int i = 0; i < 5; ++i) {
    const double t0 = horizon * (0.15 + 0.2 * i);
    const double wt = 0.35 * horizon;
    // supports widen with t so every row sees the whole fan
    const double wx = std::max(0.5, 0.35 * span * (t0 + wt));
    for (int j = 0; j < 5; ++j) {
      TestFunction phi;
      phi.t0 = t0;
      phi.wt = wt;
      phi.x0 = t0 * (lo + 0.25 * j * span);
      phi.wx = wx;
      out.push_back(phi);
    }
  }
  return out;
}

double max_residual(std::span<const WeakResidual> residuals) {
  double m = 0.0;
  for (const WeakResidual& r : residuals) m = std::max(m, r.max_abs());
  return m;
}

double weak_tolerance(const RiemannData& data, double base) {
  const double m = std::max({std::abs(data.left.u), std::abs(data.left.v), std::abs(data.right.u),
                             std::abs(data.right.v)});
  return base * (1.0 + m);
}

}  // namespace brio
