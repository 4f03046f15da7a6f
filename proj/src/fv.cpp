#include "brio/fv.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "brio/errors.hpp"

namespace brio {

void FvGrid::validate() const {
  if (n_cells < 16) throw PreconditionError("need at least 16 cells");
  if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw PreconditionError("bad domain bounds");
  }
  if (!(cfl > 0.0 && cfl <= 0.9)) throw PreconditionError("cfl must lie in (0, 0.9]");
  if (!(final_time > 0.0) || !std::isfinite(final_time)) {
    throw PreconditionError("final time must be positive");
  }
  if (!(bound > 0.0)) throw PreconditionError("blow-up bound must be positive");
}

FvField fv_solve_trans(TransState left, TransState right, const FvGrid& grid, Execution exec) {
  grid.validate();
  for (TransState s : {left, right}) {
    if (!above_critical(s)) throw DomainError("FV data below the critical curve");
  }
  const int n = grid.n_cells;
  const double dx = grid.dx();
  FvField f;
  f.u.resize(n);
  f.q.resize(n);
  for (int i = 0; i < n; ++i) {
    const double a = grid.x_min + i * dx;
    // exact averages of the step, so a jump inside a cell is not lost
    const double wl = std::clamp(-a / dx, 0.0, 1.0);
    const double wr = 1.0 - wl;
    f.u[i] = wl * left.u + wr * right.u;
    f.q[i] = std::max(wl * left.q + wr * right.q, 0.5 * f.u[i] * f.u[i]);
  }

  std::vector<double> un(n), qn(n), fu(n + 1), fq(n + 1);
  double t = 0.0;
  while (t < grid.final_time) {
    const double smax = max_wave_speed(exec, f.u, f.q);
    if (!std::isfinite(smax) || !(smax > 0.0)) {
      throw CflViolation("wave speed bound is not a positive finite number");
    }
    double dt = grid.cfl * dx / smax;
    const bool last = t + dt >= grid.final_time;
    if (last) dt = grid.final_time - t;
    rusanov_step(exec, f.u, f.q, dt / dx, fu, fq, un, qn);
    f.u.swap(un);
    f.q.swap(qn);
    t = last ? grid.final_time : t + dt;
    ++f.steps;
    for (int i = 0; i < n; ++i) {
      if (!(std::abs(f.u[i]) <= grid.bound && std::abs(f.q[i]) <= grid.bound)) {
        throw BlowUp("state left the bounding box at step " + std::to_string(f.steps));
      }
    }
  }
  f.time = t;
  return f;
}

FvField exact_cell_averages(const WaveFan& fan, const FvGrid& grid) {
  grid.validate();
  using G = boost::math::quadrature::gauss<double, 8>;
  const double T = grid.final_time;
  std::vector<double> cuts;
  for (const Wave& w : fan.waves) {
    cuts.push_back(w.speed_lo * T);
    cuts.push_back(w.speed_hi * T);
  }
  std::sort(cuts.begin(), cuts.end());

  const int n = grid.n_cells;
  const double dx = grid.dx();
  FvField f;
  f.u.resize(n);
  f.q.resize(n);
  f.time = T;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const double a = grid.x_min + i * dx;
    const double b = a + dx;
    std::vector<double> xs{a};
    for (double c : cuts) {
      if (c > a && c < b) xs.push_back(c);
    }
    xs.push_back(b);
    double su = 0.0;
    double sq = 0.0;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
      const double lo = xs[k];
      const double hi = xs[k + 1];
      if (!(hi > lo)) continue;
      su += G::integrate([&](double x) { return sample_fan(fan, x / T).u; }, lo, hi);
      sq += G::integrate([&](double x) { return sample_fan(fan, x / T).q; }, lo, hi);
    }
    f.u[i] = su / dx;
    f.q[i] = sq / dx;
  }
  return f;
}

FvError l1_distance(const FvField& a, const FvField& b, const FvGrid& grid) {
  const double dx = grid.dx();
  FvError e;
  for (std::size_t i = 0; i < a.u.size(); ++i) {
    e.l1_u += std::abs(a.u[i] - b.u[i]) * dx;
    e.l1_q += std::abs(a.q[i] - b.q[i]) * dx;
  }
  return e;
}

FvError compare_fan_fv(const WaveFan& fan, const FvGrid& grid, Execution exec) {
  const FvField num = fv_solve_trans(fan.left, fan.right, grid, exec);
  const FvField ref = exact_cell_averages(fan, grid);
  return l1_distance(num, ref, grid);
}

}  // namespace brio
