#include "brio/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace brio {

namespace {

inline double cell_speed(double u, double q) {
  const double root = std::sqrt(std::max(8.0 * q - 4.0 * u * u + 1.0, 0.0));
  const double lm = 0.5 * (2.0 * u - 1.0 - root);
  const double lp = 0.5 * (2.0 * u - 1.0 + root);
  return std::max(std::abs(lm), std::abs(lp));
}

inline double energy_flux_of(double u, double q) {
  return (2.0 * u - 1.0) * q + 0.5 * u * u - (2.0 / 3.0) * u * u * u;
}

inline void interface_flux(double ul, double ql, double ur, double qr, double& fu, double& fq) {
  const double a = std::max(cell_speed(ul, ql), cell_speed(ur, qr));
  // mass flux of u is q; flux of q is G
  fu = 0.5 * (ql + qr) - 0.5 * a * (ur - ul);
  fq = 0.5 * (energy_flux_of(ul, ql) + energy_flux_of(ur, qr)) - 0.5 * a * (qr - ql);
}

// Interface i sits between cells i-1 and i; the ghost cells copy the ends.
inline void flux_at(std::span<const double> u, std::span<const double> q, std::ptrdiff_t i,
                    double& fu, double& fq) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(u.size());
  const std::ptrdiff_t l = std::clamp<std::ptrdiff_t>(i - 1, 0, n - 1);
  const std::ptrdiff_t r = std::clamp<std::ptrdiff_t>(i, 0, n - 1);
  interface_flux(u[l], q[l], u[r], q[r], fu, fq);
}

inline void update_cell(std::span<const double> u, std::span<const double> q, double k,
                        std::span<const double> fu, std::span<const double> fq, std::ptrdiff_t i,
                        std::span<double> un, std::span<double> qn) {
  const double nu = u[i] - k * (fu[i + 1] - fu[i]);
  const double nq = q[i] - k * (fq[i + 1] - fq[i]);
  un[i] = nu;
  qn[i] = std::max(nq, 0.5 * nu * nu);
}

}  // namespace

const char* execution_name(Execution exec) {
  return exec == Execution::serial ? "serial" : "parallel";
}

double max_wave_speed(Execution exec, std::span<const double> u, std::span<const double> q) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(u.size());
  double s = 0.0;
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) s = std::max(s, cell_speed(u[i], q[i]));
    return s;
  }
#pragma omp parallel for reduction(max : s) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) s = std::max(s, cell_speed(u[i], q[i]));
  return s;
}

void rusanov_step(Execution exec, std::span<const double> u, std::span<const double> q,
                  double dt_over_dx, std::span<double> flux_u, std::span<double> flux_q,
                  std::span<double> u_next, std::span<double> q_next) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(u.size());
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i <= n; ++i) flux_at(u, q, i, flux_u[i], flux_q[i]);
    for (std::ptrdiff_t i = 0; i < n; ++i)
      update_cell(u, q, dt_over_dx, flux_u, flux_q, i, u_next, q_next);
    return;
  }
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i <= n; ++i) flux_at(u, q, i, flux_u[i], flux_q[i]);
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      update_cell(u, q, dt_over_dx, flux_u, flux_q, i, u_next, q_next);
  }
}

}  // namespace brio
