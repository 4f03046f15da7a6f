#include "brio/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "brio/errors.hpp"

namespace brio {

namespace {

// Discriminant with rounding-level negatives removed.
double clamped_discriminant(TransState t) {
  const double d = discriminant(t);
  if (d >= 0.0) return d;
  if (d < -tol_domain * (1.0 + t.u * t.u)) {
    throw DomainError("negative discriminant 8q-4u^2+1 = " + std::to_string(d));
  }
  return 0.0;
}

}  // namespace

double energy(BrioState s) { return 0.5 * (s.u * s.u + s.v * s.v); }

TransState lift(BrioState s) { return {s.u, energy(s)}; }

BrioState project(TransState t, int sign) {
  const double two_gap = 2.0 * t.q - t.u * t.u;
  if (two_gap < -tol_domain * (1.0 + t.u * t.u)) {
    throw DomainError("state (" + std::to_string(t.u) + ", " + std::to_string(t.q) +
                      ") lies below the critical curve");
  }
  const double v = std::sqrt(std::max(two_gap, 0.0));
  return {t.u, sign < 0 ? -v : v};
}

bool above_critical(TransState t, double tol) {
  return critical_gap(t) >= -tol * (1.0 + t.u * t.u);
}

Flux2 brio_flux(BrioState s) { return {energy(s), s.v * (s.u - 1.0)}; }

double energy_flux(TransState t) {
  const double u = t.u;
  return (2.0 * u - 1.0) * t.q + 0.5 * u * u - 2.0 * u * u * u / 3.0;
}

Flux2 trans_flux(TransState t) { return {t.q, energy_flux(t)}; }

double lambda_minus(TransState t) {
  return 0.5 * (2.0 * t.u - 1.0 - std::sqrt(clamped_discriminant(t)));
}

double lambda_plus(TransState t) {
  return 0.5 * (2.0 * t.u - 1.0 + std::sqrt(clamped_discriminant(t)));
}

TransEigen eigen_trans(TransState t) {
  const double root = std::sqrt(clamped_discriminant(t));
  TransEigen e;
  e.lambda_minus = 0.5 * (2.0 * t.u - 1.0 - root);
  e.lambda_plus = 0.5 * (2.0 * t.u - 1.0 + root);
  // sqrt(2q - u^2 + 1/4) == root / 2
  e.r_minus = {1.0, t.u - 0.5 - 0.5 * root};
  e.r_plus = {1.0, t.u - 0.5 + 0.5 * root};
  return e;
}

std::array<double, 2> genuine_nonlinearity(TransState t) {
  const double d = discriminant(t);
  if (!(d > 0.0)) {
    throw DomainError("genuine nonlinearity undefined for discriminant " + std::to_string(d));
  }
  const double inv = 1.0 / std::sqrt(d);
  return {2.0 + inv, 2.0 - inv};
}

std::array<double, 4> trans_jacobian(TransState t) {
  return {0.0, 1.0, 2.0 * t.q + t.u - 2.0 * t.u * t.u, 2.0 * t.u - 1.0};
}

BrioEigen eigen_brio(BrioState s) {
  const double root = std::sqrt(s.v * s.v + 0.25);
  return {s.u - 0.5 - root, s.u - 0.5 + root};
}

double brio_shock_speed(BrioState l, BrioState r) {
  const double du = l.u - r.u;
  if (std::abs(du) < tol_zero) {
    throw DegenerateJump("brio_shock_speed: U_L == U_R, use [g]/[v] instead");
  }
  return 0.5 * (l.u + r.u) + (l.v * l.v - r.v * r.v) / (2.0 * du);
}

FluxPair brio_flux_pair() {
  return {[](BrioState s) { return energy(s); },
          [](BrioState s) { return s.v * (s.u - 1.0); }};
}

FluxPair triangular_flux_pair() {
  return {[](BrioState s) { return 0.5 * s.u * s.u; },
          [](BrioState s) { return s.v * (s.u - 1.0); }};
}

}  // namespace brio
