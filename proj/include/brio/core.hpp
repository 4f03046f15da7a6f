#pragma once

#include <array>
#include <functional>

namespace brio {

/// Slack allowed below the critical curve q = u^2/2, relative to 1 + u^2.
inline constexpr double tol_domain = 1e-12;
/// Jumps smaller than this are treated as zero in speed formulas.
inline constexpr double tol_zero = 1e-14;

/// State of the original system: the two velocity components.
struct BrioState {
  double u = 0.0;
  double v = 0.0;
};

/// State of the energy-velocity system: velocity and energy q = (u^2+v^2)/2.
struct TransState {
  double u = 0.0;
  double q = 0.0;
};

struct Flux2 {
  double first = 0.0;
  double second = 0.0;
};

/// Flux functions of a generic 2x2 system u_t + f(u,v)_x = 0, v_t + g(u,v)_x = 0.
struct FluxPair {
  std::function<double(BrioState)> f;
  std::function<double(BrioState)> g;
};

struct RiemannData {
  BrioState left;
  BrioState right;
};

struct TransEigen {
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
  std::array<double, 2> r_minus{};
  std::array<double, 2> r_plus{};
};

struct BrioEigen {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

double energy(BrioState s);

TransState lift(BrioState s);

/// Inverse of `lift` on the branch selected by `sign` (+1 or -1).
/// Throws DomainError when the state is below the critical curve by more
/// than the tolerance; rounding-level negatives are clamped to v = 0.
BrioState project(TransState t, int sign);

/// q - u^2/2, i.e. v^2/2 for lifted states.
inline double critical_gap(TransState t) { return t.q - 0.5 * t.u * t.u; }

/// True if q >= u^2/2 up to `tol` * (1 + u^2).
bool above_critical(TransState t, double tol = tol_domain);

Flux2 brio_flux(BrioState s);
Flux2 trans_flux(TransState t);

/// Second component of the transformed flux, (2u-1)q + u^2/2 - 2u^3/3.
double energy_flux(TransState t);

/// 8q - 4u^2 + 1; equals 4v^2 + 1 on lifted states.
inline double discriminant(TransState t) { return 8.0 * t.q - 4.0 * t.u * t.u + 1.0; }

TransEigen eigen_trans(TransState t);

/// Characteristic speeds without the eigenvector work. Rounding-level negative
/// discriminants are clamped to zero.
double lambda_minus(TransState t);
double lambda_plus(TransState t);

/// Genuine-nonlinearity products grad(lambda) . r for both families.
std::array<double, 2> genuine_nonlinearity(TransState t);

/// Jacobian of the transformed flux, row-major.
std::array<double, 4> trans_jacobian(TransState t);

BrioEigen eigen_brio(BrioState s);

/// Shock speed [f]/[u] of the first equation of the original system.
/// Throws DegenerateJump if |U_L - U_R| < tol_zero.
double brio_shock_speed(BrioState l, BrioState r);

FluxPair brio_flux_pair();
/// u_t + (u^2/2)_x = 0, v_t + (v(u-1))_x = 0.
FluxPair triangular_flux_pair();

}  // namespace brio
