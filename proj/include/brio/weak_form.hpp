#pragma once

#include <span>
#include <vector>

#include "brio/core.hpp"
#include "brio/delta.hpp"
#include "brio/kernels.hpp"

namespace brio {

/// phi(x,t) = B((x-x0)/wx) B((t-t0)/wt) with B(s) = (1-s^2)^p on |s| <= 1.
struct TestFunction {
  double x0 = 0.0;
  double t0 = 0.0;
  double wx = 1.0;
  double wt = 1.0;
  int p = 4;

  double value(double x, double t) const;
  double dx(double x, double t) const;
  double dt(double x, double t) const;
  /// Throws PreconditionError unless p >= 3 and both half-widths are positive.
  void validate() const;
};

struct WeakOptions {
  int nodes = 32;   ///< Gauss-Legendre nodes per panel: 4, 8, 16, 32 or 64
  int panels = 1;   ///< equal sub-panels per smooth piece
  /// Weight the singular line terms by sqrt(1 + c^2).
  bool arclength = false;
};

struct WeakResidual {
  double r_u = 0.0;
  double r_v = 0.0;
  double max_abs() const;
};

/// Residuals of the two integral identities
///   int int (U phi_t + f phi_x) + int U0 phi(x,0) dx + line terms = 0
/// and the same with (V, g). Line terms are int strength(t) d/dt phi(ct, t) dt
/// on the equation the singularity lives on.
WeakResidual weak_residual(const DeltaSolution& solution, const TestFunction& phi,
                           const FluxPair& flux, const WeakOptions& options = {});

WeakResidual weak_residual(const DeltaSolution& solution, const TestFunction& phi,
                           const WeakOptions& options = {});

std::vector<WeakResidual> weak_residuals(const DeltaSolution& solution,
                                         std::span<const TestFunction> phis,
                                         const FluxPair& flux, const WeakOptions& options = {},
                                         Execution exec = Execution::parallel);

/// 25 bumps on a 5x5 grid of centers spread over the fan up to t = horizon.
/// The two earliest rows reach across t = 0.
std::vector<TestFunction> standard_battery(const DeltaSolution& solution, double horizon = 1.0);

double max_residual(std::span<const WeakResidual> residuals);

inline constexpr double tol_weak_default = 1e-7;

/// base * (1 + largest |u|, |v| of the data).
double weak_tolerance(const RiemannData& data, double base = tol_weak_default);

}  // namespace brio
