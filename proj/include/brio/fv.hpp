#pragma once

#include <vector>

#include "brio/core.hpp"
#include "brio/kernels.hpp"
#include "brio/riemann.hpp"

namespace brio {

struct FvGrid {
  double x_min = -5.0;
  double x_max = 5.0;
  int n_cells = 1024;
  double cfl = 0.8;
  double final_time = 0.5;
  /// States with |u| or |q| beyond this count as blow-up.
  double bound = 1e8;

  /// Throws PreconditionError on n_cells < 16, cfl outside (0, 0.9], etc.
  void validate() const;
  double dx() const { return (x_max - x_min) / n_cells; }
  double center(int i) const { return x_min + (i + 0.5) * dx(); }
};

struct FvField {
  std::vector<double> u;
  std::vector<double> q;
  double time = 0.0;
  int steps = 0;
};

inline constexpr double tol_fv = 1e-12;

/// Rusanov finite volumes for the transformed system, jump at x = 0.
/// Throws CflViolation if the speed bound is not finite, BlowUp if a state
/// leaves the bounding box.
FvField fv_solve_trans(TransState left, TransState right, const FvGrid& grid,
                       Execution exec = Execution::parallel);

/// Cell averages of the exact self-similar fan at grid.final_time, by
/// 8-point Gauss per cell split at the wave positions.
FvField exact_cell_averages(const WaveFan& fan, const FvGrid& grid);

struct FvError {
  double l1_u = 0.0;
  double l1_q = 0.0;
  double total() const { return l1_u + l1_q; }
};

FvError l1_distance(const FvField& a, const FvField& b, const FvGrid& grid);

FvError compare_fan_fv(const WaveFan& fan, const FvGrid& grid,
                       Execution exec = Execution::parallel);

}  // namespace brio
