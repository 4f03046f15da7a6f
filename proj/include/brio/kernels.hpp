#pragma once

#include <span>

namespace brio {

/// Serial reference or OpenMP. Both give bit-identical results: every output
/// element is computed by the same scalar code and reductions are max-only.
enum class Execution { serial, parallel };

const char* execution_name(Execution exec);

/// Largest |lambda_-|, |lambda_+| over the cells of the transformed system.
double max_wave_speed(Execution exec, std::span<const double> u, std::span<const double> q);

/// One forward-Euler Rusanov step of the transformed system with transmissive
/// ends. The local speed at an interface is the largest characteristic speed
/// magnitude of its two cells. `flux_u`, `flux_q` are scratch buffers of
/// n + 1 entries. Updated energies are clamped up to q = u^2/2.
void rusanov_step(Execution exec, std::span<const double> u, std::span<const double> q,
                  double dt_over_dx, std::span<double> flux_u, std::span<double> flux_q,
                  std::span<double> u_next, std::span<double> q_next);

}  // namespace brio
