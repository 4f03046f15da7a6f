#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brio/core.hpp"
#include "brio/delta.hpp"
#include "brio/kernels.hpp"
#include "brio/weak_form.hpp"

namespace brio {

struct Check {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
};

struct Report {
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  bool passed() const;
};

/// Replaceable pieces, so deliberately broken variants can be fed through the
/// suite to confirm it notices.
struct SuiteHooks {
  std::function<double(TransState, double)> sw1 = sw1_q;
  std::function<double(TransState, double)> sw2 = sw2_q;
  /// Moves every v-flip shock to U_M + offset.
  std::optional<double> flip_offset;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  WeakOptions weak;
  double tol_weak = tol_weak_default;
  int random_pairs = 200;
  /// Rounds over the 4 regions x {same sign, sign change}.
  int delta_rounds = 3;
  SuiteHooks hooks;
  Execution exec = Execution::parallel;
};

Report property_suite(const SuiteOptions& options = {});

/// Splits constant segment `segment` of `solution` with jumps (U,V) <-> (U,-V)
/// at the given increasing speeds, adding a delta wherever a jump has a
/// Rankine-Hugoniot deficit. Used to enumerate non-admissible competitors.
DeltaSolution insert_flip_pairs(const DeltaSolution& solution, std::size_t segment,
                                std::span<const double> speeds);

/// Left and right regular states on either side of the ray x = speed t.
std::pair<BrioState, BrioState> states_around(const DeltaSolution& solution, double speed);

}  // namespace brio
