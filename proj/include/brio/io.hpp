#pragma once

#include <exception>
#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "brio/delta.hpp"
#include "brio/fv.hpp"
#include "brio/property_suite.hpp"
#include "brio/riemann.hpp"

namespace brio {

using Json = nlohmann::ordered_json;

Json to_json(BrioState s);
Json to_json(TransState t);
Json to_json(const Wave& wave);
Json to_json(const WaveFan& fan);
/// Infinite segment ends are written as null.
Json to_json(const DeltaSolution& solution);
Json to_json(const Report& report);

/// `{"error": {"kind": ..., "message": ...}}`
Json error_json(const std::exception& error);

/// Round-trip decimal (17 significant digits).
std::string format_double(double x);

struct SampleRow {
  double x = 0.0;
  BrioState state;
};

/// CSV `x,u,v`.
void write_sample_csv(std::ostream& os, std::span<const SampleRow> rows);

struct RefinementRow {
  int cells = 0;
  FvError error;
};

/// CSV `cells,l1_u,l1_q,l1_total,ratio`; ratio is previous total / this total.
void write_refinement_csv(std::ostream& os, std::span<const RefinementRow> rows);

}  // namespace brio
