#include "brio/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "brio/errors.hpp"

namespace brio {

namespace {

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

const char* component_name(Component c) { return c == Component::u ? "u" : "v"; }

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json to_json(BrioState s) { return Json{{"u", s.u}, {"v", s.v}}; }

Json to_json(TransState t) { return Json{{"u", t.u}, {"q", t.q}}; }

Json to_json(const Wave& wave) {
  Json j;
  j["kind"] = wave.kind == WaveKind::shock ? "shock" : "rarefaction";
  j["family"] = static_cast<int>(wave.family);
  j["left"] = to_json(wave.left);
  j["right"] = to_json(wave.right);
  j["speed_lo"] = wave.speed_lo;
  j["speed_hi"] = wave.speed_hi;
  return j;
}

Json to_json(const WaveFan& fan) {
  Json j;
  j["left"] = to_json(fan.left);
  j["middle"] = to_json(fan.middle);
  j["right"] = to_json(fan.right);
  j["region"] = region_name(fan.region);
  j["waves"] = Json::array();
  for (const Wave& w : fan.waves) j["waves"].push_back(to_json(w));
  return j;
}

Json to_json(const DeltaSolution& solution) {
  Json j;
  j["initial"] = {{"left", to_json(solution.initial.left)},
                  {"right", to_json(solution.initial.right)}};
  j["regular"] = Json::array();
  for (const RegularSegment& s : solution.regular) {
    Json seg;
    seg["xi_lo"] = finite_or_null(s.xi_lo);
    seg["xi_hi"] = finite_or_null(s.xi_hi);
    if (s.kind == SegmentKind::constant) {
      seg["kind"] = "constant";
      seg["state"] = to_json(s.state);
    } else {
      seg["kind"] = "rarefaction";
      seg["family"] = static_cast<int>(s.wave->family);
      seg["sign"] = s.sign;
      seg["left"] = to_json(s.wave->left);
      seg["right"] = to_json(s.wave->right);
    }
    j["regular"].push_back(seg);
  }
  j["singular"] = Json::array();
  for (const DeltaSingularity& d : solution.singular) {
    j["singular"].push_back({{"speed", d.speed},
                             {"rate", d.rate},
                             {"constant", d.constant},
                             {"component", component_name(d.component)}});
  }
  j["options"] = {{"flip_speed", flip_speed_name(solution.flip_mode)}};
  j["flip_shock_speed"] = solution.flip_speed ? Json(*solution.flip_speed) : Json(nullptr);
  j["fan"] = solution.fan ? to_json(*solution.fan) : Json(nullptr);
  return j;
}

Json to_json(const Report& report) {
  Json j;
  j["checks"] = Json::array();
  for (const Check& c : report.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"passed", c.passed},
                           {"measured", finite_or_null(c.measured)},
                           {"tolerance", c.tolerance}});
  }
  j["seed"] = report.seed;
  j["passed"] = report.passed();
  return j;
}

Json error_json(const std::exception& error) {
  const auto* e = dynamic_cast<const Error*>(&error);
  return {{"error", {{"kind", e ? e->kind() : "InternalError"}, {"message", error.what()}}}};
}

void write_sample_csv(std::ostream& os, std::span<const SampleRow> rows) {
  os << "x,u,v\n";
  for (const SampleRow& r : rows) {
    os << format_double(r.x) << ',' << format_double(r.state.u) << ','
       << format_double(r.state.v) << '\n';
  }
}

void write_refinement_csv(std::ostream& os, std::span<const RefinementRow> rows) {
  os << "cells,l1_u,l1_q,l1_total,ratio\n";
  double prev = 0.0;
  for (const RefinementRow& r : rows) {
    os << r.cells << ',' << format_double(r.error.l1_u) << ',' << format_double(r.error.l1_q)
       << ',' << format_double(r.error.total()) << ',';
    if (prev > 0.0) os << format_double(prev / r.error.total());
    os << '\n';
    prev = r.error.total();
  }
}

}  // namespace brio
