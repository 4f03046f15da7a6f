#include <doctest.h>

#include <algorithm>
#include <string>

#include "brio/property_suite.hpp"

using namespace brio;

namespace {

bool check_passed(const Report& r, const std::string& name) {
  auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.name == name; });
  REQUIRE(it != r.checks.end());
  return it->passed;
}

}  // namespace

TEST_CASE("the default suite passes") {
  const Report r = property_suite();
  for (const Check& c : r.checks) {
    INFO(c.name << " measured " << c.measured << " tolerance " << c.tolerance);
    CHECK(c.passed);
  }
  CHECK(r.passed());
  CHECK(r.seed == 42);
}

TEST_CASE("a sign error in the first-family shock locus is caught") {
  SuiteOptions o;
  o.random_pairs = 20;
  o.delta_rounds = 1;
  o.hooks.sw1 = [](TransState base, double ur) { return sw2_q(base, ur); };  // wrong root
  const Report r = property_suite(o);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(check_passed(r, "shock_lax_family1"));
}

TEST_CASE("a misplaced v-flip is caught by the weak form") {
  SuiteOptions o;
  o.random_pairs = 20;
  o.delta_rounds = 1;
  o.hooks.flip_offset = 1.0;
  const Report r = property_suite(o);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(check_passed(r, "delta_weak_residual"));
}
