// Full acceptance sweep: every criterion from the verification harness, run
// at the full budget with the default seed, one pass/fail line each.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "cwb/verify.hpp"

TEST_CASE("acceptance criteria") {
  cwb::VerifyReport rep = cwb::run_verification(1, /*full=*/true);
  std::fputs(cwb::format_report(rep, /*include_timings=*/true).c_str(),
             stdout);
  std::fflush(stdout);
  REQUIRE(rep.criteria.size() == 8);
  for (const auto& c : rep.criteria) {
    CAPTURE(c.name);
    CAPTURE(c.observed);
    CHECK_MESSAGE(c.pass, c.name << ": " << c.observed);
  }
  CHECK(rep.all_pass);
}
