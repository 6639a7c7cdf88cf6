#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace cwb {

// One acceptance check: what was required, what was measured, verdict.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string observed;  // measured summary; deterministic per seed
  std::string expected;  // required summary
  double seconds = 0.0;  // wall time; never part of the deterministic text
};

struct VerifyReport {
  uint64_t seed = 0;
  bool full = false;
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
};

// Runs the eight acceptance checks.  The quick budget caps ladder depth at 3
// and shrinks the random corpora; full runs everything.  Output is
// deterministic per seed.  CLASPER_THREADS caps internal parallelism.
VerifyReport run_verification(uint64_t seed, bool full);

// Plain-text report, one line per criterion plus a RESULT line.  Byte-stable
// per seed unless include_timings is set.
std::string format_report(const VerifyReport& r, bool include_timings);

}  // namespace cwb
