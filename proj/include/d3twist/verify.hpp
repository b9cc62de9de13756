#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "d3twist/actions.hpp"
#include "d3twist/oracle.hpp"

namespace d3twist {

struct VerifyOptions {
  Integer bound = 30;
  std::size_t depth = 12;
  TwistFn twist = apply_twist;
  unsigned threads = 1;
  std::size_t max_vertices = 20'000'000;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;
  double seconds = 0;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Cross-checks every closed form against its independent route:
/// update rules against twist formulas, jumps against twists, phi against
/// its inverse, ECF invariants, BFS distances against untwist and ECF
/// length, orbit censuses, the covering of Cayley graphs and the cycle
/// structure of the torus graph. ResourceLimit propagates to the caller.
VerifyReport run_verification(const VerifyOptions& options);

std::string format_report(const VerifyReport& report);

/// t_c with the output of its region-A branch negated, and t_d derived
/// from it by central symmetry. A deliberately wrong action for checking
/// that verification catches faults.
DynnikovCoord mutated_twist(Generator g, const DynnikovCoord& d);

}  // namespace d3twist
