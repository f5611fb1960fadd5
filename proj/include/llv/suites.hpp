#pragma once

#include "llv/report.hpp"
#include "llv/scenario.hpp"

#include <string_view>
#include <vector>

namespace llv {

/// Appends the records of one suite. Each suite draws from its own stream
/// derived from (seed, suite name), so results do not depend on which other
/// suites run. Check failures are recorded; only infrastructure errors throw.
void run_suite(std::string_view name, const Scenario& s, std::vector<CheckRecord>& out);

/// Runs the selected suites (all when none are selected) in canonical order.
Report run_suites(const Scenario& s);

/// (2n - 1)!!
Integer double_factorial_odd(unsigned n);

}  // namespace llv
