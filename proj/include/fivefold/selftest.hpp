#pragma once

// The library's end-to-end verification battery: eleven numbered checks
// covering the frequency tables, the inflation spectra, the geometric
// sampling oracle, the cat-map measures, the Bratteli stage recursions, the
// doubled-shift spectral structure, the four scaled dimension groups, the
// lattice bijection, and the groupoid product.  Check 11 aggregates the
// other ten and the total wall time.
//
// Every check recomputes its data from the public library entry points and
// compares against independently stated expectations; nothing is asserted
// by construction alone.

#include <string>
#include <vector>

namespace fivefold {

struct CriterionResult {
    int number{};
    std::string title;
    bool passed{};
    double seconds{};    // wall time spent inside this check
    std::string detail;  // short deterministic note; failures explain why
};

// Run all checks in order; the returned vector always has 11 entries and
// entry 11 summarizes the run.  Checks never throw: an exception inside a
// check marks it failed with the exception text as detail.
std::vector<CriterionResult> run_selftest();

// "pass  3  <title>" / "FAIL  3  <title>  (<detail>)".  Deterministic:
// timing never appears in the line.
std::string format_selftest_line(const CriterionResult& r);

bool selftest_all_passed(const std::vector<CriterionResult>& results);

} // namespace fivefold
