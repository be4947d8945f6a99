// verify.hpp -- end-to-end verification suites

#pragma once

#include <string>

namespace maset {

struct SuiteResult {
  bool ok = false;
  std::string report;  // human-readable, one line per check
};

/// One-peg law: the single equation A(n) = A(n-1) + n and its evaluation
/// A(n) = n(n+1)/2 for n up to 50.
SuiteResult verify_p1();

/// Two-peg Mastermind derivation: 6 queue patterns and all 47 equations
/// against their published forms.
SuiteResult verify_mm2();

/// Two-peg AB derivation: 3 queue patterns and all 17 equations.
SuiteResult verify_ab2();

/// Closed-form agreement of the evaluated systems up to 100 colors.
SuiteResult verify_formulas();

/// Oracle value tables for small color counts.
SuiteResult verify_oracle_tables();

/// Equation-minimum / oracle equivalence over n in [3, 7], including the
/// optimal question per state.
SuiteResult verify_fixpoint_equivalence();

/// Both of the above (the CLI's "fixpoint" suite).
SuiteResult verify_fixpoint_suite();

/// Three-peg pattern and equation counts (slow; minutes to hours).
SuiteResult verify_counts3();

/// Dispatch by suite name: p1, mm2, ab2, formulas, fixpoint, counts3.
/// counts3 requires `slow`.  Throws std::invalid_argument for unknown
/// names or a gated suite without `slow`.
SuiteResult run_suite(const std::string& name, bool slow);

}  // namespace maset
