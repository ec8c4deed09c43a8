#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "thermopurity/thermal.hpp"

namespace thermopurity {

enum class VerifyLevel { quick, full };

struct CheckResult {
  std::string name;
  double tolerance;
  double observed;  // worst deviation (or observed value for threshold checks)
  bool pass;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

struct VerifyOptions {
  // Test hook: applied to directly-evaluated diagonal coefficients before the
  // shorthand-identity check, so the harness itself can be mutation-tested.
  std::function<DiagonalCoeffs(DiagonalCoeffs)> diag_mutator;
};

/// quick runs the closed-form identity suites; full adds the quadrature and
/// grid-propagation oracles. Failures are reported, not raised.
VerifyReport verify(VerifyLevel level, const VerifyOptions& options = {});

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace thermopurity
