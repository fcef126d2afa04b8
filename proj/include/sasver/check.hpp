#pragma once

#include <map>
#include <string>
#include <vector>

namespace sasver {

/// Outcome of one verification check.  `kind` distinguishes how the check
/// was decided:
///   - "exact-identity":    symbolic computation, pass means exact equality;
///   - "numeric-residual":  floating-point residual compared against a
///                          tolerance recorded in params["tol"];
///   - "comparison-report": two quantities computed independently and
///                          reported side by side; status "reported" when the
///                          comparison is informational rather than pass/fail.
struct CheckResult {
  std::string id;        // hierarchical name, e.g. "sasakian-identities.phi-squared"
  std::string kind;      // "exact-identity" | "numeric-residual" | "comparison-report"
  std::string status;    // "pass" | "fail" | "reported"
  double residual = 0.0; // max absolute residual where applicable, else 0
  std::string citation;  // one-line statement of the mathematical claim checked
  std::map<std::string, std::string> params;  // sample counts, seeds, tolerances...
  // Canonical text of a symbolic residual (exact-identity and
  // comparison-report checks); empty when the numeric `residual` applies.
  std::string residual_text;
};

inline bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

}  // namespace sasver
