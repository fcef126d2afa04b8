#pragma once

/// Verification suites and report assembly.
///
/// Each suite bundles related checks into a vector of CheckResult; run_suites
/// executes the requested suites in canonical order and assembles a
/// deterministic report (checks sorted by id, config echoed, summary counts).
/// Reports serialize to JSON (stable schema, lossless round-trip) and to
/// Markdown (one table per suite, citation column).
///
/// Suites:
///   sasakian-identities  structure identities of the standard odd spheres
///   example1-s3          the Legendre foliation of the 3-sphere, both backends
///   exact-identities     closed-form curvature and heat-coefficient identities
///   berger               the metric deformation family on the 3-sphere frame
///   heat-trace           spectral fit of the leading heat coefficients
///   errata               side-by-side reports where published closed forms
///                        disagree with the forms assembled here (reported,
///                        never pass/fail)

#include <cstdint>
#include <string>
#include <vector>

#include "sasver/check.hpp"

namespace sasver::vf {

struct Config {
  std::vector<std::string> suites;  // empty means all, in canonical order
  int n_max = 4;                    // sweep bound for exact identity families
  std::uint64_t seed = 20260816;
  double tol = 1e-9;                // numeric tolerance (embedded-backend
                                    // checks use 10x, recorded per check)
  int samples = 100;                // random points per numeric suite
  int kmax = 2000;                  // spectrum truncation degree
  double t_lo = 2e-4;               // heat-trace fit grid
  double t_hi = 2e-2;
  int t_count = 12;
  std::string format = "json";      // "json" | "markdown" (rendering only)
  std::string out_path;             // empty means stdout (rendering only)
};

/// Canonical suite order.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument on out-of-range values or unknown suite
/// names.
void validate_config(const Config& cfg);

std::vector<CheckResult> suite_sasakian_identities(const Config& cfg);
std::vector<CheckResult> suite_example1_s3(const Config& cfg);
std::vector<CheckResult> suite_exact_identities(const Config& cfg);
std::vector<CheckResult> suite_berger(const Config& cfg);
std::vector<CheckResult> suite_heat_trace(const Config& cfg);
std::vector<CheckResult> suite_errata(const Config& cfg);

struct Report {
  std::string version;
  Config config;
  std::vector<CheckResult> checks;  // sorted by id
  int n_pass = 0;
  int n_fail = 0;
  int n_reported = 0;
  double total_ms = 0.0;
};

/// Runs the configured suites and assembles the report.
Report run_suites(const Config& cfg);

/// JSON with stable field order:
/// {version, config, checks:[{id, kind, status, residual, citation, params}],
///  summary:{pass, fail, reported}, timings:{total_ms}}.
/// Exact and comparison residuals appear as canonical polynomial strings,
/// numeric residuals as numbers.
std::string to_json(const Report& report);

/// Markdown rendering: summary header plus one table per suite.
std::string to_markdown(const Report& report);

/// Parses a JSON report back; round-trips losslessly through to_json.
Report report_from_json(const std::string& text);

/// Flat key=value configuration text ('#' comments and blank lines allowed).
/// Keys: suites (comma-separated), n_max, seed, tol, samples, kmax, t_lo,
/// t_hi, t_count, format, out.  Unknown keys or malformed values throw
/// std::invalid_argument.
Config parse_config_text(const std::string& text);
std::string config_to_text(const Config& cfg);

/// True when no pass/fail-kind check failed (comparison reports never count).
inline bool report_clean(const Report& r) { return r.n_fail == 0; }

}  // namespace sasver::vf
