// sasver: command-line front end for the verification suites.
//
//   sasver verify [options]     run suites, print/write a report, exit 0 iff clean
//   sasver report <file>        re-render a stored JSON report
//   sasver list [options]       enumerate the checks a run would perform
//
// Usage and configuration errors exit with status 2; a report containing at
// least one failed check exits with status 1.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sasver/verify.hpp"

namespace {

namespace vf = sasver::vf;

// Writes `text` to `out_path`, or stdout when the path is empty.
void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot open output file: " + out_path);
  os << text;
  if (!os) throw std::runtime_error("failed writing output file: " + out_path);
}

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

// Options shared by `verify` and `list`.  A config file (if given) is applied
// first; any flag passed explicitly on the command line overrides it.
struct RunFlags {
  std::string config_path;
  std::vector<std::string> suites;
  int n_max = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  int samples = 0;
  int kmax = 0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  int t_count = 0;

  CLI::Option* o_suite = nullptr;
  CLI::Option* o_n_max = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_tol = nullptr;
  CLI::Option* o_samples = nullptr;
  CLI::Option* o_kmax = nullptr;
  CLI::Option* o_t_lo = nullptr;
  CLI::Option* o_t_hi = nullptr;
  CLI::Option* o_t_count = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path,
                    "flat key=value config file; explicit flags override it");
    o_suite = cmd->add_option("--suite", suites,
                              "suite to run (repeatable; default: all)");
    o_n_max = cmd->add_option("--n-max", n_max, "largest leaf dimension for identity sweeps");
    o_seed = cmd->add_option("--seed", seed, "RNG seed for sampled checks");
    o_tol = cmd->add_option("--tol", tol, "numeric tolerance for sampled checks");
    o_samples = cmd->add_option("--samples", samples, "sample points per numeric check");
    o_kmax = cmd->add_option("--kmax", kmax, "eigenvalue truncation level for heat traces");
    o_t_lo = cmd->add_option("--t-lo", t_lo, "smallest heat time in the fit grid");
    o_t_hi = cmd->add_option("--t-hi", t_hi, "largest heat time in the fit grid");
    o_t_count = cmd->add_option("--t-count", t_count, "number of heat times in the fit grid");
  }

  vf::Config resolve() const {
    vf::Config cfg;
    if (!config_path.empty()) cfg = vf::parse_config_text(read_file(config_path));
    if (o_suite->count()) cfg.suites = suites;
    if (o_n_max->count()) cfg.n_max = n_max;
    if (o_seed->count()) cfg.seed = seed;
    if (o_tol->count()) cfg.tol = tol;
    if (o_samples->count()) cfg.samples = samples;
    if (o_kmax->count()) cfg.kmax = kmax;
    if (o_t_lo->count()) cfg.t_lo = t_lo;
    if (o_t_hi->count()) cfg.t_hi = t_hi;
    if (o_t_count->count()) cfg.t_count = t_count;
    return cfg;
  }
};

std::string render(const vf::Report& report, const std::string& format) {
  if (format == "json") return vf::to_json(report);
  if (format == "markdown") return vf::to_markdown(report);
  throw std::invalid_argument("unknown format: " + format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for curvature and spectral identities of "
               "Sasakian space forms and their Legendre foliations"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run verification suites and emit a report");
  RunFlags vflags;
  vflags.attach(verify);
  std::string v_format;
  std::string v_out;
  auto* o_format =
      verify->add_option("--format", v_format, "output format: json or markdown");
  verify->add_option("--out", v_out, "write the report to this file instead of stdout");

  auto* report_cmd = app.add_subcommand("report", "re-render a stored JSON report");
  std::string r_input;
  std::string r_format = "json";
  std::string r_out;
  report_cmd->add_option("input", r_input, "JSON report produced by `sasver verify`")
      ->required();
  report_cmd->add_option("--format", r_format, "output format: json or markdown");
  report_cmd->add_option("--out", r_out, "write the rendering to this file instead of stdout");

  auto* list_cmd = app.add_subcommand("list", "enumerate checks with their citations");
  RunFlags lflags;
  lflags.attach(list_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      vf::Config cfg = vflags.resolve();
      if (o_format->count()) cfg.format = v_format;
      if (!v_out.empty()) cfg.out_path = v_out;
      vf::Report report = vf::run_suites(cfg);
      write_output(render(report, cfg.format), cfg.out_path);
      return vf::report_clean(report) ? 0 : 1;
    }
    if (report_cmd->parsed()) {
      vf::Report report = vf::report_from_json(read_file(r_input));
      write_output(render(report, r_format), r_out);
      return 0;
    }
    if (list_cmd->parsed()) {
      vf::Config cfg = lflags.resolve();
      vf::Report report = vf::run_suites(cfg);
      std::ostringstream ss;
      for (const auto& check : report.checks)
        ss << check.id << "  [" << check.kind << "]  " << check.citation << "\n";
      std::cout << ss.str();
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "sasver: error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}
