// Python bindings for the main operations: closed-form curvature invariants,
// heat-trace spectral fits, the 3-sphere Legendre-foliation scalars, and the
// verification-suite runner (which returns its JSON report as a string).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <string>

#include "sasver/oneill.hpp"
#include "sasver/space_form.hpp"
#include "sasver/spectrum.hpp"
#include "sasver/verify.hpp"

namespace py = pybind11;

namespace {

using namespace sasver;

// Exact big-integer multiplicities become arbitrary-precision python ints.
py::int_ to_pyint(const spectra::BigInt& v) {
  std::ostringstream ss;
  ss << v;
  PyObject* obj = PyLong_FromString(ss.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

double poly_at_c(const alg::Poly& p, double c) {
  return p.eval_double({{"c", c}});
}

py::dict heat_coeff_dict(const sf::ScalarHeatCoeffs& h) {
  py::dict d;
  d["a0"] = h.a0.str();
  d["a1"] = h.a1.str();
  d["a2"] = h.a2.str();
  return d;
}

py::dict normal_coeff_dict(const sf::NormalHeatCoeffs& h) {
  py::dict d;
  d["b0"] = h.b0.str();
  d["b1"] = h.b1.str();
  d["b2"] = h.b2.str();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Curvature and spectral verification for Sasakian space forms and "
      "their Legendre foliations";
  m.attr("__version__") = "0.1.0";

  // ---- closed-form curvature invariants (polynomials in c, as text) ----
  m.def("scalar_curvature", [](int n) { return sf::scalar_curvature(n).str(); },
        py::arg("n"), "Scalar curvature of the 2n+1 dimensional model, in c");
  m.def("riemann_norm_sq", [](int n) { return sf::riemann_norm_sq(n).str(); },
        py::arg("n"), "Squared norm of the curvature tensor, in c");
  m.def("ricci_norm_sq", [](int n) { return sf::ricci_norm_sq(n).str(); },
        py::arg("n"), "Squared norm of the Ricci tensor, in c");
  m.def("scalar_curvature_at",
        [](int n, double c) { return poly_at_c(sf::scalar_curvature(n), c); },
        py::arg("n"), py::arg("c"));
  m.def("riemann_norm_sq_at",
        [](int n, double c) { return poly_at_c(sf::riemann_norm_sq(n), c); },
        py::arg("n"), py::arg("c"));
  m.def("ricci_norm_sq_at",
        [](int n, double c) { return poly_at_c(sf::ricci_norm_sq(n), c); },
        py::arg("n"), py::arg("c"));

  // ---- heat-trace coefficients, assembled and published forms ----
  m.def("scalar_heat_coeffs",
        [](int n) { return heat_coeff_dict(sf::scalar_heat_coeffs(n)); },
        py::arg("n"), "Assembled a0/a1/a2 as polynomial text in {c, Vol}");
  m.def("scalar_heat_coeffs_printed",
        [](int n) { return heat_coeff_dict(sf::scalar_heat_coeffs_printed(n)); },
        py::arg("n"));
  m.def("normal_heat_coeffs",
        [](int n) { return normal_coeff_dict(sf::normal_heat_coeffs(n)); },
        py::arg("n"), "Assembled b0/b1/b2 as polynomial text in {c, Vol, IA, IV}");
  m.def("normal_heat_coeffs_printed",
        [](int n) { return normal_coeff_dict(sf::normal_heat_coeffs_printed(n)); },
        py::arg("n"));

  // ---- sphere spectrum and heat-trace fitting ----
  m.def(
      "sphere_spectrum",
      [](int m_, int kmax) {
        const auto table = spectra::sphere_spectrum(m_, kmax);
        py::list out;
        for (const auto& e : table.entries)
          out.append(py::make_tuple(e.lambda, to_pyint(e.mult)));
        return out;
      },
      py::arg("m"), py::arg("kmax"),
      "Laplace spectrum of the round m-sphere up to level kmax, as "
      "(eigenvalue, multiplicity) pairs with exact multiplicities");
  m.def(
      "heat_trace",
      [](int m_, int kmax, double t) {
        return spectra::heat_trace(spectra::sphere_spectrum(m_, kmax), t);
      },
      py::arg("m"), py::arg("kmax"), py::arg("t"),
      "Truncated heat trace sum_k mult_k exp(-lambda_k t); raises if the "
      "truncation tail is not negligible at t");
  m.def(
      "fit_heat_coeffs",
      [](int m_, int kmax, double t_lo, double t_hi, int t_count) {
        const auto table = spectra::sphere_spectrum(m_, kmax);
        const auto fit =
            spectra::fit_heat_coeffs(table, spectra::log_spaced(t_lo, t_hi, t_count));
        py::dict d;
        d["a0"] = fit.a0;
        d["a1"] = fit.a1;
        d["a2"] = fit.a2;
        d["a3"] = fit.a3;
        d["condition"] = fit.condition;
        d["residual_norm"] = fit.residual_norm;
        d["t_grid"] = fit.t_grid;
        return d;
      },
      py::arg("m"), py::arg("kmax"), py::arg("t_lo") = 2e-4,
      py::arg("t_hi") = 2e-2, py::arg("t_count") = 12,
      "Least-squares fit of (4 pi t)^{m/2} Tr against powers of t");

  // ---- the 3-sphere Legendre foliation, exact frame backend ----
  m.def(
      "s3_legendre_invariants",
      []() {
        const auto ex = on::s3_legendre_example();
        const auto sn = on::frame_snapshot(ex.frame, ex.frame_vertical);
        py::dict d;
        d["a_norm_sq"] = on::a_norm_sq(sn).to_double();
        d["t_norm_sq"] = on::t_norm_sq(sn).to_double();
        d["tau_mixed"] = on::tau_mixed(sn).to_double();
        d["tau_transverse"] = on::tau_transverse(sn).to_double();
        d["v_norm_sq"] = on::v_norm_sq(sn).to_double();
        d["c24_norm_sq"] = on::c24_norm_sq(sn).to_double();
        d["r_nabla_norm_sq"] = on::r_nabla_norm_sq(sn).to_double();
        d["rho_nabla_norm_sq"] = on::rho_nabla_norm_sq(sn).to_double();
        d["ranjan_residual"] = on::ranjan_residual(sn).to_double();
        return d;
      },
      "O'Neill-tensor invariants of the Legendre foliation of the 3-sphere, "
      "computed exactly on the global frame and returned as floats");
  m.def("sphere_volume_s3", &on::s3_volume, "2 pi^2");
  m.def("monte_carlo_s3_volume", &on::monte_carlo_s3_volume, py::arg("seed"),
        py::arg("samples"));

  // ---- verification runner ----
  m.def("suite_names", &vf::suite_names,
        "Canonical order of the verification suites");
  m.def(
      "run_suites",
      [](const std::vector<std::string>& suites, int n_max, std::uint64_t seed,
         double tol, int samples, int kmax, double t_lo, double t_hi,
         int t_count) {
        vf::Config cfg;
        cfg.suites = suites;
        cfg.n_max = n_max;
        cfg.seed = seed;
        cfg.tol = tol;
        cfg.samples = samples;
        cfg.kmax = kmax;
        cfg.t_lo = t_lo;
        cfg.t_hi = t_hi;
        cfg.t_count = t_count;
        return vf::to_json(vf::run_suites(cfg));
      },
      py::arg("suites") = std::vector<std::string>{}, py::arg("n_max") = 4,
      py::arg("seed") = static_cast<std::uint64_t>(20260816),
      py::arg("tol") = 1e-9, py::arg("samples") = 100, py::arg("kmax") = 2000,
      py::arg("t_lo") = 2e-4, py::arg("t_hi") = 2e-2, py::arg("t_count") = 12,
      "Run verification suites (all by default) and return the JSON report");
}
