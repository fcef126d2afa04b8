#include "sasver/spectrum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace sasver::spectra {

BigInt binomial(long long n, long long r) {
  if (n < 0 || r < 0 || r > n) return BigInt(0);
  if (r > n - r) r = n - r;
  BigInt acc(1);
  for (long long i = 1; i <= r; ++i) {
    acc *= (n - r + i);
    acc /= i;  // exact: the running product of i consecutive integers is divisible by i!
  }
  return acc;
}

SpectrumTable sphere_spectrum(int m, int kmax) {
  if (m < 2) throw std::invalid_argument("sphere_spectrum: need m >= 2");
  if (kmax < 1) throw std::invalid_argument("sphere_spectrum: need kmax >= 1");
  SpectrumTable table;
  table.m = m;
  table.kmax = kmax;
  table.entries.reserve(static_cast<std::size_t>(kmax) + 1);
  for (long long k = 0; k <= kmax; ++k) {
    SpectrumEntry e;
    e.lambda = k * (k + m - 1);
    e.mult = binomial(m + k, k) - binomial(m + k - 2, k - 2);
    table.entries.push_back(std::move(e));
  }
  return table;
}

double heat_trace(const SpectrumTable& spec_table, double t) {
  if (t <= 0.0) throw std::invalid_argument("heat_trace: need t > 0");
  if (spec_table.entries.empty()) throw std::invalid_argument("heat_trace: empty table");
  double sum = 0.0;
  double last = 0.0;
  for (const auto& e : spec_table.entries) {
    last = e.mult.convert_to<double>() *
           std::exp(-t * static_cast<double>(e.lambda));
    sum += last;
  }
  if (!(last < 1e-14 * sum))
    throw std::domain_error(
        "heat_trace: truncation tail not negligible; increase kmax or t");
  return sum;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2)
    throw std::invalid_argument("log_spaced: need 0 < lo < hi and count >= 2");
  std::vector<double> out(static_cast<std::size_t>(count));
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] =
        std::exp(llo + (lhi - llo) * i / (count - 1));
  return out;
}

std::vector<double> default_t_grid() { return log_spaced(2e-4, 2e-2, 12); }

HeatFit fit_heat_coeffs(const SpectrumTable& spec_table,
                        const std::vector<double>& t_grid) {
  const auto npts = static_cast<Eigen::Index>(t_grid.size());
  if (npts < 4)
    throw std::invalid_argument("fit_heat_coeffs: need at least 4 grid points");

  Eigen::MatrixXd design(npts, 4);
  Eigen::VectorXd rhs(npts);
  const double half_m = 0.5 * static_cast<double>(spec_table.m);
  for (Eigen::Index i = 0; i < npts; ++i) {
    const double t = t_grid[static_cast<std::size_t>(i)];
    if (!(t > 0.0))
      throw std::invalid_argument("fit_heat_coeffs: grid points must be positive");
    design(i, 0) = 1.0;
    design(i, 1) = t;
    design(i, 2) = t * t;
    design(i, 3) = t * t * t;
    rhs(i) = std::pow(4.0 * std::numbers::pi * t, half_m) *
             heat_trace(spec_table, t);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  const double condition = smin > 0.0 ? sv(0) / smin
                                      : std::numeric_limits<double>::infinity();
  if (!(condition < 1e12))
    throw std::domain_error("fit_heat_coeffs: design matrix is ill-conditioned");

  const Eigen::VectorXd coeffs = svd.solve(rhs);
  HeatFit fit;
  fit.a0 = coeffs(0);
  fit.a1 = coeffs(1);
  fit.a2 = coeffs(2);
  fit.a3 = coeffs(3);
  fit.t_grid = t_grid;
  fit.condition = condition;
  fit.residual_norm = (design * coeffs - rhs).norm();
  return fit;
}

}  // namespace sasver::spectra
