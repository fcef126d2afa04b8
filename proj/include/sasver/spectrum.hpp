#pragma once

/// Laplace spectrum of the round unit m-sphere and extraction of the leading
/// heat-trace coefficients by least squares.
///
/// Eigenvalues are lambda_k = k (k + m - 1) with multiplicity
/// C(m+k, k) - C(m+k-2, k-2) (dimension of the degree-k spherical
/// harmonics); multiplicities are kept as arbitrary-precision integers.
/// The heat trace sum_k mult_k exp(-t lambda_k) is truncated at kmax with a
/// guarded tail, and (4 pi t)^{m/2} Tr is fitted against {1, t, t^2, t^3} on
/// a small-t grid; the cubic term is a nuisance parameter absorbing
/// higher-order contamination so the first three coefficients come out
/// clean.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sasver::spectra {

using BigInt = boost::multiprecision::cpp_int;

struct SpectrumEntry {
  long long lambda = 0;  // k (k + m - 1)
  BigInt mult;           // exact multiplicity
};

struct SpectrumTable {
  int m = 0;     // sphere dimension
  int kmax = 0;  // largest harmonic degree included
  std::vector<SpectrumEntry> entries;  // k = 0 .. kmax
};

/// Exact binomial coefficient; zero for negative arguments or r > n.
BigInt binomial(long long n, long long r);

/// Spectrum table of the round unit m-sphere up to degree kmax.
/// Requires m >= 2, kmax >= 1.
SpectrumTable sphere_spectrum(int m, int kmax);

/// Truncated heat trace sum_k mult_k exp(-t lambda_k).  Requires t > 0 and a
/// negligible tail: the last entry must contribute less than 1e-14 of the
/// total, otherwise std::domain_error (kmax too small for this t).
double heat_trace(const SpectrumTable& spec_table, double t);

struct HeatFit {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;  // nuisance term
  std::vector<double> t_grid;
  double condition = 0.0;      // singular-value ratio of the design matrix
  double residual_norm = 0.0;  // Euclidean norm of the fit residual
};

/// count points logarithmically spaced in [lo, hi] inclusive.
std::vector<double> log_spaced(double lo, double hi, int count);

/// Least-squares fit of (4 pi t)^{m/2} * heat_trace(t) against
/// {1, t, t^2, t^3} over the grid.  Requires at least four grid points, all
/// positive; throws std::domain_error when the design matrix is numerically
/// singular (condition above 1e12).
HeatFit fit_heat_coeffs(const SpectrumTable& spec_table,
                        const std::vector<double>& t_grid);

/// Default grid for the 3-sphere experiment: 12 log-spaced points in
/// [2e-4, 2e-2].
std::vector<double> default_t_grid();

}  // namespace sasver::spectra
