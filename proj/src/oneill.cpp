#include "sasver/oneill.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sasver/rng.hpp"

namespace sasver::on {

namespace {

// Validates the vertical index set and returns the sorted horizontal
// complement.
std::vector<int> horizontal_complement(const std::vector<int>& vertical, int dim) {
  std::vector<bool> seen(static_cast<std::size_t>(dim), false);
  for (int v : vertical) {
    if (v < 0 || v >= dim)
      throw std::invalid_argument("foliation: vertical index out of range");
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("foliation: duplicate vertical index");
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> horizontal;
  for (int i = 0; i < dim; ++i)
    if (!seen[static_cast<std::size_t>(i)]) horizontal.push_back(i);
  return horizontal;
}

template <typename S>
void allocate_tables(Snapshot<S>& sn) {
  const auto d = static_cast<std::size_t>(sn.dim);
  sn.gamma.assign(d, std::vector<std::vector<S>>(d, std::vector<S>(d, S(0))));
  sn.riem.assign(
      d, std::vector<std::vector<std::vector<S>>>(
             d, std::vector<std::vector<S>>(d, std::vector<S>(d, S(0)))));
}

}  // namespace

Snapshot<alg::Rational> frame_snapshot(const fa::FrameAlgebra& fr,
                                       std::vector<int> vertical) {
  fa::validate(fr);
  for (int i = 0; i < fr.k; ++i)
    for (int j = 0; j < fr.k; ++j) {
      const alg::Poly expected =
          i == j ? alg::Poly::constant(1) : alg::Poly();
      if (fr.metric[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          expected)
        throw std::invalid_argument(
            "frame_snapshot: orthonormal frame required (identity metric)");
    }

  Snapshot<alg::Rational> sn;
  sn.dim = fr.k;
  sn.horizontal = horizontal_complement(vertical, fr.k);
  sn.vertical = std::move(vertical);
  allocate_tables(sn);

  const auto gamma = fa::levi_civita(fr);
  const auto curv = fa::curvature(fr);
  for (int i = 0; i < fr.k; ++i)
    for (int j = 0; j < fr.k; ++j)
      for (int k = 0; k < fr.k; ++k) {
        sn.gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                [static_cast<std::size_t>(k)] =
            gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                 [static_cast<std::size_t>(k)]
                     .constant_value();
        for (int l = 0; l < fr.k; ++l)
          sn.riem[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                 [static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] =
              curv.at(i, j, k, l).constant_value();
      }
  return sn;
}

Snapshot<double> embedded_snapshot(const EmbeddedFoliation& fol,
                                   const sp::SpherePoint& p) {
  const int amb = p.ambient_dim();
  const int dim = amb - 1;
  if (static_cast<int>(fol.fields.size()) != dim)
    throw std::invalid_argument(
        "embedded_snapshot: need a full tangent frame (ambient dim - 1 fields)");
  for (const auto& f : fol.fields) {
    if (f.ambient_dim() != amb)
      throw std::invalid_argument("embedded_snapshot: ambient dimension mismatch");
    if (!f.is_tangent())
      throw std::invalid_argument("embedded_snapshot: frame field is not tangent");
  }

  std::vector<sp::Vec> v(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] = fol.fields[static_cast<std::size_t>(i)].eval(p.x);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(sp::dot(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]) - want) > 1e-9)
        throw std::invalid_argument(
            "embedded_snapshot: frame is not orthonormal at the point");
    }

  Snapshot<double> sn;
  sn.dim = dim;
  sn.horizontal = horizontal_complement(fol.vertical, dim);
  sn.vertical = fol.vertical;
  allocate_tables(sn);

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const sp::Vec nab = sp::levi_civita(fol.fields[static_cast<std::size_t>(i)],
                                          fol.fields[static_cast<std::size_t>(j)], p);
      for (int k = 0; k < dim; ++k)
        sn.gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                [static_cast<std::size_t>(k)] = sp::dot(nab, v[static_cast<std::size_t>(k)]);
    }
  // riem[i][j][k][l] = <F_k, R(F_i,F_j) F_l>
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l)
          sn.riem[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                 [static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] =
              sp::riemann_point(p, v[static_cast<std::size_t>(i)],
                                v[static_cast<std::size_t>(j)],
                                v[static_cast<std::size_t>(l)],
                                v[static_cast<std::size_t>(k)]);
  return sn;
}

S3LegendreExample s3_legendre_example(bool swap_roles) {
  S3LegendreExample ex;
  ex.frame = fa::su2_round_frame();
  const int leaf = swap_roles ? 1 : 0;
  ex.frame_vertical = {leaf};
  ex.embedded.fields = {sp::s3_field_w(), sp::s3_field_y(),
                        sp::standard_reeb_field(4)};
  ex.embedded.vertical = {leaf};
  return ex;
}

double s3_volume() { return 2.0 * std::numbers::pi * std::numbers::pi; }

double monte_carlo_s3_volume(std::uint64_t seed, int samples) {
  if (samples <= 0) throw std::invalid_argument("monte_carlo_s3_volume: samples");
  Rng rng(seed);
  long long inside = 0;
  for (int s = 0; s < samples; ++s) {
    double r2 = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double x = 2.0 * rng.uniform01() - 1.0;
      r2 += x * x;
    }
    if (r2 <= 1.0) ++inside;
  }
  // Cube volume 16 times the hit fraction estimates the unit-ball volume;
  // the boundary area is 4 times that (radial integral of r^3).
  return 64.0 * static_cast<double>(inside) / static_cast<double>(samples);
}

}  // namespace sasver::on
