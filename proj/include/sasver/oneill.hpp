#pragma once

/// Fundamental tensors of a Riemannian foliation presented by an orthonormal
/// frame adapted to the vertical/horizontal splitting.
///
/// A snapshot holds, for one evaluation (a point of the embedded backend, or
/// the constant data of a frame-algebra backend):
///   gamma[i][j][k] = <nabla_{F_i} F_j, F_k>   (connection coefficients)
///   riem[i][j][k][l] = <F_k, R(F_i,F_j) F_l>  (curvature components; the
///                      sectional value of the plane (F_i,F_j) sits at
///                      riem[i][j][i][j], matching the space-form module)
/// together with the index partition into vertical (leaf) and horizontal
/// fields.  Everything downstream is scalar-generic: exact rationals for the
/// frame backend, doubles for the embedded backend, through the same code.
///
/// Conventions:
///   A_E F = v nabla_{hE} hF + h nabla_{hE} vF   (alternating on horizontal
///                                                pairs, A_X X = 0)
///   T_E F = h nabla_{vE} vF + v nabla_{vE} hF   (symmetric on vertical pairs)
///   (A_X, A_Y) = sum_a g(A_X f_a, A_Y f_a)  over the horizontal frame; the
///       same sum over the vertical frame is equal (skew-adjointness) and is
///       exposed separately as a cross-check.
///   (T X, T Y) = sum_j g(T_{u_j} X, T_{u_j} Y) over the vertical frame.
///   |A|^2 = sum_a (A_{f_a}, A_{f_a});  |T|^2 = sum_{j,k} |T_{u_j} u_k|^2.
///   H = sum_j T_{u_j} u_j  (mean curvature of the leaves; minimal <=> 0).
///   V(X,Y,Z,Z') = 2 g(A_X Y, A_Z Z') - g(A_Y Z, A_X Z') - g(A_Z X, A_Y Z')
///       (curvature-type tensor on the horizontal frame; its (2,4)
///       contraction equals 3 (A_X, A_Z)).
///   R_nabla = R restricted to horizontal slots + V  (transverse curvature of
///       the horizontal connection); rho_nabla and tau_nabla are its Ricci
///       contraction and trace.
///   tau_mixed = sum_{a,j} riem[f_a][u_j][f_a][u_j]  (mixed scalar curvature).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sasver/frame_algebra.hpp"
#include "sasver/rational.hpp"
#include "sasver/sphere_geom.hpp"

namespace sasver::on {

template <typename S>
struct Snapshot {
  int dim = 0;
  std::vector<int> vertical;    // frame indices of the leaf fields
  std::vector<int> horizontal;  // frame indices of the horizontal fields
  std::vector<std::vector<std::vector<S>>> gamma;
  std::vector<std::vector<std::vector<std::vector<S>>>> riem;

  bool is_vertical(int i) const {
    for (int v : vertical)
      if (v == i) return true;
    return false;
  }
};

namespace detail {
template <typename S>
S dot(const std::vector<S>& a, const std::vector<S>& b) {
  S s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
}  // namespace detail

template <typename S>
std::vector<S> vertical_project(const Snapshot<S>& sn, std::vector<S> v) {
  for (int h : sn.horizontal) v[static_cast<std::size_t>(h)] = S(0);
  return v;
}

template <typename S>
std::vector<S> horizontal_project(const Snapshot<S>& sn, std::vector<S> v) {
  for (int u : sn.vertical) v[static_cast<std::size_t>(u)] = S(0);
  return v;
}

/// A_{F_i} F_j in frame coefficients (zero vector when F_i is vertical).
template <typename S>
std::vector<S> oneill_A(const Snapshot<S>& sn, int i, int j) {
  if (sn.is_vertical(i)) return std::vector<S>(static_cast<std::size_t>(sn.dim), S(0));
  const auto& n = sn.gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return sn.is_vertical(j) ? horizontal_project(sn, n) : vertical_project(sn, n);
}

/// T_{F_i} F_j in frame coefficients (zero vector when F_i is horizontal).
template <typename S>
std::vector<S> oneill_T(const Snapshot<S>& sn, int i, int j) {
  if (!sn.is_vertical(i)) return std::vector<S>(static_cast<std::size_t>(sn.dim), S(0));
  const auto& n = sn.gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return sn.is_vertical(j) ? horizontal_project(sn, n) : vertical_project(sn, n);
}

template <typename S>
std::vector<S> mean_curvature(const Snapshot<S>& sn) {
  std::vector<S> h(static_cast<std::size_t>(sn.dim), S(0));
  for (int u : sn.vertical) {
    const auto t = oneill_T(sn, u, u);
    for (int k = 0; k < sn.dim; ++k) h[static_cast<std::size_t>(k)] += t[static_cast<std::size_t>(k)];
  }
  return h;
}

/// (A_{f_a}, A_{f_b}) summed over the horizontal frame; a, b are positions
/// into sn.horizontal.
template <typename S>
S a_pairing(const Snapshot<S>& sn, int a, int b) {
  const int fa = sn.horizontal[static_cast<std::size_t>(a)];
  const int fb = sn.horizontal[static_cast<std::size_t>(b)];
  S s(0);
  for (int fc : sn.horizontal) s += detail::dot(oneill_A(sn, fa, fc), oneill_A(sn, fb, fc));
  return s;
}

/// The same pairing summed over the vertical frame instead (equal by
/// skew-adjointness of A_X; exposed for cross-checking).
template <typename S>
S a_pairing_vertical(const Snapshot<S>& sn, int a, int b) {
  const int fa = sn.horizontal[static_cast<std::size_t>(a)];
  const int fb = sn.horizontal[static_cast<std::size_t>(b)];
  S s(0);
  for (int u : sn.vertical) s += detail::dot(oneill_A(sn, fa, u), oneill_A(sn, fb, u));
  return s;
}

/// (T f_a, T f_b) = sum_j g(T_{u_j} f_a, T_{u_j} f_b).
template <typename S>
S t_pairing(const Snapshot<S>& sn, int a, int b) {
  const int fa = sn.horizontal[static_cast<std::size_t>(a)];
  const int fb = sn.horizontal[static_cast<std::size_t>(b)];
  S s(0);
  for (int u : sn.vertical) s += detail::dot(oneill_T(sn, u, fa), oneill_T(sn, u, fb));
  return s;
}

template <typename S>
S a_norm_sq(const Snapshot<S>& sn) {
  S s(0);
  for (std::size_t a = 0; a < sn.horizontal.size(); ++a)
    s += a_pairing(sn, static_cast<int>(a), static_cast<int>(a));
  return s;
}

template <typename S>
S t_norm_sq(const Snapshot<S>& sn) {
  S s(0);
  for (int u : sn.vertical)
    for (int v : sn.vertical) {
      const auto t = oneill_T(sn, u, v);
      s += detail::dot(t, t);
    }
  return s;
}

/// V(f_a, f_b, f_c, f_d); arguments are positions into sn.horizontal.
template <typename S>
S v_component(const Snapshot<S>& sn, int a, int b, int c, int d) {
  const int fa = sn.horizontal[static_cast<std::size_t>(a)];
  const int fb = sn.horizontal[static_cast<std::size_t>(b)];
  const int fc = sn.horizontal[static_cast<std::size_t>(c)];
  const int fd = sn.horizontal[static_cast<std::size_t>(d)];
  return S(2) * detail::dot(oneill_A(sn, fa, fb), oneill_A(sn, fc, fd)) -
         detail::dot(oneill_A(sn, fb, fc), oneill_A(sn, fa, fd)) -
         detail::dot(oneill_A(sn, fc, fa), oneill_A(sn, fb, fd));
}

/// Contraction of V over slots 2 and 4.
template <typename S>
std::vector<std::vector<S>> c24_matrix(const Snapshot<S>& sn) {
  const int m = static_cast<int>(sn.horizontal.size());
  std::vector<std::vector<S>> out(static_cast<std::size_t>(m),
                                  std::vector<S>(static_cast<std::size_t>(m), S(0)));
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      S s(0);
      for (int b = 0; b < m; ++b) s += v_component(sn, a, b, c, b);
      out[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = s;
    }
  return out;
}

template <typename S>
S v_norm_sq(const Snapshot<S>& sn) {
  const int m = static_cast<int>(sn.horizontal.size());
  S s(0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          const S v = v_component(sn, a, b, c, d);
          s += v * v;
        }
  return s;
}

template <typename S>
S c24_norm_sq(const Snapshot<S>& sn) {
  S s(0);
  for (const auto& row : c24_matrix(sn))
    for (const auto& e : row) s += e * e;
  return s;
}

/// Curvature component of the round/ambient metric over horizontal positions.
template <typename S>
S riem_horizontal(const Snapshot<S>& sn, int a, int b, int c, int d) {
  const auto h = [&](int p) {
    return static_cast<std::size_t>(sn.horizontal[static_cast<std::size_t>(p)]);
  };
  return sn.riem[h(a)][h(b)][h(c)][h(d)];
}

/// Transverse curvature component over horizontal positions (same slot
/// convention as riem): R + V.
template <typename S>
S r_nabla_component(const Snapshot<S>& sn, int a, int b, int c, int d) {
  return riem_horizontal(sn, a, b, c, d) + v_component(sn, a, b, c, d);
}

template <typename S>
S r_nabla_norm_sq(const Snapshot<S>& sn) {
  const int m = static_cast<int>(sn.horizontal.size());
  S s(0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          const S r = r_nabla_component(sn, a, b, c, d);
          s += r * r;
        }
  return s;
}

/// Ricci contraction of the transverse curvature:
/// rho_nabla(a,b) = sum_c R_nabla(f_c, f_a, f_c, f_b).
template <typename S>
std::vector<std::vector<S>> rho_nabla_matrix(const Snapshot<S>& sn) {
  const int m = static_cast<int>(sn.horizontal.size());
  std::vector<std::vector<S>> out(static_cast<std::size_t>(m),
                                  std::vector<S>(static_cast<std::size_t>(m), S(0)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      S s(0);
      for (int c = 0; c < m; ++c) s += r_nabla_component(sn, c, a, c, b);
      out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = s;
    }
  return out;
}

template <typename S>
S rho_nabla_norm_sq(const Snapshot<S>& sn) {
  S s(0);
  for (const auto& row : rho_nabla_matrix(sn))
    for (const auto& e : row) s += e * e;
  return s;
}

/// Transverse scalar curvature as the trace of rho_nabla.
template <typename S>
S tau_transverse(const Snapshot<S>& sn) {
  S s(0);
  const auto rho = rho_nabla_matrix(sn);
  for (std::size_t a = 0; a < rho.size(); ++a) s += rho[a][a];
  return s;
}

/// The same quantity assembled as
/// sum_{a != b} K(f_a, f_b) + 3 |A|^2  (independent grouping, cross-check).
template <typename S>
S tau_transverse_sum_form(const Snapshot<S>& sn) {
  const int m = static_cast<int>(sn.horizontal.size());
  S s(0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b) s += riem_horizontal(sn, a, b, a, b);
  return s + S(3) * a_norm_sq(sn);
}

/// Mixed scalar curvature: sum of sectional components over (horizontal,
/// vertical) frame planes.
template <typename S>
S tau_mixed(const Snapshot<S>& sn) {
  S s(0);
  for (int f : sn.horizontal)
    for (int u : sn.vertical)
      s += sn.riem[static_cast<std::size_t>(f)][static_cast<std::size_t>(u)]
                  [static_cast<std::size_t>(f)][static_cast<std::size_t>(u)];
  return s;
}

/// Full (ambient) Ricci tensor restricted to horizontal positions:
/// rho(f_a, f_b) summed over the complete frame.
template <typename S>
S full_ricci_horizontal(const Snapshot<S>& sn, int a, int b) {
  const int fa = sn.horizontal[static_cast<std::size_t>(a)];
  const int fb = sn.horizontal[static_cast<std::size_t>(b)];
  S s(0);
  for (int k = 0; k < sn.dim; ++k)
    s += sn.riem[static_cast<std::size_t>(k)][static_cast<std::size_t>(fa)]
                [static_cast<std::size_t>(k)][static_cast<std::size_t>(fb)];
  return s;
}

/// rho_nabla via the minimal-leaf assembly rho + 2 (A_X, A_Y) + (T X, T Y);
/// agrees with the contraction of R + V when the leaves are minimal.
template <typename S>
S rho_nabla_formula(const Snapshot<S>& sn, int a, int b) {
  return full_ricci_horizontal(sn, a, b) + S(2) * a_pairing(sn, a, b) +
         t_pairing(sn, a, b);
}

/// Divergence of the mean-curvature field, valid when the frame coefficients
/// of H are constant along the manifold (always true for the frame backend;
/// for the embedded backend use only when H vanishes or is frame-constant):
/// div H = sum_i g(nabla_{F_i} H, F_i) with nabla applied to the constant
/// combination sum_j H^j F_j.
template <typename S>
S div_mean_curvature(const Snapshot<S>& sn) {
  const auto h = mean_curvature(sn);
  S s(0);
  for (int i = 0; i < sn.dim; ++i)
    for (int j = 0; j < sn.dim; ++j)
      s += h[static_cast<std::size_t>(j)] *
           sn.gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                   [static_cast<std::size_t>(i)];
  return s;
}

/// Signed defect of the divergence identity
/// tau_mixed = div H + |H|^2 + |A|^2 - |T|^2.
template <typename S>
S ranjan_residual(const Snapshot<S>& sn) {
  const auto h = mean_curvature(sn);
  return tau_mixed(sn) - div_mean_curvature(sn) - detail::dot(h, h) -
         a_norm_sq(sn) + t_norm_sq(sn);
}

/// Signed defect of the curvature-sum identity over horizontal positions:
/// sum_j R(f_a, u_j, f_b, u_j)
///   = (g(nabla_{f_b} H, f_a) + g(nabla_{f_a} H, f_b)) / 2
///     + (A_{f_a}, A_{f_b}) - (T f_a, T f_b),
/// with the H-derivative taken under the same frame-constancy assumption as
/// div_mean_curvature.
template <typename S>
S curvature_sum_residual(const Snapshot<S>& sn, int a, int b) {
  const int fa = sn.horizontal[static_cast<std::size_t>(a)];
  const int fb = sn.horizontal[static_cast<std::size_t>(b)];
  S lhs(0);
  for (int u : sn.vertical)
    lhs += sn.riem[static_cast<std::size_t>(fa)][static_cast<std::size_t>(u)]
                  [static_cast<std::size_t>(fb)][static_cast<std::size_t>(u)];
  const auto h = mean_curvature(sn);
  auto nabla_h_along = [&](int i, int k) {
    S s(0);
    for (int j = 0; j < sn.dim; ++j)
      s += h[static_cast<std::size_t>(j)] *
           sn.gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                   [static_cast<std::size_t>(k)];
    return s;
  };
  const S rhs = (nabla_h_along(fb, fa) + nabla_h_along(fa, fb)) / S(2) +
                a_pairing(sn, a, b) - t_pairing(sn, a, b);
  return lhs - rhs;
}

/// Exact backend: orthonormal frame algebra (identity metric required) with
/// a vertical index set.  Connection and curvature are computed symbolically
/// and must be constant; the snapshot carries them as exact rationals.
Snapshot<alg::Rational> frame_snapshot(const fa::FrameAlgebra& fr,
                                       std::vector<int> vertical);

/// Numeric backend: a full orthonormal tangent frame of polynomial fields on
/// an embedded odd sphere, with the leaf fields selected by index.
struct EmbeddedFoliation {
  std::vector<sp::PolyVectorField> fields;  // full tangent frame
  std::vector<int> vertical;                // indices into fields
};

/// Snapshot at one point.  Validates: exact tangency of every field,
/// orthonormality at p (within 1e-9), full frame (count = ambient dim - 1).
Snapshot<double> embedded_snapshot(const EmbeddedFoliation& fol,
                                   const sp::SpherePoint& p);

/// The Legendre foliation of the 3-sphere spanned by the first frame field
/// (leaves = orbits of w), with horizontal complement {y, xi} — on both
/// backends.  With swap_roles = true the roles of w and y are exchanged,
/// giving the second foliation of the same pair.
struct S3LegendreExample {
  fa::FrameAlgebra frame;            // round orthonormal frame algebra
  std::vector<int> frame_vertical;   // vertical index into the frame
  EmbeddedFoliation embedded;        // polynomial-field twin
};
S3LegendreExample s3_legendre_example(bool swap_roles = false);

/// Volume of the unit 3-sphere.
double s3_volume();

/// Seeded Monte-Carlo estimate of the same volume (unit-ball fraction in the
/// ambient 4-cube, scaled by the radial integral), used to validate the
/// closed form.
double monte_carlo_s3_volume(std::uint64_t seed, int samples);

}  // namespace sasver::on
