#pragma once

/// Geometry of the unit sphere S^{2m-1} in R^{2m}, m = ambient_dim/2, with
/// vector fields whose components are polynomials in the ambient coordinates
/// x1..x{2m} (exact rational coefficients).  Differentiation is formal, so
/// Lie brackets and iterated covariant derivatives are computed exactly; only
/// point evaluation uses floating point.
///
/// The contact structure comes from the ambient linear complex structure I
/// that rotates each coordinate pair: I(v)[2k] = -v[2k+1], I(v)[2k+1] = v[2k]
/// (0-based).  The Reeb field is xi(x) = -I x, its dual form is
/// eta_x(v) = <v, xi(x)>, and phi_x(v) = I v - <I v, x> x projects the rotated
/// vector back to the tangent space.  The metric is the Euclidean restriction.
///
/// A polynomial field F is "tangent" when <F(x), x> vanishes identically on
/// the sphere, i.e. when that polynomial is divisible by |x|^2 - 1; this is
/// checked exactly.  The Levi-Civita connection of the round metric is the
/// tangential projection of the ambient directional derivative, so
/// (nabla_F G)(x) = DG(x) F(x) - <DG(x) F(x), x> x for tangent fields F, G.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sasver/check.hpp"
#include "sasver/poly.hpp"
#include "sasver/rng.hpp"

namespace sasver::sp {

using alg::Poly;
using alg::Rational;
using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
Vec axpy(double a, const Vec& x, const Vec& y);  // a*x + y

/// Point on the unit sphere; coordinates are renormalized on construction.
/// A vector of near-zero length (|x| < 1e-6) is rejected.
struct SpherePoint {
  Vec x;
  explicit SpherePoint(Vec coords);
  int ambient_dim() const { return static_cast<int>(x.size()); }
};

/// Vector field with polynomial components in the ambient coordinates.
/// Components may also carry parameter symbols (prefixes y, z, w) that must
/// be bound at evaluation time via `extra`.
class PolyVectorField {
 public:
  explicit PolyVectorField(int ambient_dim)
      : comps_(static_cast<std::size_t>(ambient_dim)) {}
  explicit PolyVectorField(std::vector<Poly> comps) : comps_(std::move(comps)) {}

  int ambient_dim() const { return static_cast<int>(comps_.size()); }
  const Poly& comp(int i) const { return comps_[static_cast<std::size_t>(i)]; }
  Poly& comp(int i) { return comps_[static_cast<std::size_t>(i)]; }

  /// Exact test that <F(x), x> vanishes on the unit sphere (identically zero
  /// or divisible by |x|^2 - 1).
  bool is_tangent() const;

  Vec eval(const Vec& point, const std::map<std::string, double>& extra = {}) const;

  /// (DF)(point) dir — the ambient Jacobian applied to a direction vector,
  /// computed from the formal partial derivatives.
  Vec jacobian_apply(const Vec& point, const Vec& dir,
                     const std::map<std::string, double>& extra = {}) const;

  friend PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b);
  friend PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b);
  PolyVectorField scaled(const Rational& c) const;
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return a.comps_ == b.comps_;
  }
  friend bool operator!=(const PolyVectorField& a, const PolyVectorField& b) {
    return !(a == b);
  }

 private:
  std::vector<Poly> comps_;
};

/// Exact Lie bracket [F,G] = (DG)F - (DF)G.
PolyVectorField lie_bracket(const PolyVectorField& F, const PolyVectorField& G);

/// Exact field-level covariant derivative of the round sphere:
/// components of (DG)F - <(DG)F, x> x.  Throws std::invalid_argument unless
/// both fields are tangent.
PolyVectorField covariant_derivative_field(const PolyVectorField& F,
                                           const PolyVectorField& G);

/// Exact curvature operator field R(F,G)H = nabla_F nabla_G H
/// - nabla_G nabla_F H - nabla_[F,G] H.
PolyVectorField curvature_field(const PolyVectorField& F, const PolyVectorField& G,
                                const PolyVectorField& H);

/// Pointwise covariant derivative (nabla_F G)(p); checks tangency exactly.
Vec levi_civita(const PolyVectorField& F, const PolyVectorField& G,
                const SpherePoint& p);

/// Projection of an ambient vector onto the tangent space at p.
Vec tangent_project(const SpherePoint& p, const Vec& v);

/// <R(X,Y)Z, W> for the round metric: g(Y,Z)g(X,W) - g(X,Z)g(Y,W).
/// All four vectors must be tangent at p within 1e-10.
double riemann_point(const SpherePoint& p, const Vec& X, const Vec& Y,
                     const Vec& Z, const Vec& W);

/// The ambient rotation I applied numerically.
Vec ambient_rotation(const Vec& v);

/// Reeb field xi(x) = -I x as an exact polynomial field:
/// (x2, -x1, x4, -x3, ...).
PolyVectorField standard_reeb_field(int ambient_dim);

/// The two remaining fields of the standard global frame on the 3-sphere:
/// w = (x3, -x4, -x1, x2) and y = (x4, x3, -x2, -x1).  Together with the Reeb
/// field they are orthonormal at every point and satisfy
/// [w, y] = 2 xi, [w, xi] = -2 y, [y, xi] = 2 w exactly.
PolyVectorField s3_field_w();
PolyVectorField s3_field_y();

/// Standard contact structure of S^{2n+1} in R^{2n+2} with numeric
/// evaluators for the structure tensors and their covariant derivatives.
class SasakianStructure {
 public:
  explicit SasakianStructure(int n);

  int n() const { return n_; }
  int ambient_dim() const { return 2 * n_ + 2; }
  const PolyVectorField& reeb_field() const { return xi_; }

  Vec reeb(const SpherePoint& p) const;
  double eta(const SpherePoint& p, const Vec& v) const;
  Vec phi(const SpherePoint& p, const Vec& v) const;

  /// nabla_v xi at p (tangential projection of the Jacobian of the Reeb
  /// field).
  Vec nabla_reeb(const SpherePoint& p, const Vec& v) const;

  /// (nabla_v phi)(u) at p for tangent u, computed from the tangential
  /// extension of u: nabla_v(phi(U)) - phi(nabla_v U) with U the field
  /// z -> u - <u,z>z.  The extension enters through exact formal Jacobians
  /// of fields carrying the parameter symbols y1..y{2n+2}.
  Vec nabla_phi(const SpherePoint& p, const Vec& v, const Vec& u) const;

 private:
  int n_;
  PolyVectorField xi_;
  std::vector<Poly> ext_;      // tangential extension of a parameter vector
  std::vector<Poly> phiext_;   // phi applied to the extension
  std::vector<std::vector<Poly>> jac_ext_;     // d ext_i / d x_j
  std::vector<std::vector<Poly>> jac_phiext_;  // d phiext_i / d x_j
};

SasakianStructure standard_sphere_structure(int n);

/// <R(X,Y)Z, W> evaluated through the curvature operator of a contact space
/// form with phi-sectional curvature parameter c, using the structure
/// tensors of `st` at p.  At c = 1 this must agree with riemann_point.
double space_form_riemann_point(const SasakianStructure& st, const SpherePoint& p,
                                double c, const Vec& X, const Vec& Y, const Vec& Z,
                                const Vec& W);

/// Uniform random point (normalized Gaussian) on the sphere.
SpherePoint random_point(Rng& rng, int ambient_dim);

/// Random tangent vector at p: Gaussian ambient vector projected to the
/// tangent space; normalized when unit = true.
Vec random_tangent(Rng& rng, const SpherePoint& p, bool unit = false);

/// Seeded sample-based verification of the structure identities:
///   eta(xi) = 1,  phi(xi) = 0,  phi^2 = -id + eta (x) xi,
///   g(v,u) = g(phi v, phi u) + eta(v) eta(u),
///   nabla_v xi = -phi v,  (nabla_v phi)u = g(v,u) xi - eta(u) v,
/// plus the exact tangency of the Reeb field.  One CheckResult per identity
/// with the max residual over all samples.
std::vector<CheckResult> sasakian_identity_report(const SasakianStructure& st,
                                                  int samples, std::uint64_t seed,
                                                  double tol);

}  // namespace sasver::sp
