#include "sasver/sphere_geom.hpp"

#include <cmath>
#include <cstddef>
#include <numeric>
#include <utility>

namespace sasver::sp {

namespace {

std::string coord_name(int j) { return "x" + std::to_string(j + 1); }
std::string param_name(int j) { return "y" + std::to_string(j + 1); }

Poly coord(int j) { return Poly::var(coord_name(j)); }
Poly param(int j) { return Poly::var(param_name(j)); }

// |x|^2 - 1 over the first `amb` coordinates
Poly sphere_relation(int amb) {
  Poly s = Poly::constant(-1);
  for (int j = 0; j < amb; ++j) s += coord(j) * coord(j);
  return s;
}

// <F(x), x> as a polynomial
Poly radial_inner(const PolyVectorField& F) {
  Poly s;
  for (int i = 0; i < F.ambient_dim(); ++i) s += F.comp(i) * coord(i);
  return s;
}

// I applied to a vector of polynomials: pairwise (-b, a) rotation
std::vector<Poly> rotate_polys(const std::vector<Poly>& v) {
  std::vector<Poly> out(v.size());
  for (std::size_t k = 0; 2 * k + 1 < v.size(); ++k) {
    out[2 * k] = -v[2 * k + 1];
    out[2 * k + 1] = v[2 * k];
  }
  return out;
}

void require_tangent(const PolyVectorField& F, const char* role) {
  if (!F.is_tangent())
    throw std::invalid_argument(std::string("sphere_geom: ") + role +
                                " field is not tangent to the sphere");
}

void require_tangent_at(const SpherePoint& p, const Vec& v, const char* role) {
  if (std::abs(dot(p.x, v)) > 1e-10)
    throw std::invalid_argument(std::string("sphere_geom: ") + role +
                                " vector is not tangent at the given point");
}

}  // namespace

double dot(const Vec& a, const Vec& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec axpy(double a, const Vec& x, const Vec& y) {
  Vec out(y);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * x[i];
  return out;
}

SpherePoint::SpherePoint(Vec coords) : x(std::move(coords)) {
  const double r = norm(x);
  if (!(r > 1e-6))
    throw std::invalid_argument("SpherePoint: cannot normalize a near-zero vector");
  for (double& c : x) c /= r;
}

bool PolyVectorField::is_tangent() const {
  const Poly inner = radial_inner(*this);
  if (inner.is_zero()) return true;
  try {
    (void)inner.divided_by_exact(sphere_relation(ambient_dim()));
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

Vec PolyVectorField::eval(const Vec& point,
                          const std::map<std::string, double>& extra) const {
  std::map<std::string, double> bind = extra;
  for (std::size_t j = 0; j < point.size(); ++j)
    bind[coord_name(static_cast<int>(j))] = point[j];
  Vec out(comps_.size());
  for (std::size_t i = 0; i < comps_.size(); ++i) out[i] = comps_[i].eval_double(bind);
  return out;
}

Vec PolyVectorField::jacobian_apply(const Vec& point, const Vec& dir,
                                    const std::map<std::string, double>& extra) const {
  std::map<std::string, double> bind = extra;
  for (std::size_t j = 0; j < point.size(); ++j)
    bind[coord_name(static_cast<int>(j))] = point[j];
  Vec out(comps_.size(), 0.0);
  for (std::size_t i = 0; i < comps_.size(); ++i)
    for (std::size_t j = 0; j < dir.size(); ++j) {
      if (dir[j] == 0.0) continue;
      const Poly d = comps_[i].derivative(coord_name(static_cast<int>(j)));
      if (!d.is_zero()) out[i] += d.eval_double(bind) * dir[j];
    }
  return out;
}

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
  PolyVectorField out(a.ambient_dim());
  for (int i = 0; i < a.ambient_dim(); ++i) out.comp(i) = a.comp(i) + b.comp(i);
  return out;
}

PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) {
  PolyVectorField out(a.ambient_dim());
  for (int i = 0; i < a.ambient_dim(); ++i) out.comp(i) = a.comp(i) - b.comp(i);
  return out;
}

PolyVectorField PolyVectorField::scaled(const Rational& c) const {
  PolyVectorField out(ambient_dim());
  for (int i = 0; i < ambient_dim(); ++i) out.comp(i) = comps_[static_cast<std::size_t>(i)].scaled(c);
  return out;
}

PolyVectorField lie_bracket(const PolyVectorField& F, const PolyVectorField& G) {
  const int amb = F.ambient_dim();
  PolyVectorField out(amb);
  for (int i = 0; i < amb; ++i) {
    Poly c;
    for (int j = 0; j < amb; ++j) {
      c += G.comp(i).derivative(coord_name(j)) * F.comp(j);
      c -= F.comp(i).derivative(coord_name(j)) * G.comp(j);
    }
    out.comp(i) = c;
  }
  return out;
}

PolyVectorField covariant_derivative_field(const PolyVectorField& F,
                                           const PolyVectorField& G) {
  require_tangent(F, "first");
  require_tangent(G, "second");
  const int amb = F.ambient_dim();
  std::vector<Poly> ambient(static_cast<std::size_t>(amb));
  for (int i = 0; i < amb; ++i)
    for (int j = 0; j < amb; ++j)
      ambient[static_cast<std::size_t>(i)] += G.comp(i).derivative(coord_name(j)) * F.comp(j);
  Poly s;
  for (int i = 0; i < amb; ++i) s += ambient[static_cast<std::size_t>(i)] * coord(i);
  PolyVectorField out(amb);
  for (int i = 0; i < amb; ++i)
    out.comp(i) = ambient[static_cast<std::size_t>(i)] - s * coord(i);
  return out;
}

PolyVectorField curvature_field(const PolyVectorField& F, const PolyVectorField& G,
                                const PolyVectorField& H) {
  const PolyVectorField a = covariant_derivative_field(F, covariant_derivative_field(G, H));
  const PolyVectorField b = covariant_derivative_field(G, covariant_derivative_field(F, H));
  const PolyVectorField c = covariant_derivative_field(lie_bracket(F, G), H);
  return a - b - c;
}

Vec levi_civita(const PolyVectorField& F, const PolyVectorField& G,
                const SpherePoint& p) {
  require_tangent(F, "first");
  require_tangent(G, "second");
  return tangent_project(p, G.jacobian_apply(p.x, F.eval(p.x)));
}

Vec tangent_project(const SpherePoint& p, const Vec& v) {
  return axpy(-dot(v, p.x), p.x, v);
}

double riemann_point(const SpherePoint& p, const Vec& X, const Vec& Y, const Vec& Z,
                     const Vec& W) {
  require_tangent_at(p, X, "first");
  require_tangent_at(p, Y, "second");
  require_tangent_at(p, Z, "third");
  require_tangent_at(p, W, "fourth");
  return dot(Y, Z) * dot(X, W) - dot(X, Z) * dot(Y, W);
}

Vec ambient_rotation(const Vec& v) {
  Vec out(v.size());
  for (std::size_t k = 0; 2 * k + 1 < v.size(); ++k) {
    out[2 * k] = -v[2 * k + 1];
    out[2 * k + 1] = v[2 * k];
  }
  return out;
}

PolyVectorField standard_reeb_field(int ambient_dim) {
  PolyVectorField xi(ambient_dim);
  for (int k = 0; 2 * k + 1 < ambient_dim; ++k) {
    xi.comp(2 * k) = coord(2 * k + 1);
    xi.comp(2 * k + 1) = -coord(2 * k);
  }
  return xi;
}

PolyVectorField s3_field_w() {
  PolyVectorField w(4);
  w.comp(0) = coord(2);
  w.comp(1) = -coord(3);
  w.comp(2) = -coord(0);
  w.comp(3) = coord(1);
  return w;
}

PolyVectorField s3_field_y() {
  PolyVectorField y(4);
  y.comp(0) = coord(3);
  y.comp(1) = coord(2);
  y.comp(2) = -coord(1);
  y.comp(3) = -coord(0);
  return y;
}

SasakianStructure::SasakianStructure(int n)
    : n_(n), xi_(standard_reeb_field(2 * n + 2)) {
  if (n < 1) throw std::invalid_argument("SasakianStructure: need n >= 1");
  const int amb = ambient_dim();

  // tangential extension of the parameter vector y: ext_i = y_i - <y,x> x_i
  Poly ydotx;
  for (int j = 0; j < amb; ++j) ydotx += param(j) * coord(j);
  ext_.resize(static_cast<std::size_t>(amb));
  for (int i = 0; i < amb; ++i)
    ext_[static_cast<std::size_t>(i)] = param(i) - ydotx * coord(i);

  // phi applied to the extension: rotate, then project tangentially
  std::vector<Poly> rot = rotate_polys(ext_);
  Poly rdotx;
  for (int j = 0; j < amb; ++j) rdotx += rot[static_cast<std::size_t>(j)] * coord(j);
  phiext_.resize(static_cast<std::size_t>(amb));
  for (int i = 0; i < amb; ++i)
    phiext_[static_cast<std::size_t>(i)] = rot[static_cast<std::size_t>(i)] - rdotx * coord(i);

  auto jacobian = [amb](const std::vector<Poly>& f) {
    std::vector<std::vector<Poly>> jac(f.size(),
                                       std::vector<Poly>(static_cast<std::size_t>(amb)));
    for (std::size_t i = 0; i < f.size(); ++i)
      for (int j = 0; j < amb; ++j)
        jac[i][static_cast<std::size_t>(j)] = f[i].derivative(coord_name(j));
    return jac;
  };
  jac_ext_ = jacobian(ext_);
  jac_phiext_ = jacobian(phiext_);
}

SasakianStructure standard_sphere_structure(int n) { return SasakianStructure(n); }

Vec SasakianStructure::reeb(const SpherePoint& p) const { return xi_.eval(p.x); }

double SasakianStructure::eta(const SpherePoint& p, const Vec& v) const {
  return dot(v, reeb(p));
}

Vec SasakianStructure::phi(const SpherePoint& p, const Vec& v) const {
  return tangent_project(p, ambient_rotation(v));
}

Vec SasakianStructure::nabla_reeb(const SpherePoint& p, const Vec& v) const {
  return tangent_project(p, xi_.jacobian_apply(p.x, v));
}

Vec SasakianStructure::nabla_phi(const SpherePoint& p, const Vec& v,
                                 const Vec& u) const {
  const int amb = ambient_dim();
  std::map<std::string, double> bind;
  for (int j = 0; j < amb; ++j) {
    bind[coord_name(j)] = p.x[static_cast<std::size_t>(j)];
    bind[param_name(j)] = u[static_cast<std::size_t>(j)];
  }
  auto directional = [&](const std::vector<std::vector<Poly>>& jac) {
    Vec out(static_cast<std::size_t>(amb), 0.0);
    for (int i = 0; i < amb; ++i)
      for (int j = 0; j < amb; ++j) {
        const Poly& d = jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (!d.is_zero()) out[static_cast<std::size_t>(i)] += d.eval_double(bind) * v[static_cast<std::size_t>(j)];
      }
    return out;
  };
  // nabla_v (phi U) - phi(nabla_v U) for the tangential extension U of u
  const Vec t1 = tangent_project(p, directional(jac_phiext_));
  const Vec t2 = phi(p, tangent_project(p, directional(jac_ext_)));
  return axpy(-1.0, t2, t1);
}

double space_form_riemann_point(const SasakianStructure& st, const SpherePoint& p,
                                double c, const Vec& X, const Vec& Y, const Vec& Z,
                                const Vec& W) {
  const double k1 = (c + 3.0) / 4.0;
  const double k2 = (c - 1.0) / 4.0;
  const Vec xi = st.reeb(p);
  const Vec phiX = st.phi(p, X), phiY = st.phi(p, Y), phiZ = st.phi(p, Z);
  const double etaX = st.eta(p, X), etaY = st.eta(p, Y), etaZ = st.eta(p, Z);

  Vec r(p.x.size(), 0.0);
  r = axpy(k1 * dot(Y, Z), X, r);
  r = axpy(-k1 * dot(X, Z), Y, r);
  r = axpy(k2 * dot(Z, phiY), phiX, r);
  r = axpy(-k2 * dot(Z, phiX), phiY, r);
  r = axpy(2.0 * k2 * dot(X, phiY), phiZ, r);
  r = axpy(k2 * etaX * etaZ, Y, r);
  r = axpy(-k2 * etaY * etaZ, X, r);
  r = axpy(k2 * dot(X, Z) * etaY, xi, r);
  r = axpy(-k2 * dot(Y, Z) * etaX, xi, r);
  return dot(r, W);
}

SpherePoint random_point(Rng& rng, int ambient_dim) {
  for (;;) {
    Vec v(static_cast<std::size_t>(ambient_dim));
    for (double& c : v) c = rng.gaussian();
    if (norm(v) > 1e-6) return SpherePoint(std::move(v));
  }
}

Vec random_tangent(Rng& rng, const SpherePoint& p, bool unit) {
  for (;;) {
    Vec v(p.x.size());
    for (double& c : v) c = rng.gaussian();
    Vec t = tangent_project(p, v);
    const double r = norm(t);
    if (r <= 1e-6) continue;
    if (unit)
      for (double& c : t) c /= r;
    return t;
  }
}

std::vector<CheckResult> sasakian_identity_report(const SasakianStructure& st,
                                                  int samples, std::uint64_t seed,
                                                  double tol) {
  if (samples < 1) throw std::invalid_argument("sasakian_identity_report: samples >= 1");
  const int amb = st.ambient_dim();
  Rng master(seed);
  std::map<std::string, std::string> params{
      {"sphere", "S" + std::to_string(amb - 1)},
      {"samples", std::to_string(samples)},
      {"seed", std::to_string(seed)},
      {"tol", std::to_string(tol)},
  };

  std::vector<CheckResult> out;
  const std::string prefix =
      "sasakian-identities.s" + std::to_string(amb - 1) + ".";
  auto add_exact = [&](const std::string& name, const std::string& citation, bool ok) {
    out.push_back({prefix + name, "exact-identity",
                   ok ? "pass" : "fail", 0.0, citation, params, {}});
  };
  auto add_numeric = [&](const std::string& name, const std::string& citation,
                         double residual) {
    out.push_back({prefix + name, "numeric-residual",
                   residual <= tol ? "pass" : "fail", residual, citation, params, {}});
  };

  add_exact("reeb-tangency",
            "the Reeb field is tangent to the sphere (exact polynomial divisibility)",
            st.reeb_field().is_tangent());

  double r_eta = 0, r_phixi = 0, r_phisq = 0, r_metric = 0, r_dxi = 0, r_dphi = 0;
  Rng rng = master.split();
  for (int s = 0; s < samples; ++s) {
    const SpherePoint p = random_point(rng, amb);
    const Vec v = random_tangent(rng, p);
    const Vec u = random_tangent(rng, p);
    const Vec xi = st.reeb(p);

    r_eta = std::max(r_eta, std::abs(st.eta(p, xi) - 1.0));
    r_phixi = std::max(r_phixi, norm(st.phi(p, xi)));

    // phi^2 v = -v + eta(v) xi
    Vec lhs = st.phi(p, st.phi(p, v));
    Vec rhs = axpy(st.eta(p, v), xi, Vec(v.size(), 0.0));
    rhs = axpy(-1.0, v, rhs);
    r_phisq = std::max(r_phisq, norm(axpy(-1.0, rhs, lhs)));

    // g(v,u) = g(phi v, phi u) + eta(v) eta(u)
    r_metric = std::max(r_metric,
                        std::abs(dot(v, u) - dot(st.phi(p, v), st.phi(p, u)) -
                                 st.eta(p, v) * st.eta(p, u)));

    // nabla_v xi = -phi v
    r_dxi = std::max(r_dxi, norm(axpy(1.0, st.phi(p, v), st.nabla_reeb(p, v))));

    // (nabla_v phi)(u) = g(v,u) xi - eta(u) v
    Vec dphi = st.nabla_phi(p, v, u);
    Vec expect = axpy(-st.eta(p, u), v, Vec(v.size(), 0.0));
    expect = axpy(dot(v, u), xi, expect);
    r_dphi = std::max(r_dphi, norm(axpy(-1.0, expect, dphi)));
  }

  add_numeric("eta-of-reeb", "eta(xi) = 1", r_eta);
  add_numeric("phi-of-reeb", "phi(xi) = 0", r_phixi);
  add_numeric("phi-squared", "phi^2 = -id + eta (x) xi", r_phisq);
  add_numeric("metric-compatibility",
              "g(v,u) = g(phi v, phi u) + eta(v) eta(u)", r_metric);
  add_numeric("reeb-derivative", "nabla_v xi = -phi v", r_dxi);
  add_numeric("phi-derivative", "(nabla_v phi)u = g(v,u) xi - eta(u) v", r_dphi);
  return out;
}

}  // namespace sasver::sp
