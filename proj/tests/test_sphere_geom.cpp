#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sasver/space_form.hpp"
#include "sasver/sphere_geom.hpp"

using namespace sasver;
using namespace sasver::sp;
using alg::Poly;
using alg::Rational;

namespace {

Poly coord(int j) { return Poly::var("x" + std::to_string(j + 1)); }

Poly sphere_relation(int amb) {
  Poly s = Poly::constant(-1);
  for (int j = 0; j < amb; ++j) s += coord(j) * coord(j);
  return s;
}

// exact: every component vanishes on the unit sphere
bool vanishes_on_sphere(const PolyVectorField& F) {
  const Poly rel = sphere_relation(F.ambient_dim());
  for (int i = 0; i < F.ambient_dim(); ++i) {
    if (F.comp(i).is_zero()) continue;
    try {
      (void)F.comp(i).divided_by_exact(rel);
    } catch (const std::domain_error&) {
      return false;
    }
  }
  return true;
}

PolyVectorField zero_field(int amb) { return PolyVectorField(amb); }

// constant ambient field e_k
PolyVectorField constant_field(int amb, int k) {
  PolyVectorField F(amb);
  F.comp(k) = Poly::constant(1);
  return F;
}

// tangential extension of the ambient basis vector e_k, as a polynomial field
PolyVectorField extension_field(int amb, int k) {
  PolyVectorField F(amb);
  for (int i = 0; i < amb; ++i) {
    Poly c = -coord(k) * coord(i);
    if (i == k) c += Poly::constant(1);
    F.comp(i) = c;
  }
  return F;
}

}  // namespace

TEST_CASE("frame fields on the 3-sphere have the advertised brackets") {
  const PolyVectorField w = s3_field_w();
  const PolyVectorField y = s3_field_y();
  const PolyVectorField xi = standard_reeb_field(4);

  CHECK(lie_bracket(w, xi) == y.scaled(Rational(-2)));
  CHECK(lie_bracket(w, y) == xi.scaled(Rational(2)));
  CHECK(lie_bracket(y, xi) == w.scaled(Rational(2)));

  // antisymmetry and self-annihilation, exactly
  CHECK(lie_bracket(xi, w) == lie_bracket(w, xi).scaled(Rational(-1)));
  CHECK(lie_bracket(w, w) == zero_field(4));

  // bilinearity
  CHECK(lie_bracket(w + y, xi) == lie_bracket(w, xi) + lie_bracket(y, xi));
}

TEST_CASE("exact tangency test distinguishes tangent from non-tangent fields") {
  CHECK(standard_reeb_field(4).is_tangent());
  CHECK(standard_reeb_field(6).is_tangent());
  CHECK(standard_reeb_field(8).is_tangent());
  CHECK(s3_field_w().is_tangent());
  CHECK(s3_field_y().is_tangent());

  // tangential extension: <F,x> = -x_k(|x|^2 - 1), divisible but not zero
  CHECK(extension_field(4, 0).is_tangent());
  CHECK(extension_field(6, 3).is_tangent());

  // constant field: <F,x> = x_k, not divisible
  CHECK_FALSE(constant_field(4, 0).is_tangent());

  // radial field: <F,x> = |x|^2, remainder 1
  PolyVectorField radial(4);
  for (int i = 0; i < 4; ++i) radial.comp(i) = coord(i);
  CHECK_FALSE(radial.is_tangent());
}

TEST_CASE("sphere points normalize on construction") {
  const SpherePoint p(Vec{2.0, 0.0, 0.0, 0.0});
  CHECK(p.x[0] == doctest::Approx(1.0));
  CHECK(norm(p.x) == doctest::Approx(1.0));
  CHECK_THROWS_AS(SpherePoint(Vec{1e-9, 0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("covariant derivative: geodesic Reeb flow and the frame table, exactly") {
  const PolyVectorField w = s3_field_w();
  const PolyVectorField y = s3_field_y();
  const PolyVectorField xi = standard_reeb_field(4);

  // nabla_xi xi vanishes on the sphere (integral curves are geodesics)
  CHECK(vanishes_on_sphere(covariant_derivative_field(xi, xi)));

  // nabla_w y = xi holds as an exact polynomial identity (no projection needed)
  CHECK(covariant_derivative_field(w, y) == xi);
  CHECK(covariant_derivative_field(y, w) == xi.scaled(Rational(-1)));

  // remaining entries of the connection table, exactly on the sphere
  CHECK(vanishes_on_sphere(covariant_derivative_field(w, w)));
  CHECK(vanishes_on_sphere(covariant_derivative_field(y, y)));
  CHECK(vanishes_on_sphere(covariant_derivative_field(w, xi) - y.scaled(Rational(-1))));
  CHECK(vanishes_on_sphere(covariant_derivative_field(y, xi) - w));
  CHECK(vanishes_on_sphere(covariant_derivative_field(xi, w) - y));
  CHECK(vanishes_on_sphere(covariant_derivative_field(xi, y) - w.scaled(Rational(-1))));

  // torsion-free, exactly: nabla_F G - nabla_G F = [F,G] on the sphere
  const std::vector<PolyVectorField> frame{w, y, xi};
  for (const auto& F : frame)
    for (const auto& G : frame)
      CHECK(vanishes_on_sphere(covariant_derivative_field(F, G) -
                               covariant_derivative_field(G, F) - lie_bracket(F, G)));

  CHECK_THROWS_AS(covariant_derivative_field(constant_field(4, 0), xi),
                  std::invalid_argument);
}

TEST_CASE("pointwise covariant derivative agrees with the exact one") {
  const PolyVectorField w = s3_field_w();
  const PolyVectorField y = s3_field_y();
  const PolyVectorField xi = standard_reeb_field(4);
  Rng rng(20240811);

  for (int s = 0; s < 25; ++s) {
    const SpherePoint p = random_point(rng, 4);
    CHECK(norm(levi_civita(xi, xi, p)) < 1e-12);
    const Vec d = levi_civita(w, y, p);
    const Vec expect = xi.eval(p.x);
    for (int i = 0; i < 4; ++i) CHECK(d[i] == doctest::Approx(expect[i]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(levi_civita(constant_field(4, 0), xi, random_point(rng, 4)),
                  std::invalid_argument);
}

TEST_CASE("metric compatibility of the pointwise derivative") {
  const std::vector<PolyVectorField> fields{s3_field_w(), s3_field_y(),
                                            standard_reeb_field(4),
                                            extension_field(4, 1)};
  Rng rng(20240812);
  for (int s = 0; s < 100; ++s) {
    const SpherePoint p = random_point(rng, 4);
    for (const auto& F : fields)
      for (const auto& G : fields)
        for (const auto& H : fields) {
          // F<G,H> via formal differentiation of the inner-product polynomial
          Poly inner;
          for (int i = 0; i < 4; ++i) inner += G.comp(i) * H.comp(i);
          double lhs = 0.0;
          const Vec Fv = F.eval(p.x);
          for (int j = 0; j < 4; ++j) {
            const Poly d = inner.derivative("x" + std::to_string(j + 1));
            if (!d.is_zero())
              lhs += d.eval_double({{"x1", p.x[0]},
                                    {"x2", p.x[1]},
                                    {"x3", p.x[2]},
                                    {"x4", p.x[3]}}) *
                     Fv[j];
          }
          const double rhs = dot(levi_civita(F, G, p), H.eval(p.x)) +
                             dot(G.eval(p.x), levi_civita(F, H, p));
          CHECK(std::abs(lhs - rhs) < 1e-10);
        }
  }
}

TEST_CASE("curvature of the round 3-sphere is constant curvature one, exactly") {
  const PolyVectorField w = s3_field_w();
  const PolyVectorField y = s3_field_y();
  const PolyVectorField xi = standard_reeb_field(4);
  const std::vector<PolyVectorField> frame{w, y, xi};

  for (const auto& F : frame)
    for (const auto& G : frame)
      for (const auto& H : frame) {
        // R(F,G)H = <G,H> F - <F,H> G as fields on the sphere
        Poly gh, fh;
        for (int i = 0; i < 4; ++i) {
          gh += G.comp(i) * H.comp(i);
          fh += F.comp(i) * H.comp(i);
        }
        PolyVectorField expected(4);
        for (int i = 0; i < 4; ++i)
          expected.comp(i) = gh * F.comp(i) - fh * G.comp(i);
        CHECK(vanishes_on_sphere(curvature_field(F, G, H) - expected));
      }
}

TEST_CASE("pointwise curvature value and its two cross-checks") {
  const PolyVectorField w = s3_field_w();
  const PolyVectorField y = s3_field_y();
  const PolyVectorField xi = standard_reeb_field(4);
  const SasakianStructure st = standard_sphere_structure(1);
  Rng rng(20240813);

  for (int s = 0; s < 100; ++s) {
    const SpherePoint p = random_point(rng, 4);
    const Vec X = w.eval(p.x), Y = y.eval(p.x);

    // the frame is orthonormal at every point
    CHECK(std::abs(dot(X, X) - 1.0) < 1e-12);
    CHECK(std::abs(dot(Y, Y) - 1.0) < 1e-12);
    CHECK(std::abs(dot(X, Y)) < 1e-12);

    CHECK(riemann_point(p, X, Y, Y, X) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(riemann_point(p, X, X, Y, X) == doctest::Approx(0.0).epsilon(1e-12));

    // random quadruple: constant-curvature value vs the structure-tensor
    // curvature operator at parameter 1
    const Vec A = random_tangent(rng, p), B = random_tangent(rng, p);
    const Vec C = random_tangent(rng, p), D = random_tangent(rng, p);
    const double direct = riemann_point(p, A, B, C, D);
    CHECK(std::abs(direct - space_form_riemann_point(st, p, 1.0, A, B, C, D)) < 1e-10);
  }

  CHECK_THROWS_AS(riemann_point(random_point(rng, 4), Vec{1, 0, 0, 0}, Vec{0, 1, 0, 0},
                                Vec{0, 0, 1, 0}, Vec{0, 0, 0, 1}),
                  std::invalid_argument);
}

TEST_CASE("structure-tensor curvature operator matches the exact model tensor") {
  // adapted frame at a point: e = w(p), phi e = y(p), xi(p); the embedded
  // computation at parameter c must reproduce the model components
  const sf::FrameCurvature model = sf::model_frame_curvature(sf::AdaptedFrame{1});
  const SasakianStructure st = standard_sphere_structure(1);
  const PolyVectorField w = s3_field_w();
  const PolyVectorField y = s3_field_y();
  Rng rng(20240814);

  for (long long cval : {1, 7, -2}) {
    const SpherePoint p = random_point(rng, 4);
    const std::vector<Vec> V{w.eval(p.x), st.phi(p, w.eval(p.x)), st.reeb(p)};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) {
            const double want =
                model.at(i, j, k, l).eval({{"c", Rational(cval)}}).to_double();
            // container stores g(X_k, R(X_i,X_j) X_l): last two slots swap
            const double got = space_form_riemann_point(
                st, p, static_cast<double>(cval), V[i], V[j], V[l], V[k]);
            CHECK(std::abs(want - got) < 1e-9);
          }
  }
}

TEST_CASE("phi of the first frame field is the second, pointwise") {
  const SasakianStructure st = standard_sphere_structure(1);
  const PolyVectorField w = s3_field_w();
  const PolyVectorField y = s3_field_y();
  Rng rng(20240815);
  for (int s = 0; s < 20; ++s) {
    const SpherePoint p = random_point(rng, 4);
    const Vec lhs = st.phi(p, w.eval(p.x));
    const Vec rhs = y.eval(p.x);
    for (int i = 0; i < 4; ++i) CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-12));
  }
}

TEST_CASE("structure identity report passes on the three low spheres") {
  for (int n : {1, 2, 3}) {
    const SasakianStructure st = standard_sphere_structure(n);
    const auto checks = sasakian_identity_report(st, 100, 20240901, 1e-9);
    REQUIRE(checks.size() == 7);
    for (const auto& c : checks) {
      INFO(c.id, " residual=", c.residual);
      CHECK(c.status == "pass");
      CHECK(c.params.at("sphere") == "S" + std::to_string(2 * n + 1));
    }
    CHECK(checks[0].id == "sasakian-identities.s" + std::to_string(2 * n + 1) +
                              ".reeb-tangency");
    CHECK(checks[0].kind == "exact-identity");
    for (std::size_t i = 1; i < checks.size(); ++i) {
      CHECK(checks[i].kind == "numeric-residual");
      CHECK(checks[i].residual < 1e-9);
    }
  }
}

TEST_CASE("identity report is deterministic under its seed") {
  const SasakianStructure st = standard_sphere_structure(1);
  const auto a = sasakian_identity_report(st, 50, 77, 1e-9);
  const auto b = sasakian_identity_report(st, 50, 77, 1e-9);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].residual == b[i].residual);  // bitwise equal
  }
  const auto c = sasakian_identity_report(st, 50, 78, 1e-9);
  bool any_different = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].kind == "numeric-residual" && a[i].residual != c[i].residual)
      any_different = true;
  CHECK(any_different);
}

TEST_CASE("random tangent sampling is tangent, seedable, and normalizable") {
  Rng r1(5), r2(5);
  const SpherePoint p1 = random_point(r1, 6);
  const SpherePoint p2 = random_point(r2, 6);
  for (int i = 0; i < 6; ++i) CHECK(p1.x[i] == p2.x[i]);

  const Vec t = random_tangent(r1, p1);
  CHECK(std::abs(dot(t, p1.x)) < 1e-12);
  const Vec u = random_tangent(r1, p1, /*unit=*/true);
  CHECK(norm(u) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Reeb field components on the 5-sphere") {
  const PolyVectorField xi = standard_reeb_field(6);
  CHECK(xi.comp(0) == coord(1));
  CHECK(xi.comp(1) == -coord(0));
  CHECK(xi.comp(2) == coord(3));
  CHECK(xi.comp(3) == -coord(2));
  CHECK(xi.comp(4) == coord(5));
  CHECK(xi.comp(5) == -coord(4));
}
