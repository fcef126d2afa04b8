#pragma once

// Exact Levi-Civita machinery for a frame of vector fields with constant
// bracket coefficients and a left-invariant metric: connection coefficients
// through the Koszul formula, the curvature they generate, and the
// one-parameter family of metrics rescaled along the Reeb direction.  All
// entries stay polynomials over Q, so every identity is checked exactly.

#include <stdexcept>
#include <vector>

#include "sasver/poly.hpp"
#include "sasver/space_form.hpp"

namespace sasver::fa {

using alg::Poly;
using alg::Rational;

// Frame X_1..X_k with [X_i, X_j] = sum_m bracket[i][j][m] X_m and metric
// entries metric[i][j] = g(X_i, X_j).
struct FrameAlgebra {
  int k = 0;
  std::vector<std::vector<std::vector<Rational>>> bracket;
  std::vector<std::vector<Poly>> metric;
};

// Throws std::invalid_argument on shape errors, on a bracket that is not
// antisymmetric or fails the Jacobi identity, or on a non-symmetric metric.
void validate(const FrameAlgebra& fr);

// Connection coefficients nabla_{X_i} X_j = sum_m gamma[i][j][m] X_m from
// the Koszul formula
//   2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y).
// Exact for constant metrics (Gaussian elimination over Q) and for diagonal
// polynomial metrics (exact division); other shapes are rejected.
std::vector<std::vector<std::vector<Poly>>> levi_civita(const FrameAlgebra& fr);

// (0,4) curvature of the Levi-Civita connection, with the same sign
// convention as sf::riemann4: entry (i,j,k,l) = <X_k, R(X_i,X_j) X_l>.
// Built through symmetry-checked completion, so a connection that fails the
// curvature symmetries is rejected with std::logic_error.
//
// The contractions norm_sq/ricci/scalar of the result assume an orthonormal
// frame; for a non-orthonormal metric use the components directly.
sf::FrameCurvature curvature(const FrameAlgebra& fr);

// Structure endomorphism data of a contact frame: phi(X_i) = sum_m
// phi[i][m] X_m, with the Reeb field at reeb_index.
struct ContactFrameData {
  std::vector<std::vector<Rational>> phi;
  int reeb_index = 0;
};

// The unit three-sphere as the group of unit quaternions, in the
// left-invariant frame (W, Y, xi) = indices (0, 1, 2), with brackets
// [W, xi] = -2Y, [Y, xi] = 2W, [W, Y] = 2 xi and the round metric.
FrameAlgebra su2_round_frame();
// Structure endomorphism of the standard contact structure on that frame:
// phi(W) = Y, phi(Y) = -W, phi(xi) = 0.
ContactFrameData su2_contact_data();

// Metric a g + a(a-1) eta (x) eta on the same frame, where eta is the dual
// of the Reeb field and `a` enters as a polynomial symbol.  Applied to the
// round frame this is the Berger family diag(a, a, a^2).
FrameAlgebra d_homothetic(const FrameAlgebra& fr, int reeb_index);

}  // namespace sasver::fa
