#include "sasver/frame_algebra.hpp"

#include <string>

namespace sasver::fa {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

// g([X_i, X_j], X_l)
Poly bracket_inner(const FrameAlgebra& fr, int i, int j, int l) {
  Poly acc;
  for (int m = 0; m < fr.k; ++m) {
    const Rational& coef = fr.bracket[uz(i)][uz(j)][uz(m)];
    if (!coef.is_zero()) acc += fr.metric[uz(m)][uz(l)].scaled(coef);
  }
  return acc;
}

// Koszul right-hand side 2 g(nabla_{X_i} X_j, X_l).
Poly koszul_rhs(const FrameAlgebra& fr, int i, int j, int l) {
  return bracket_inner(fr, i, j, l) - bracket_inner(fr, j, l, i) +
         bracket_inner(fr, l, i, j);
}

bool metric_is_constant(const FrameAlgebra& fr) {
  for (const auto& row : fr.metric)
    for (const Poly& e : row)
      if (!e.is_constant()) return false;
  return true;
}

bool metric_is_diagonal(const FrameAlgebra& fr) {
  for (int i = 0; i < fr.k; ++i)
    for (int j = 0; j < fr.k; ++j)
      if (i != j && !fr.metric[uz(i)][uz(j)].is_zero()) return false;
  return true;
}

// Solve G x = rhs for each (i,j) with G the constant metric matrix, by
// Gaussian elimination over Q applied to polynomial right-hand sides.
std::vector<std::vector<std::vector<Poly>>> solve_constant(const FrameAlgebra& fr) {
  const int k = fr.k;
  std::vector<std::vector<Rational>> g(uz(k), std::vector<Rational>(uz(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g[uz(i)][uz(j)] = fr.metric[uz(i)][uz(j)].constant_value();

  // LU-style elimination with partial pivoting on the rational matrix,
  // recording the row operations to replay on each right-hand side
  std::vector<std::vector<std::vector<Poly>>> gamma(
      uz(k), std::vector<std::vector<Poly>>(uz(k), std::vector<Poly>(uz(k))));

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<std::vector<Rational>> m = g;
      std::vector<Poly> b(uz(k));
      for (int l = 0; l < k; ++l) b[uz(l)] = koszul_rhs(fr, i, j, l).scaled(Rational(1, 2));
      // forward elimination
      for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int row = col; row < k; ++row)
          if (!m[uz(row)][uz(col)].is_zero()) {
            pivot = row;
            break;
          }
        if (pivot < 0)
          throw std::invalid_argument("levi_civita: metric matrix is singular");
        std::swap(m[uz(col)], m[uz(pivot)]);
        std::swap(b[uz(col)], b[uz(pivot)]);
        for (int row = col + 1; row < k; ++row) {
          if (m[uz(row)][uz(col)].is_zero()) continue;
          const Rational f = m[uz(row)][uz(col)] / m[uz(col)][uz(col)];
          for (int cc = col; cc < k; ++cc)
            m[uz(row)][uz(cc)] -= f * m[uz(col)][uz(cc)];
          b[uz(row)] -= b[uz(col)].scaled(f);
        }
      }
      // back substitution
      for (int row = k - 1; row >= 0; --row) {
        Poly acc = b[uz(row)];
        for (int cc = row + 1; cc < k; ++cc)
          acc -= gamma[uz(i)][uz(j)][uz(cc)].scaled(m[uz(row)][uz(cc)]);
        gamma[uz(i)][uz(j)][uz(row)] = acc.scaled(Rational(1) / m[uz(row)][uz(row)]);
      }
    }
  return gamma;
}

// Diagonal polynomial metric: gamma[i][j][l] = rhs / (2 g_ll), exactly.
std::vector<std::vector<std::vector<Poly>>> solve_diagonal(const FrameAlgebra& fr) {
  const int k = fr.k;
  std::vector<std::vector<std::vector<Poly>>> gamma(
      uz(k), std::vector<std::vector<Poly>>(uz(k), std::vector<Poly>(uz(k))));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        const Poly den = fr.metric[uz(l)][uz(l)].scaled(Rational(2));
        gamma[uz(i)][uz(j)][uz(l)] = koszul_rhs(fr, i, j, l).divided_by_exact(den);
      }
  return gamma;
}

}  // namespace

void validate(const FrameAlgebra& fr) {
  const int k = fr.k;
  if (k < 1) throw std::invalid_argument("FrameAlgebra: k must be >= 1");
  if (static_cast<int>(fr.bracket.size()) != k ||
      static_cast<int>(fr.metric.size()) != k)
    throw std::invalid_argument("FrameAlgebra: inconsistent container sizes");
  for (const auto& plane : fr.bracket) {
    if (static_cast<int>(plane.size()) != k)
      throw std::invalid_argument("FrameAlgebra: inconsistent bracket shape");
    for (const auto& row : plane)
      if (static_cast<int>(row.size()) != k)
        throw std::invalid_argument("FrameAlgebra: inconsistent bracket shape");
  }
  for (const auto& row : fr.metric)
    if (static_cast<int>(row.size()) != k)
      throw std::invalid_argument("FrameAlgebra: inconsistent metric shape");

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      for (int m = 0; m < k; ++m)
        if (fr.bracket[uz(i)][uz(j)][uz(m)] != -fr.bracket[uz(j)][uz(i)][uz(m)])
          throw std::invalid_argument("FrameAlgebra: bracket is not antisymmetric");
      if (!(fr.metric[uz(i)][uz(j)] == fr.metric[uz(j)][uz(i)]))
        throw std::invalid_argument("FrameAlgebra: metric is not symmetric");
    }

  // Jacobi identity: sum over cyclic permutations of [[X_i,X_j],X_l] = 0
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        for (int p = 0; p < k; ++p) {
          Rational acc;
          for (int m = 0; m < k; ++m)
            acc += fr.bracket[uz(i)][uz(j)][uz(m)] * fr.bracket[uz(m)][uz(l)][uz(p)] +
                   fr.bracket[uz(j)][uz(l)][uz(m)] * fr.bracket[uz(m)][uz(i)][uz(p)] +
                   fr.bracket[uz(l)][uz(i)][uz(m)] * fr.bracket[uz(m)][uz(j)][uz(p)];
          if (!acc.is_zero())
            throw std::invalid_argument("FrameAlgebra: Jacobi identity fails");
        }
}

std::vector<std::vector<std::vector<Poly>>> levi_civita(const FrameAlgebra& fr) {
  validate(fr);
  if (metric_is_constant(fr)) return solve_constant(fr);
  if (metric_is_diagonal(fr)) return solve_diagonal(fr);
  throw std::invalid_argument(
      "levi_civita: metric must be constant or diagonal with polynomial entries");
}

sf::FrameCurvature curvature(const FrameAlgebra& fr) {
  const int k = fr.k;
  const auto gamma = levi_civita(fr);
  sf::FrameCurvature R(k);

  // R(X_i, X_j) X_l = nabla_i nabla_j X_l - nabla_j nabla_i X_l
  //                   - nabla_{[X_i, X_j]} X_l, all coefficients constant
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        std::vector<Poly> op(uz(k));
        for (int m = 0; m < k; ++m)
          for (int p = 0; p < k; ++p) {
            op[uz(p)] += gamma[uz(j)][uz(l)][uz(m)] * gamma[uz(i)][uz(m)][uz(p)];
            op[uz(p)] -= gamma[uz(i)][uz(l)][uz(m)] * gamma[uz(j)][uz(m)][uz(p)];
            op[uz(p)] -= gamma[uz(m)][uz(l)][uz(p)].scaled(fr.bracket[uz(i)][uz(j)][uz(m)]);
          }
        for (int kk = 0; kk < k; ++kk) {
          Poly entry;
          for (int p = 0; p < k; ++p) entry += op[uz(p)] * fr.metric[uz(p)][uz(kk)];
          R.set_component(i, j, kk, l, entry);
        }
      }
  return R;
}

FrameAlgebra su2_round_frame() {
  FrameAlgebra fr;
  fr.k = 3;
  fr.bracket.assign(3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3)));
  // indices: 0 = W, 1 = Y, 2 = xi
  auto set_bracket = [&](int i, int j, int m, long long v) {
    fr.bracket[uz(i)][uz(j)][uz(m)] = Rational(v);
    fr.bracket[uz(j)][uz(i)][uz(m)] = Rational(-v);
  };
  set_bracket(0, 2, 1, -2);  // [W, xi] = -2 Y
  set_bracket(1, 2, 0, 2);   // [Y, xi] =  2 W
  set_bracket(0, 1, 2, 2);   // [W, Y]  =  2 xi
  fr.metric.assign(3, std::vector<Poly>(3));
  for (int i = 0; i < 3; ++i) fr.metric[uz(i)][uz(i)] = Poly::constant(1);
  return fr;
}

ContactFrameData su2_contact_data() {
  ContactFrameData data;
  data.reeb_index = 2;
  data.phi.assign(3, std::vector<Rational>(3));
  data.phi[0][1] = Rational(1);   // phi(W) = Y
  data.phi[1][0] = Rational(-1);  // phi(Y) = -W
  return data;
}

FrameAlgebra d_homothetic(const FrameAlgebra& fr, int reeb_index) {
  validate(fr);
  if (reeb_index < 0 || reeb_index >= fr.k)
    throw std::invalid_argument("d_homothetic: reeb index out of range");
  const Poly a = Poly::var("a");
  FrameAlgebra out = fr;
  for (int i = 0; i < fr.k; ++i)
    for (int j = 0; j < fr.k; ++j) {
      // eta(X_i) = g(X_i, xi)
      const Poly etai = fr.metric[uz(i)][uz(reeb_index)];
      const Poly etaj = fr.metric[uz(j)][uz(reeb_index)];
      out.metric[uz(i)][uz(j)] =
          a * fr.metric[uz(i)][uz(j)] + a * (a - Poly::constant(1)) * etai * etaj;
    }
  return out;
}

}  // namespace sasver::fa
