#include "sasver/space_form.hpp"

#include <map>

namespace sasver::sf {

namespace {

Poly K(long long v) { return Poly::constant(v); }
Poly C() { return Poly::var("c"); }
// (c+3) and (c-1), the two coefficient atoms of the model curvature
Poly cp3() { return C() + K(3); }
Poly cm1() { return C() - K(1); }
Rational frac(long long p, long long q) { return Rational(p, q); }

std::string s_diag(int i) { return "s" + std::to_string(i + 1); }
std::string s_off(int i, int j) {
  return "s" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// Frame model
// ---------------------------------------------------------------------------

FrameVector frame_basis_vector(const AdaptedFrame& fr, int index) {
  if (index < 0 || index >= fr.dim())
    throw std::out_of_range("frame_basis_vector: index out of range");
  FrameVector v(fr.dim());
  v.comp[static_cast<std::size_t>(index)] = K(1);
  return v;
}

FrameVector frame_xi(const AdaptedFrame& fr) {
  return frame_basis_vector(fr, fr.reeb());
}

FrameVector frame_symbolic_vector(const AdaptedFrame& fr, char prefix) {
  if (prefix != 'x' && prefix != 'y' && prefix != 'z' && prefix != 'w')
    throw std::invalid_argument("frame_symbolic_vector: prefix must be x, y, z or w");
  FrameVector v(fr.dim());
  for (int i = 0; i < fr.dim(); ++i)
    v.comp[static_cast<std::size_t>(i)] =
        Poly::var(std::string(1, prefix) + std::to_string(i + 1));
  return v;
}

FrameVector frame_add(const FrameVector& u, const FrameVector& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("frame_add: dimension mismatch");
  FrameVector out(u.dim());
  for (int i = 0; i < u.dim(); ++i)
    out.comp[static_cast<std::size_t>(i)] =
        u.comp[static_cast<std::size_t>(i)] + v.comp[static_cast<std::size_t>(i)];
  return out;
}

FrameVector frame_sub(const FrameVector& u, const FrameVector& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("frame_sub: dimension mismatch");
  FrameVector out(u.dim());
  for (int i = 0; i < u.dim(); ++i)
    out.comp[static_cast<std::size_t>(i)] =
        u.comp[static_cast<std::size_t>(i)] - v.comp[static_cast<std::size_t>(i)];
  return out;
}

FrameVector frame_scale(const Poly& s, const FrameVector& v) {
  FrameVector out(v.dim());
  for (int i = 0; i < v.dim(); ++i)
    out.comp[static_cast<std::size_t>(i)] = s * v.comp[static_cast<std::size_t>(i)];
  return out;
}

bool frame_is_zero(const FrameVector& v) {
  for (const Poly& p : v.comp)
    if (!p.is_zero()) return false;
  return true;
}

Poly frame_inner(const FrameVector& u, const FrameVector& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("frame_inner: dimension mismatch");
  Poly acc;
  for (int i = 0; i < u.dim(); ++i)
    acc += u.comp[static_cast<std::size_t>(i)] * v.comp[static_cast<std::size_t>(i)];
  return acc;
}

Poly frame_eta(const AdaptedFrame& fr, const FrameVector& v) {
  if (v.dim() != fr.dim()) throw std::invalid_argument("frame_eta: dimension mismatch");
  return v.comp[static_cast<std::size_t>(fr.reeb())];
}

FrameVector frame_phi(const AdaptedFrame& fr, const FrameVector& v) {
  if (v.dim() != fr.dim()) throw std::invalid_argument("frame_phi: dimension mismatch");
  FrameVector out(fr.dim());
  for (int i = 0; i < fr.n; ++i) {
    // phi(e_i) = phi e_i, phi(phi e_i) = -e_i, phi(xi) = 0
    out.comp[static_cast<std::size_t>(fr.rotated(i))] =
        v.comp[static_cast<std::size_t>(fr.leaf(i))];
    out.comp[static_cast<std::size_t>(fr.leaf(i))] =
        -v.comp[static_cast<std::size_t>(fr.rotated(i))];
  }
  return out;
}

FrameVector curvature_op(const AdaptedFrame& fr, const FrameVector& X,
                         const FrameVector& Y, const FrameVector& Z) {
  const Poly qp = cp3().scaled(frac(1, 4));
  const Poly qm = cm1().scaled(frac(1, 4));

  const Poly gYZ = frame_inner(Y, Z);
  const Poly gXZ = frame_inner(X, Z);
  const FrameVector phiX = frame_phi(fr, X);
  const FrameVector phiY = frame_phi(fr, Y);
  const FrameVector phiZ = frame_phi(fr, Z);
  const Poly gZphiY = frame_inner(Z, phiY);
  const Poly gZphiX = frame_inner(Z, phiX);
  const Poly gXphiY = frame_inner(X, phiY);
  const Poly eX = frame_eta(fr, X);
  const Poly eY = frame_eta(fr, Y);
  const Poly eZ = frame_eta(fr, Z);
  const FrameVector xi = frame_xi(fr);

  FrameVector out = frame_scale(qp, frame_sub(frame_scale(gYZ, X), frame_scale(gXZ, Y)));

  FrameVector inner = frame_sub(frame_scale(gZphiY, phiX), frame_scale(gZphiX, phiY));
  inner = frame_add(inner, frame_scale(gXphiY.scaled(2), phiZ));
  inner = frame_sub(inner, frame_scale(gYZ * eX, xi));
  inner = frame_add(inner, frame_scale(gXZ * eY, xi));
  inner = frame_sub(inner, frame_scale(eY * eZ, X));
  inner = frame_add(inner, frame_scale(eX * eZ, Y));

  return frame_add(out, frame_scale(qm, inner));
}

Poly riemann4(const AdaptedFrame& fr, const FrameVector& X, const FrameVector& Y,
              const FrameVector& Z, const FrameVector& W) {
  return frame_inner(Z, curvature_op(fr, X, Y, W));
}

// ---------------------------------------------------------------------------
// FrameCurvature
// ---------------------------------------------------------------------------

FrameCurvature::FrameCurvature(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("FrameCurvature: dim must be >= 1");
  const std::size_t total = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim) *
                            static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
  comp_.resize(total);
  assigned_.assign(total, 0);
}

std::size_t FrameCurvature::idx(int a, int b, int c, int d) const {
  if (a < 0 || a >= dim_ || b < 0 || b >= dim_ || c < 0 || c >= dim_ || d < 0 || d >= dim_)
    throw std::out_of_range("FrameCurvature: index out of range");
  return ((static_cast<std::size_t>(a) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(b)) *
              static_cast<std::size_t>(dim_) +
          static_cast<std::size_t>(c)) *
             static_cast<std::size_t>(dim_) +
         static_cast<std::size_t>(d);
}

const Poly& FrameCurvature::at(int a, int b, int c, int d) const {
  return comp_[idx(a, b, c, d)];
}

void FrameCurvature::place(int a, int b, int c, int d, const Poly& value) {
  const std::size_t i = idx(a, b, c, d);
  if (assigned_[i]) {
    if (!(comp_[i] == value))
      throw std::logic_error("FrameCurvature: conflicting value for component (" +
                             std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + "," + std::to_string(d) + ")");
    return;
  }
  comp_[i] = value;
  assigned_[i] = 1;
}

void FrameCurvature::set_component(int a, int b, int c, int d, const Poly& value) {
  const Poly neg = -value;
  place(a, b, c, d, value);
  place(b, a, c, d, neg);
  place(a, b, d, c, neg);
  place(b, a, d, c, value);
  place(c, d, a, b, value);
  place(d, c, a, b, neg);
  place(c, d, b, a, neg);
  place(d, c, b, a, value);
}

Poly FrameCurvature::norm_sq() const {
  Poly acc;
  for (const Poly& p : comp_) acc += p * p;
  return acc;
}

std::vector<std::vector<Poly>> FrameCurvature::ricci() const {
  std::vector<std::vector<Poly>> rho(static_cast<std::size_t>(dim_),
                                     std::vector<Poly>(static_cast<std::size_t>(dim_)));
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) {
      Poly acc;
      for (int e = 0; e < dim_; ++e) acc += at(a, e, b, e);
      rho[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = acc;
    }
  return rho;
}

Poly FrameCurvature::scalar() const {
  Poly acc;
  for (int a = 0; a < dim_; ++a)
    for (int e = 0; e < dim_; ++e) acc += at(a, e, a, e);
  return acc;
}

void FrameCurvature::check_symmetries() const {
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c)
        for (int d = 0; d < dim_; ++d) {
          const Poly& v = at(a, b, c, d);
          if (!(v == -at(b, a, c, d)))
            throw std::logic_error("FrameCurvature: first-pair antisymmetry fails at (" +
                                   std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c) + "," + std::to_string(d) + ")");
          if (!(v == -at(a, b, d, c)))
            throw std::logic_error("FrameCurvature: second-pair antisymmetry fails at (" +
                                   std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c) + "," + std::to_string(d) + ")");
          if (!(v == at(c, d, a, b)))
            throw std::logic_error("FrameCurvature: pair-exchange symmetry fails at (" +
                                   std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c) + "," + std::to_string(d) + ")");
          // cyclic identity in the slots (1,2,4), slot 3 fixed
          Poly bianchi = v + at(b, d, c, a) + at(d, a, c, b);
          if (!bianchi.is_zero())
            throw std::logic_error("FrameCurvature: first Bianchi identity fails at (" +
                                   std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c) + "," + std::to_string(d) + ")");
        }
}

FrameCurvature model_frame_curvature(const AdaptedFrame& fr) {
  const int n = fr.n;
  FrameCurvature R(fr.dim());
  const Poly qp = cp3().scaled(frac(1, 4));
  const Poly qm = cm1().scaled(frac(1, 4));
  const Poly qh = cm1().scaled(frac(1, 2));
  const int XI = fr.reeb();
  auto delta = [](int i, int j) { return i == j ? 1 : 0; };

  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Poly v = K(delta(i, k));
      R.set_component(fr.leaf(i), XI, fr.leaf(k), XI, v);
      R.set_component(fr.rotated(i), XI, fr.rotated(k), XI, v);
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          const long long anti = delta(i, k) * delta(j, m) - delta(i, m) * delta(j, k);
          const Poly vp = qp.scaled(Rational(anti));
          R.set_component(fr.leaf(i), fr.leaf(j), fr.leaf(k), fr.leaf(m), vp);
          R.set_component(fr.rotated(i), fr.rotated(j), fr.rotated(k), fr.rotated(m), vp);
          const Poly vm = qm.scaled(Rational(anti));
          R.set_component(fr.leaf(i), fr.leaf(j), fr.rotated(k), fr.rotated(m), vm);
          R.set_component(fr.rotated(i), fr.rotated(j), fr.leaf(k), fr.leaf(m), vm);
          const Poly vmix = qp.scaled(Rational(delta(i, k) * delta(j, m))) +
                            qm.scaled(Rational(delta(i, m) * delta(j, k))) +
                            qh.scaled(Rational(delta(i, j) * delta(k, m)));
          R.set_component(fr.leaf(i), fr.rotated(j), fr.leaf(k), fr.rotated(m), vmix);
        }
  return R;
}

std::vector<std::vector<Poly>> horizontal_mixed_matrix(const AdaptedFrame& fr,
                                                       const FrameCurvature& R) {
  const int n = fr.n;
  auto horiz = [&](int p) { return p < n ? fr.rotated(p) : fr.reeb(); };
  std::vector<std::vector<Poly>> S(static_cast<std::size_t>(n + 1),
                                   std::vector<Poly>(static_cast<std::size_t>(n + 1)));
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      Poly acc;
      for (int k = 0; k < n; ++k) acc += R.at(horiz(p), fr.leaf(k), horiz(q), fr.leaf(k));
      S[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = acc;
    }
  return S;
}

// ---------------------------------------------------------------------------
// Closed-form invariants
// ---------------------------------------------------------------------------

Poly ricci_contact_eigenvalue(int n) {
  return (cp3().scaled(Rational(n)) + cm1()).scaled(frac(1, 2));
}

Poly scalar_curvature(int n) {
  return (cp3().scaled(Rational(static_cast<long long>(n) * (2 * n + 1))) +
          cm1().scaled(Rational(n)))
      .scaled(frac(1, 2));
}

Poly riemann_norm_sq(int n) {
  const long long nn = n;
  return cp3().pow(2).scaled(Rational(nn * (2 * nn - 1), 4)) +
         cm1().pow(2).scaled(Rational(nn * (6 * nn + 3), 4)) +
         (cp3() * cm1()).scaled(Rational(3 * nn, 2)) + K(8 * nn);
}

Poly ricci_norm_sq(int n) {
  const long long nn = n;
  return ricci_contact_eigenvalue(n).pow(2).scaled(Rational(2 * nn)) + K(4 * nn * nn);
}

Poly mixed_trace_eigenvalue(int n) {
  return (cp3().scaled(Rational(n)) + cm1().scaled(Rational(3))).scaled(frac(1, 4));
}

Poly horizontal_ricci_block_sq(int n) {
  const long long nn = n;
  return ricci_contact_eigenvalue(n).pow(2).scaled(Rational(nn)) + K(4 * nn * nn);
}

Poly horizontal_curvature_block_sq(int n) {
  const long long nn = n;
  return cp3().pow(2).scaled(Rational((nn - 1) * nn, 8)) + K(4 * nn);
}

// ---------------------------------------------------------------------------
// Heat-trace coefficients
// ---------------------------------------------------------------------------

ScalarHeatCoeffs scalar_heat_coeffs(int n) {
  const Poly vol = Poly::var("Vol");
  const Poly tau = scalar_curvature(n);
  ScalarHeatCoeffs h;
  h.a0 = vol;
  h.a1 = tau.scaled(frac(1, 6)) * vol;
  h.a2 = (tau.pow(2).scaled(Rational(5)) - ricci_norm_sq(n).scaled(Rational(2)) +
          riemann_norm_sq(n).scaled(Rational(2)))
             .scaled(frac(1, 360)) *
         vol;
  return h;
}

ScalarHeatCoeffs scalar_heat_coeffs_printed(int n) {
  const Poly vol = Poly::var("Vol");
  const long long nn = n;
  ScalarHeatCoeffs h;
  h.a0 = vol;
  h.a1 = (cp3().scaled(Rational(2 * nn + 1)) + cm1())
             .scaled(Rational(nn, 12)) *
         vol;
  h.a2 = (K(64 - 32 * nn) +
          cp3().pow(2).scaled(Rational(-2 + 9 * nn + 16 * nn * nn + 20 * nn * nn * nn)) +
          (cp3() * cm1()).scaled(Rational(12 + 2 * nn + 20 * nn * nn)) +
          cm1().pow(2).scaled(Rational(2 + 17 * nn)))
             .scaled(Rational(nn, 1440)) *
         vol;
  return h;
}

NormalHeatCoeffs normal_heat_coeffs(int n) {
  const Poly vol = Poly::var("Vol");
  const Poly ia = Poly::var("IA");
  const Poly iv = Poly::var("IV");
  const TransverseChain ch = transverse_chain(n);
  const ScalarHeatCoeffs a = scalar_heat_coeffs(n);
  const Rational np1(n + 1);

  NormalHeatCoeffs h;
  h.b0 = vol.scaled(np1);
  // integral of the transverse scalar curvature: the alpha part integrates
  // to IA, the constant part to Vol times itself
  const Poly tau_t_const = ch.tau_transverse - Poly::var("alpha").scaled(Rational(3));
  if (!tau_t_const.derivative("alpha").is_zero())
    throw std::logic_error("normal_heat_coeffs: transverse scalar not linear in alpha");
  h.b1 = a.a1.scaled(np1) + ia.scaled(Rational(3)) + tau_t_const * vol;
  h.b2 = a.a2.scaled(np1) +
         (iv + ch.b2_alpha_coeff * ia + ch.b2_const_coeff * vol).scaled(frac(1, 12));
  return h;
}

NormalHeatCoeffs normal_heat_coeffs_printed(int n) {
  const Poly vol = Poly::var("Vol");
  const Poly ia = Poly::var("IA");
  const Poly iv = Poly::var("IV");
  const long long nn = n;
  const ScalarHeatCoeffs a = scalar_heat_coeffs_printed(n);

  NormalHeatCoeffs h;
  h.b0 = vol.scaled(Rational(nn + 1));
  h.b1 = (cp3().scaled(Rational(2 * nn * nn + 6 * nn - 2)) +
          cm1().scaled(Rational(3 * (nn + 1))) + K(2 * nn))
                 .scaled(Rational(nn, 12)) *
             vol +
         ia.scaled(Rational(3));
  const Poly ia_coeff = cp3().scaled(Rational(-3 + 12 * nn + 6 * nn * nn)) +
                        cm1().scaled(Rational(-9 + 3 * nn));
  const Poly vol_coeff =
      K(42 * nn * nn - 28 * nn) +
      cp3().scaled(Rational(nn * (3 + 11 * nn + 4 * nn * nn))) +
      cp3().pow(2).scaled(Rational(nn * (-11 - 15 * nn + 13 * nn * nn + 4 * nn * nn * nn), 8)) +
      cm1().scaled(Rational(nn * (27 + 2 * nn))) +
      cm1().pow(2).scaled(Rational(-36 + 3 * nn, 8)) +
      (cp3() * cm1()).scaled(Rational(-6 - 24 * nn + 2 * nn * nn + nn * nn * nn, 4));
  h.b2 = a.a2.scaled(Rational(nn + 1)) +
         (iv + ia_coeff * ia + vol_coeff * vol).scaled(frac(1, 12));
  return h;
}

// ---------------------------------------------------------------------------
// Transverse invariant chain
// ---------------------------------------------------------------------------

TransverseChain transverse_chain(int n) {
  if (n < 1) throw std::invalid_argument("transverse_chain: n must be >= 1");
  const long long nn = n;
  const Poly alpha = Poly::var("alpha");
  const Poly vsq = Poly::var("Vsq");

  TransverseChain ch;
  ch.n = n;
  ch.rhobar = ricci_contact_eigenvalue(n);
  ch.d = mixed_trace_eigenvalue(n);
  ch.l = horizontal_ricci_block_sq(n);
  ch.lprime = horizontal_curvature_block_sq(n);
  ch.tau = scalar_curvature(n);

  ch.tau_transverse =
      alpha.scaled(Rational(3)) +
      (cp3().scaled(Rational(nn - 1)) + K(8)).scaled(Rational(nn, 4));
  ch.tau_mixed = (ch.d + K(1)).scaled(Rational(nn));
  ch.tau_mixed_printed = (C() + K(1)).scaled(Rational(nn));
  ch.t_norm_sq = alpha - ch.tau_mixed;
  ch.t_norm_sq_printed = alpha - ch.tau_mixed_printed;

  // pairing sums over the diagonal and the off-diagonal symbols
  Poly sum_s_sq, sum_off_sq;
  for (int i = 0; i < n; ++i) sum_s_sq += Poly::var(s_diag(i)).pow(2);
  for (int i = 0; i < n + 1; ++i)
    for (int j = i + 1; j < n + 1; ++j) sum_off_sq += Poly::var(s_off(i, j)).pow(2);

  // transverse Ricci in the adapted basis: diagonal entries
  // rhobar + 3 s_i - d on the rotated directions, 4n on the Reeb direction,
  // off-diagonal entries 3 s_i_j; the linear part of the diagonal square sum
  // is rewritten through sum_i s_i = alpha - n
  ch.rho_transverse_norm_sq =
      sum_s_sq.scaled(Rational(9)) + sum_off_sq.scaled(Rational(18)) +
      (ch.rhobar - ch.d).scaled(Rational(6)) * (alpha - K(nn)) +
      (ch.rhobar - ch.d).pow(2).scaled(Rational(nn)) + K(16 * nn * nn);

  ch.rho_transverse_norm_sq_printed =
      sum_s_sq.scaled(Rational(9)) + sum_off_sq.scaled(Rational(18)) +
      (ch.d * (ch.d + K(6))).scaled(Rational(nn)) - ch.d.scaled(Rational(6)) * alpha +
      K(16 * nn * nn) +
      ch.rhobar.scaled(Rational(2)) *
          (alpha.scaled(Rational(3)) - C().scaled(Rational(nn + 1))) +
      ch.rhobar.pow(2).scaled(Rational(nn));

  ch.r_transverse_norm_sq = ch.lprime + K(24 * nn) +
                            cp3().scaled(Rational(3)) * (alpha - K(2 * nn)) + vsq;
  ch.r_transverse_norm_sq_printed =
      cp3().pow(2).scaled(Rational((nn - 1) * nn, 8)) - cp3().scaled(Rational(3 * nn)) +
      K(28 * nn) + cp3().scaled(Rational(3)) * alpha + vsq;

  ch.c24_norm_sq = sum_s_sq.scaled(Rational(9)) + sum_off_sq.scaled(Rational(18)) +
                   K(9 * nn * nn);

  // b2 integrand reduction: after removing 6 |C24 V|^2 - |V|^2 the remainder
  // must close over {c, alpha} and be linear in alpha
  const Poly integrand = (ch.tau * ch.tau_transverse).scaled(Rational(2)) +
                         ch.rho_transverse_norm_sq.scaled(Rational(6)) -
                         ch.r_transverse_norm_sq;
  const Poly group = integrand - (ch.c24_norm_sq.scaled(Rational(6)) - vsq);
  for (const std::string& v : group.variables())
    if (v != "c" && v != "alpha")
      throw std::logic_error("transverse_chain: b2 remainder depends on " + v);
  ch.b2_alpha_coeff = group.derivative("alpha");
  if (!ch.b2_alpha_coeff.derivative("alpha").is_zero())
    throw std::logic_error("transverse_chain: b2 remainder not linear in alpha");
  ch.b2_const_coeff = group - alpha * ch.b2_alpha_coeff;
  for (const std::string& v : ch.b2_const_coeff.variables())
    if (v != "c")
      throw std::logic_error("transverse_chain: b2 constant coefficient depends on " + v);
  return ch;
}

// ---------------------------------------------------------------------------
// Totally geodesic leaves, constant curvature case
// ---------------------------------------------------------------------------

TotallyGeodesicConstants totally_geodesic_constants(int n) {
  if (n < 1) throw std::invalid_argument("totally_geodesic_constants: n must be >= 1");
  const long long nn = n;
  TotallyGeodesicConstants tg;
  tg.c24_sq_printed = Rational(18 * nn * nn);
  tg.v_sq = Rational(18 * nn * nn + 18 * nn);
  tg.combo = Rational(6) * tg.c24_sq_printed - tg.v_sq;

  // evaluate the pairing form of |C24 V|^2 at s_i = n, s_i_j = 0
  const TransverseChain ch = transverse_chain(n);
  std::map<std::string, Rational> binding;
  for (int i = 0; i < n; ++i) binding[s_diag(i)] = Rational(nn);
  for (int i = 0; i < n + 1; ++i)
    for (int j = i + 1; j < n + 1; ++j) binding[s_off(i, j)] = Rational(0);
  tg.c24_sq_from_pairings = ch.c24_norm_sq.eval(binding);
  return tg;
}

// ---------------------------------------------------------------------------
// Isospectral invariant list
// ---------------------------------------------------------------------------

FoliationInvariants foliation_invariants(int n, const Rational& c,
                                         const Rational& ia_per_vol,
                                         const Rational& iv_per_vol) {
  if (n < 1) throw std::invalid_argument("foliation_invariants: n must be >= 1");
  FoliationInvariants inv;
  inv.dim = 2 * n + 1;
  inv.c = c;
  inv.ia_per_vol = ia_per_vol;
  // |T|^2 = |A|^2 - n(d+1) pointwise for minimal leaves, so the integrals
  // differ by the constant n(d+1) Vol
  const Rational dval = mixed_trace_eigenvalue(n).eval({{"c", c}});
  inv.it_per_vol = ia_per_vol - Rational(n) * (dval + Rational(1));
  inv.iv_per_vol = iv_per_vol;
  return inv;
}

}  // namespace sasver::sf
