#include "mll/spectral.hpp"

#include <sstream>

#include "mll/error.hpp"

namespace mll {

namespace {

struct AffineOperatorData {
  double field;
  Complex xi;
  Polynomial s;       // sigma z + xi
  Polynomial s_conj;  // sigma conj(z) + conj(xi)
  Polynomial s_norm;  // |S|^2
};

AffineOperatorData operator_data(const ModelParams& p) {
  const AffineS s = s_affine(p);
  const double field = magnetic_field(p);
  const double sigma = s.slope;
  const Complex xi = s.offset;
  AffineOperatorData d{field, xi, {}, {}, {}};
  d.s = {{{1, 0}, sigma}, {{0, 0}, xi}};
  d.s_conj = {{{0, 1}, sigma}, {{0, 0}, std::conj(xi)}};
  d.s_norm = {{{1, 1}, sigma * sigma},
              {{1, 0}, sigma * std::conj(xi)},
              {{0, 1}, sigma * xi},
              {{0, 0}, std::norm(xi)}};
  return d;
}

void require_positive(double field) {
  if (!(field > 0.0)) {
    std::ostringstream os;
    os << "B = " << field << " must be positive";
    throw Error(ErrorCode::NonPositiveField, os.str());
  }
}

// exp(+i phi) as a Wick exponent: i phi(z) = -conj(xi) z + xi conj(z).
Exponent gauge_exponent(Complex xi) { return Exponent{0.0, -std::conj(xi), xi, {}}; }

}  // namespace

WickFunction apply_L(const ModelParams& p, const WickFunction& f) {
  const AffineOperatorData d = operator_data(p);
  // The harmonic defect term -(mu/4) R vanishes identically for affine tau.
  const WickFunction fz = wick_dz(f);
  const WickFunction fzb = wick_dzbar(f);
  WickFunction out = wick_scale(wick_dz(fzb), -1.0);
  out = out - wick_mul_poly(fz, d.s);
  out = out + wick_mul_poly(fzb, d.s_conj);
  out = out + wick_mul_poly(f, d.s_norm);
  return out;
}

WickFunction apply_A(const ModelParams& p, const WickFunction& f) {
  const AffineOperatorData d = operator_data(p);
  return wick_dzbar(f) + wick_mul_poly(f, d.s);
}

WickFunction apply_Atilde(const ModelParams& p, const WickFunction& f) {
  const AffineOperatorData d = operator_data(p);
  return wick_mul_poly(f, d.s_conj) - wick_dz(f);
}

SusyResidual check_susy(const ModelParams& p, const WickFunction& f, double field_offset) {
  if (f.is_zero()) {
    operator_data(p);
    return {0.0, 0.0};
  }
  const double field = magnetic_field(p) + field_offset;
  const WickFunction lf = apply_L(p, f);
  const WickFunction first = apply_Atilde(p, apply_A(p, f)) + wick_scale(f, field);
  const WickFunction second = apply_A(p, apply_Atilde(p, f)) - wick_scale(f, field);
  return {max_coeff_deviation(first, lf), max_coeff_deviation(second, lf)};
}

WickFunction hermite(double field, int m, int n) {
  return generalized_hermite(field, Complex{}, Complex{}, m, n);
}

WickFunction generalized_hermite(double field, Complex /*h0*/, Complex h1, int m, int n) {
  // The constant h0 cancels between the prefactor and the derivative.
  require_positive(field);
  if (m < 0 || n < 0) throw Error(ErrorCode::InvalidArgument, "Hermite indices must be non-negative");
  WickFunction f = WickFunction::monomial(n, 0, 1.0, Exponent{-2.0 * field, h1, {}, {}});
  for (int k = 0; k < m; ++k) f = wick_dz(f);
  return f.polynomial_part();
}

double laguerre(int k, double x) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "Laguerre degree must be non-negative");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 - x;
  for (int j = 1; j < k; ++j) {
    const double next = ((2.0 * j + 1.0 - x) * cur - j * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

WickFunction eigenfunction(const ModelParams& p, int m, int n) {
  const AffineOperatorData d = operator_data(p);
  const WickFunction h = hermite(d.field, m, n);
  return wick_mul_exp(h, Exponent{-d.field, {}, {}, {}} + (-gauge_exponent(d.xi)));
}

WickFunction eigenfunction_by_ladder(const ModelParams& p, int m, int n) {
  const AffineOperatorData d = operator_data(p);
  WickFunction f = WickFunction::monomial(n, 0, 1.0, Exponent{-d.field, {}, {}, {}} + (-gauge_exponent(d.xi)));
  for (int k = 0; k < m; ++k) f = apply_Atilde(p, f);
  return f;
}

double landau_level(const ModelParams& p, int m) { return magnetic_field(p) * (2.0 * m + 1.0); }

double eigen_residual(const ModelParams& p, const WickFunction& f, double eigenvalue) {
  if (f.is_zero()) return 0.0;
  const WickFunction unit = wick_scale(f, 1.0 / f.max_coeff());
  return max_coeff_deviation(apply_L(p, unit), wick_scale(unit, eigenvalue));
}

WickFunction gauge_W(const ModelParams& p, const WickFunction& f) {
  return wick_mul_exp(f, gauge_exponent(gauge_phi(p)));
}

WickFunction gauge_W_inv(const ModelParams& p, const WickFunction& f) {
  return wick_mul_exp(f, -gauge_exponent(gauge_phi(p)));
}

double check_intertwine(const ModelParams& p, const WickFunction& f) {
  const ModelParams landau = ModelParams::landau(magnetic_field(p));
  return max_coeff_deviation(gauge_W(p, apply_L(p, f)), apply_L(landau, gauge_W(p, f)));
}

Exponent magnetic_factor_exponent(const ModelParams& p, const GroupElement& g) {
  const AffineTau t = p.pair.affine_tau();
  Exponent e;
  // j^nu(g, z) = exp(nu (z conj(c) - conj(z) c)), c = g^{-1}.0
  const Complex c = g.inverse().b();
  e.b += p.nu * std::conj(c);
  e.c += -p.nu * c;
  // j^mu(rho(g), tau(z)) with tau = p z + q conj(z) + r
  const Complex cr = p.pair.rho(g).inverse().b();
  e.b += p.mu * (t.p * std::conj(cr) - std::conj(t.q) * cr);
  e.c += p.mu * (t.q * std::conj(cr) - std::conj(t.p) * cr);
  e.d += p.mu * (t.r * std::conj(cr) - std::conj(t.r) * cr);
  return e;
}

WickFunction magnetic_T(const ModelParams& p, const GroupElement& g, const WickFunction& f) {
  return wick_mul_exp(wick_translate(f, g), magnetic_factor_exponent(p, g));
}

double check_T_commutes(const ModelParams& p, const GroupElement& g, const WickFunction& f) {
  return max_coeff_deviation(magnetic_T(p, g, apply_L(p, f)), apply_L(p, magnetic_T(p, g, f)));
}

}  // namespace mll
