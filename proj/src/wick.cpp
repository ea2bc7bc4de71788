#include "mll/wick.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "mll/error.hpp"

namespace mll {

namespace {

constexpr double kMaxExponent = 700.0;

std::vector<double> binomial_row(int n) {
  std::vector<double> row(static_cast<std::size_t>(n) + 1, 1.0);
  for (int k = 1; k < n; ++k) {
    row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k) - 1] * (n - k + 1) / k;
  }
  return row;
}

std::vector<Complex> powers(Complex x, int n) {
  std::vector<Complex> out(static_cast<std::size_t>(n) + 1, Complex{1.0, 0.0});
  for (int k = 1; k <= n; ++k) out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k) - 1] * x;
  return out;
}

void accumulate(Polynomial& p, Term t, Complex c) {
  if (c == Complex{}) return;
  p[t] += c;
}

void require_same_exponent(const WickFunction& f, const WickFunction& g) {
  if (f.is_zero() || g.is_zero()) return;
  if (!approx_eq(f.exponent(), g.exponent())) {
    throw Error(ErrorCode::ExponentMismatch, "linear combination of Wick functions with different exponents");
  }
}

const Exponent& shared_exponent(const WickFunction& f, const WickFunction& g) {
  return f.is_zero() ? g.exponent() : f.exponent();
}

}  // namespace

Exponent Exponent::from_complex(Complex a, Complex b, Complex c, Complex d) {
  if (a.imag() != 0.0) {
    throw Error(ErrorCode::InvalidArgument, "the |z|^2 coefficient of a Wick exponent must be real");
  }
  return Exponent{a.real(), b, c, d};
}

bool approx_eq(const Exponent& x, const Exponent& y, double tol) {
  return approx_eq(x.a, y.a, tol) && approx_eq(x.b, y.b, tol) && approx_eq(x.c, y.c, tol) &&
         approx_eq(x.d, y.d, tol);
}

WickFunction::WickFunction(Polynomial coeffs, Exponent exponent)
    : coeffs_(std::move(coeffs)), exponent_(exponent) {
  if (!std::isfinite(exponent_.a) || !is_finite(exponent_.b) || !is_finite(exponent_.c) ||
      !is_finite(exponent_.d)) {
    throw Error(ErrorCode::InvalidArgument, "non-finite Wick exponent");
  }
  for (const auto& [term, c] : coeffs_) {
    if (term.first < 0 || term.second < 0) {
      throw Error(ErrorCode::InvalidArgument, "negative monomial power");
    }
    if (!is_finite(c)) throw Error(ErrorCode::InvalidArgument, "non-finite Wick coefficient");
  }
  prune();
}

WickFunction WickFunction::constant(Complex value, Exponent exponent) {
  return WickFunction(Polynomial{{{0, 0}, value}}, exponent);
}

WickFunction WickFunction::monomial(int m, int n, Complex coeff, Exponent exponent) {
  return WickFunction(Polynomial{{{m, n}, coeff}}, exponent);
}

void WickFunction::prune() {
  const double cutoff = kPruneRelTol * max_coeff();
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    const double mag = std::abs(it->second);
    if (mag == 0.0 || mag < cutoff) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

Complex WickFunction::coeff(int m, int n) const {
  auto it = coeffs_.find({m, n});
  return it == coeffs_.end() ? Complex{} : it->second;
}

int WickFunction::degree() const {
  int deg = -1;
  for (const auto& [term, c] : coeffs_) deg = std::max(deg, term.first + term.second);
  return deg;
}

double WickFunction::max_coeff() const {
  double mx = 0.0;
  for (const auto& [term, c] : coeffs_) mx = std::max(mx, std::abs(c));
  return mx;
}

double WickFunction::l1_norm() const {
  double sum = 0.0;
  for (const auto& [term, c] : coeffs_) sum += std::abs(c);
  return sum;
}

WickFunction wick_add(const WickFunction& f, const WickFunction& g) {
  require_same_exponent(f, g);
  Polynomial sum = f.coeffs();
  for (const auto& [term, c] : g.coeffs()) sum[term] += c;
  return WickFunction(std::move(sum), shared_exponent(f, g));
}

WickFunction wick_sub(const WickFunction& f, const WickFunction& g) { return wick_add(f, wick_scale(g, -1.0)); }

WickFunction wick_scale(const WickFunction& f, Complex s) {
  Polynomial out;
  for (const auto& [term, c] : f.coeffs()) out[term] = s * c;
  return WickFunction(std::move(out), f.exponent());
}

WickFunction wick_mul_poly(const WickFunction& f, const Polynomial& p) {
  Polynomial out;
  for (const auto& [tf, cf] : f.coeffs()) {
    for (const auto& [tp, cp] : p) {
      accumulate(out, {tf.first + tp.first, tf.second + tp.second}, cf * cp);
    }
  }
  return WickFunction(std::move(out), f.exponent());
}

WickFunction wick_mul_exp(const WickFunction& f, const Exponent& delta) {
  return WickFunction(f.coeffs(), f.exponent() + delta);
}

WickFunction wick_dz(const WickFunction& f) {
  const Exponent& e = f.exponent();
  Polynomial out;
  for (const auto& [t, c] : f.coeffs()) {
    const auto [m, n] = t;
    if (m > 0) accumulate(out, {m - 1, n}, static_cast<double>(m) * c);
    // d/dz of the exponent: a conj(z) + b
    accumulate(out, {m, n + 1}, e.a * c);
    accumulate(out, {m, n}, e.b * c);
  }
  return WickFunction(std::move(out), e);
}

WickFunction wick_dzbar(const WickFunction& f) {
  const Exponent& e = f.exponent();
  Polynomial out;
  for (const auto& [t, c] : f.coeffs()) {
    const auto [m, n] = t;
    if (n > 0) accumulate(out, {m, n - 1}, static_cast<double>(n) * c);
    accumulate(out, {m + 1, n}, e.a * c);
    accumulate(out, {m, n}, e.c * c);
  }
  return WickFunction(std::move(out), e);
}

Complex wick_eval(const WickFunction& f, Complex z) {
  if (f.is_zero()) return {};
  const Exponent& e = f.exponent();
  const Complex zb = std::conj(z);
  const Complex arg = e.a * std::norm(z) + e.b * z + e.c * zb + e.d;
  if (arg.real() > kMaxExponent) {
    std::ostringstream os;
    os << "exponent real part " << arg.real() << " at z = " << z;
    throw Error(ErrorCode::Overflow, os.str());
  }

  // Horner in z for each power of conj(z), then Horner in conj(z).
  int max_m = 0;
  int max_n = 0;
  for (const auto& [t, c] : f.coeffs()) {
    max_m = std::max(max_m, t.first);
    max_n = std::max(max_n, t.second);
  }
  Complex acc{};
  for (int n = max_n; n >= 0; --n) {
    Complex row{};
    for (int m = max_m; m >= 0; --m) {
      row = row * z + f.coeff(m, n);
    }
    acc = acc * zb + row;
  }
  return acc * std::exp(arg);
}

WickFunction wick_translate(const WickFunction& f, const GroupElement& g) {
  const Complex a = g.a();
  const Complex b = g.b();
  const Complex ab = std::conj(a);
  const Complex bb = std::conj(b);

  int max_deg = 0;
  for (const auto& [t, c] : f.coeffs()) max_deg = std::max({max_deg, t.first, t.second});
  const auto pa = powers(a, max_deg);
  const auto pab = powers(ab, max_deg);
  const auto pb = powers(b, max_deg);
  const auto pbb = powers(bb, max_deg);

  Polynomial out;
  for (const auto& [t, c] : f.coeffs()) {
    const auto [m, n] = t;
    const auto bm = binomial_row(m);
    const auto bn = binomial_row(n);
    // (a z + b)^m (conj(a) conj(z) + conj(b))^n
    for (int i = 0; i <= m; ++i) {
      const Complex zi = bm[static_cast<std::size_t>(i)] * pa[static_cast<std::size_t>(i)] *
                         pb[static_cast<std::size_t>(m - i)];
      for (int j = 0; j <= n; ++j) {
        const Complex zj = bn[static_cast<std::size_t>(j)] * pab[static_cast<std::size_t>(j)] *
                           pbb[static_cast<std::size_t>(n - j)];
        accumulate(out, {i, j}, c * zi * zj);
      }
    }
  }

  // |a z + b|^2 = |z|^2 + a conj(b) z + conj(a) b conj(z) + |b|^2 since |a| = 1.
  const Exponent& e = f.exponent();
  Exponent moved;
  moved.a = e.a;
  moved.b = e.a * a * bb + e.b * a;
  moved.c = e.a * ab * b + e.c * ab;
  moved.d = e.a * std::norm(b) + e.b * b + e.c * bb + e.d;
  return WickFunction(std::move(out), moved);
}

bool wick_approx_eq(const WickFunction& f, const WickFunction& g, double tol) {
  if (!f.is_zero() && !g.is_zero() && !approx_eq(f.exponent(), g.exponent(), tol)) return false;
  for (const auto& [t, c] : f.coeffs()) {
    if (!approx_eq(c, g.coeff(t.first, t.second), tol)) return false;
  }
  for (const auto& [t, c] : g.coeffs()) {
    if (!approx_eq(f.coeff(t.first, t.second), c, tol)) return false;
  }
  return true;
}

double max_coeff_deviation(const WickFunction& f, const WickFunction& g) {
  require_same_exponent(f, g);
  double dev = 0.0;
  for (const auto& [t, c] : f.coeffs()) dev = std::max(dev, std::abs(c - g.coeff(t.first, t.second)));
  for (const auto& [t, c] : g.coeffs()) dev = std::max(dev, std::abs(f.coeff(t.first, t.second) - c));
  return dev;
}

double wick_l2_norm_sq(const WickFunction& f) {
  const Exponent& e = f.exponent();
  if (f.is_zero()) return 0.0;
  if (!(e.a < 0.0)) throw Error(ErrorCode::InvalidArgument, "L2 norm needs a decaying Gaussian (a < 0)");
  if (std::abs(e.b + std::conj(e.c)) > 1e-12 * std::max({1.0, std::abs(e.b), std::abs(e.c)})) {
    throw Error(ErrorCode::InvalidArgument, "L2 norm needs a pure-phase linear exponent (b = -conj(c))");
  }
  // |f|^2 = |P|^2 exp(2a|z|^2 + 2 Re d); the angular integral keeps only the
  // diagonal z^p conj(z)^p terms, each contributing pi p! / (-2a)^{p+1}.
  const double two_a = -2.0 * e.a;
  double total = 0.0;
  for (const auto& [t1, c1] : f.coeffs()) {
    for (const auto& [t2, c2] : f.coeffs()) {
      const int p = t1.first + t2.second;
      const int q = t1.second + t2.first;
      if (p != q) continue;
      const double moment = std::exp(std::lgamma(p + 1.0) - (p + 1.0) * std::log(two_a)) * M_PI;
      total += std::real(c1 * std::conj(c2)) * moment;
    }
  }
  return total * std::exp(2.0 * e.d.real());
}

WickFunction operator+(const WickFunction& f, const WickFunction& g) { return wick_add(f, g); }
WickFunction operator-(const WickFunction& f, const WickFunction& g) { return wick_sub(f, g); }
WickFunction operator*(Complex s, const WickFunction& f) { return wick_scale(f, s); }

}  // namespace mll
