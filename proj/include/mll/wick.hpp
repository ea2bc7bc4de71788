#pragma once

// Exact calculus on functions of the form
//
//   f(z) = (sum_{m,n} c[m,n] z^m conj(z)^n) * exp(a |z|^2 + b z + c conj(z) + d)
//
// with real a and complex b, c, d. The class is closed under the Wirtinger
// derivatives, multiplication by polynomials and by exponentials of the same
// shape, and affine substitutions z -> a z + b with |a| = 1. Every operator
// identity in the library is checked coefficient-wise on this class.

#include <map>
#include <utility>

#include "mll/complex.hpp"
#include "mll/group.hpp"

namespace mll {

/// Exponent monomial z^m conj(z)^n.
using Term = std::pair<int, int>;
/// Finite-support polynomial in (z, conj z), ordered by (m, n).
using Polynomial = std::map<Term, Complex>;

struct Exponent {
  double a = 0.0;  // coefficient of |z|^2
  Complex b{};     // coefficient of z
  Complex c{};     // coefficient of conj(z)
  Complex d{};     // constant

  /// Throws InvalidArgument if `a` has a non-zero imaginary part.
  static Exponent from_complex(Complex a, Complex b, Complex c, Complex d);

  Exponent operator+(const Exponent& rhs) const { return {a + rhs.a, b + rhs.b, c + rhs.c, d + rhs.d}; }
  Exponent operator-() const { return {-a, -b, -c, -d}; }
  Exponent operator-(const Exponent& rhs) const { return *this + (-rhs); }
};

bool approx_eq(const Exponent& x, const Exponent& y, double tol = kDefaultTol);

class WickFunction {
 public:
  static constexpr double kPruneRelTol = 1e-14;

  /// The zero function.
  WickFunction() = default;
  WickFunction(Polynomial coeffs, Exponent exponent);

  static WickFunction constant(Complex value, Exponent exponent = {});
  static WickFunction monomial(int m, int n, Complex coeff = 1.0, Exponent exponent = {});
  static WickFunction gaussian(double a) { return constant(1.0, Exponent{a, {}, {}, {}}); }

  const Polynomial& coeffs() const { return coeffs_; }
  const Exponent& exponent() const { return exponent_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of z^m conj(z)^n, zero when absent.
  Complex coeff(int m, int n) const;
  /// Largest total degree m + n present; -1 for the zero function.
  int degree() const;
  double max_coeff() const;
  /// Sum of |c[m,n]|.
  double l1_norm() const;

  /// Same polynomial with the exponent replaced by zero.
  WickFunction polynomial_part() const { return WickFunction(coeffs_, Exponent{}); }

 private:
  void prune();

  Polynomial coeffs_;
  Exponent exponent_;
};

/// Throws ExponentMismatch unless the exponents agree within tolerance. A zero
/// operand adopts the other operand's exponent.
WickFunction wick_add(const WickFunction& f, const WickFunction& g);
WickFunction wick_sub(const WickFunction& f, const WickFunction& g);
WickFunction wick_scale(const WickFunction& f, Complex s);
WickFunction wick_mul_poly(const WickFunction& f, const Polynomial& p);
/// Multiplies by exp(delta), i.e. adds delta to the exponent.
WickFunction wick_mul_exp(const WickFunction& f, const Exponent& delta);

WickFunction wick_dz(const WickFunction& f);
WickFunction wick_dzbar(const WickFunction& f);

/// Throws Overflow if the real part of the exponent at z exceeds 700.
Complex wick_eval(const WickFunction& f, Complex z);

/// z -> f(a z + b) for g = [a, b].
WickFunction wick_translate(const WickFunction& f, const GroupElement& g);

bool wick_approx_eq(const WickFunction& f, const WickFunction& g, double tol = kDefaultTol);

/// max |c_f[m,n] - c_g[m,n]| over the union of supports. Throws
/// ExponentMismatch when the exponents differ.
double max_coeff_deviation(const WickFunction& f, const WickFunction& g);

/// Exact integral of |f|^2 over the plane for a decaying Gaussian exponent
/// (a < 0) whose linear part is a pure phase (b = -conj(c)). Throws
/// InvalidArgument otherwise.
double wick_l2_norm_sq(const WickFunction& f);

WickFunction operator+(const WickFunction& f, const WickFunction& g);
WickFunction operator-(const WickFunction& f, const WickFunction& g);
WickFunction operator*(Complex s, const WickFunction& f);

}  // namespace mll
