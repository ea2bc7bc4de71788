#pragma once

#include "mll/complex.hpp"

namespace mll {

/// Element [a, b] of the motion group T x| C acting on the plane by z -> a z + b.
class GroupElement {
 public:
  static constexpr double kUnimodularTol = 1e-12;

  GroupElement() = default;
  /// Throws NonUnimodular when ||a| - 1| > 1e-12.
  GroupElement(Complex a, Complex b);

  static GroupElement identity() { return {}; }
  static GroupElement translation(Complex b) { return {Complex{1.0, 0.0}, b}; }
  static GroupElement rotation(double angle) { return {unit_phase(angle), Complex{}}; }

  Complex a() const { return a_; }
  Complex b() const { return b_; }

  /// [a, b][a', b'] = [a a', a b' + b]
  GroupElement compose(const GroupElement& rhs) const;
  /// [a, b]^{-1} = [conj(a), -conj(a) b]
  GroupElement inverse() const;
  Complex act(Complex z) const { return a_ * z + b_; }

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h) { return g.compose(h); }

 private:
  Complex a_{1.0, 0.0};
  Complex b_{};
};

inline GroupElement group_compose(const GroupElement& g, const GroupElement& h) { return g.compose(h); }
inline GroupElement group_inverse(const GroupElement& g) { return g.inverse(); }
inline Complex group_act(const GroupElement& g, Complex z) { return g.act(z); }

bool approx_eq(const GroupElement& g, const GroupElement& h, double tol = kDefaultTol);

}  // namespace mll
