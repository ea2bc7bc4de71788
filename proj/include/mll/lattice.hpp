#pragma once

#include <vector>

#include "mll/complex.hpp"

namespace mll {

/// Uniform lattice Z w1 + Z w2 in the plane.
class Lattice {
 public:
  /// Throws InvalidArgument unless Im(conj(w1) w2) != 0.
  Lattice(Complex w1, Complex w2);

  static Lattice square() { return {Complex{1.0, 0.0}, Complex{0.0, 1.0}}; }

  Complex w1() const { return w1_; }
  Complex w2() const { return w2_; }
  Complex point(long a, long b) const { return static_cast<double>(a) * w1_ + static_cast<double>(b) * w2_; }

  /// Area of the fundamental parallelogram, |Im(conj(w1) w2)|.
  double area() const;
  /// |w1| + |w2|, bounds the diameter of the fundamental parallelogram.
  double cell_diameter() const { return std::abs(w1_) + std::abs(w2_); }

 private:
  Complex w1_;
  Complex w2_;
};

/// All lattice points with |gamma| <= radius, ordered by (a, b); includes 0.
std::vector<Complex> lattice_points(const Lattice& lat, double radius);

/// Points a w1 + b w2 with |a| + |b| <= word_len (words of that length in the generators).
std::vector<Complex> word_ball(const Lattice& lat, int word_len);

}  // namespace mll
