#include "mll/lattice.hpp"

#include <cmath>

#include "mll/error.hpp"

namespace mll {

Lattice::Lattice(Complex w1, Complex w2) : w1_(w1), w2_(w2) {
  if (!is_finite(w1) || !is_finite(w2)) throw Error(ErrorCode::InvalidArgument, "non-finite lattice generator");
  if (std::abs(std::imag(std::conj(w1) * w2)) <= 1e-14 * std::max(1.0, std::abs(w1) * std::abs(w2))) {
    throw Error(ErrorCode::InvalidArgument, "lattice generators are R-linearly dependent");
  }
}

double Lattice::area() const { return std::abs(std::imag(std::conj(w1_) * w2_)); }

std::vector<Complex> lattice_points(const Lattice& lat, double radius) {
  if (radius < 0.0) throw Error(ErrorCode::InvalidArgument, "negative enumeration radius");
  // |a w1 + b w2| <= R implies |a| <= R |w2| / area and |b| <= R |w1| / area.
  const double area = lat.area();
  const long amax = static_cast<long>(std::ceil(radius * std::abs(lat.w2()) / area));
  const long bmax = static_cast<long>(std::ceil(radius * std::abs(lat.w1()) / area));
  std::vector<Complex> out;
  for (long a = -amax; a <= amax; ++a) {
    for (long b = -bmax; b <= bmax; ++b) {
      const Complex g = lat.point(a, b);
      if (std::abs(g) <= radius * (1.0 + 1e-12)) out.push_back(g);
    }
  }
  return out;
}

std::vector<Complex> word_ball(const Lattice& lat, int word_len) {
  if (word_len < 0) throw Error(ErrorCode::InvalidArgument, "negative word length");
  std::vector<Complex> out;
  for (long a = -word_len; a <= word_len; ++a) {
    const long rest = word_len - std::abs(a);
    for (long b = -rest; b <= rest; ++b) out.push_back(lat.point(a, b));
  }
  return out;
}

}  // namespace mll
