#include "mll/group.hpp"

#include <sstream>

#include "mll/error.hpp"

namespace mll {

GroupElement::GroupElement(Complex a, Complex b) : a_(a), b_(b) {
  if (!is_finite(a) || !is_finite(b)) {
    throw Error(ErrorCode::InvalidArgument, "group element with non-finite entries");
  }
  if (std::abs(std::abs(a) - 1.0) > kUnimodularTol) {
    std::ostringstream os;
    os << "|a| = " << std::abs(a) << " deviates from 1";
    throw Error(ErrorCode::NonUnimodular, os.str());
  }
}

GroupElement GroupElement::compose(const GroupElement& rhs) const {
  GroupElement out;
  out.a_ = a_ * rhs.a_;
  out.b_ = a_ * rhs.b_ + b_;
  return out;
}

GroupElement GroupElement::inverse() const {
  GroupElement out;
  out.a_ = std::conj(a_);
  out.b_ = -std::conj(a_) * b_;
  return out;
}

bool approx_eq(const GroupElement& g, const GroupElement& h, double tol) {
  return approx_eq(g.a(), h.a(), tol) && approx_eq(g.b(), h.b(), tol);
}

}  // namespace mll
