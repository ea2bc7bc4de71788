#include "mll/sampling.hpp"

namespace mll {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Complex random_complex(Rng& rng, double radius) { return {uniform(rng, -radius, radius), uniform(rng, -radius, radius)}; }

GroupElement random_group_element(Rng& rng, double radius) {
  const Complex a = unit_phase(uniform(rng, -M_PI, M_PI));
  return GroupElement(a, random_complex(rng, radius));
}

ModelParams random_affine_model(Rng& rng, PairKind kind) {
  const GroupElement h = random_group_element(rng, 1.5);
  if (kind == PairKind::Inner) {
    const double nu = uniform(rng, 0.0, 2.0);
    const double mu = uniform(rng, 0.2, 2.0);
    return ModelParams(nu, mu, EquivariantPair::inner(h));
  }
  const double mu = uniform(rng, 0.0, 1.5);
  const double nu = mu + uniform(rng, 0.2, 2.0);
  return ModelParams(nu, mu, EquivariantPair::conjugate(h));
}

WickFunction random_wick(Rng& rng, int degree) {
  Polynomial poly;
  for (int m = 0; m <= degree; ++m) {
    for (int n = 0; m + n <= degree; ++n) poly[{m, n}] = random_complex(rng, 1.0);
  }
  const Exponent e{uniform(rng, -2.0, 0.5), random_complex(rng, 1.0), random_complex(rng, 1.0),
                   random_complex(rng, 0.5)};
  return WickFunction(std::move(poly), e);
}

}  // namespace mll
