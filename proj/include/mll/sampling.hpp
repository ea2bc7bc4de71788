#pragma once

// Seeded generators for the randomized verification suites.

#include <random>

#include "mll/group.hpp"
#include "mll/model.hpp"
#include "mll/wick.hpp"

namespace mll {

using Rng = std::mt19937_64;

enum class PairKind { Inner, Conjugate };

double uniform(Rng& rng, double lo, double hi);
Complex random_complex(Rng& rng, double radius);
GroupElement random_group_element(Rng& rng, double radius = 2.0);

/// Affine model with B in roughly [0.2, 4]. Conjugate models draw nu > mu.
ModelParams random_affine_model(Rng& rng, PairKind kind);

/// Dense polynomial of total degree <= degree with coefficients in the unit
/// box, times exp(a|z|^2 + bz + c conj(z) + d) with a in [-2, 0.5].
WickFunction random_wick(Rng& rng, int degree);

}  // namespace mll
