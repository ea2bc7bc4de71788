#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mll/complex.hpp"
#include "mll/group.hpp"
#include "mll/lattice.hpp"
#include "mll/model.hpp"

namespace mll {

/// Real phase in radians.
struct PhaseValue {
  double value = 0.0;
};

/// j^alpha(g, z) = exp(2 i alpha Im<z, g^{-1}.0>)
Complex j_factor(double alpha, const GroupElement& g, Complex z);

/// J(g, z) = j^nu(g, z) j^mu(rho(g), tau(z))
Complex J_factor(const ModelParams& p, const GroupElement& g, Complex z);

/// J with both weights negated; equals conj(J(g, z)).
Complex J_factor_negated(const ModelParams& p, const GroupElement& g, Complex z);

/// Im(nu <g^{-1}.0, g'.0> + mu <rho(g^{-1}).0, rho(g').0>)
PhaseValue chain_phase(const ModelParams& p, const GroupElement& g, const GroupElement& gp);

/// |J(g g', z) - e^{2 i phase(g, g')} J(g, g'.z) J(g', z)|
double check_chain_rule(const ModelParams& p, const GroupElement& g, const GroupElement& gp, Complex z);

struct CocycleEntry {
  Complex gamma;
  Complex gamma_prime;
  double phase_over_pi;
  long nearest;
  double deviation;
};

struct NontrivialityReport {
  static constexpr double kIntegerTol = 1e-9;

  bool nontrivial = true;
  int word_len = 0;
  std::vector<CocycleEntry> entries;
  CocycleEntry worst{};

  std::string summary() const;
};

/// Checks that phase(gamma, gamma') / pi is within 1e-9 of an integer for all
/// gamma, gamma' in the word ball of radius `word_len`. Integrality on the
/// whole lattice is only implied for bilinear phases (affine pairs); the
/// report records the radius that was checked.
NontrivialityReport nontriviality_test(const ModelParams& p, const Lattice& lat, int word_len = 3);

/// chi(gamma) = exp(i phi(gamma) - 2 i mu Im<tau(0), rho(gamma)^{-1}.0>), the
/// value at z = 0 of multiplier_hat. This is the multiplier under which the
/// gauge transform of a mixed form satisfies the Landau functional equation.
Complex multiplier_chi(const ModelParams& p, Complex gamma);

/// chi^(z; gamma) = exp(i (phi(z + gamma) - phi(z)))
///                  exp(-2 i ([B - nu] Im<z, gamma> + mu Im<tau(z), rho(gamma)^{-1}.0>))
/// `field_offset` perturbs the B in the formula (negative control).
Complex multiplier_hat(const ModelParams& p, Complex gamma, Complex z, double field_offset = 0.0);

/// max_z |chi^(z; gamma) - chi^(0; gamma)|
double check_multiplier_independence(const ModelParams& p, Complex gamma, const std::vector<Complex>& z_samples,
                                     double field_offset = 0.0);

/// max |chi(g + g') - e^{2 i B Im<g, g'>} chi(g) chi(g')| over g, g' in the
/// word ball of radius `word_len`.
double pseudo_character_check(const ModelParams& p, const Lattice& lat, int word_len = 3);

/// |chi(g + g') - e^{2 i B Im<g, g'>} chi(g) chi(g')| for one pair.
double pseudo_character_deviation(const ModelParams& p, Complex gamma, Complex gamma_prime);

using SampledFunction = std::function<Complex(Complex)>;

/// |F(z + gamma) - J^{-nu,-mu}(gamma, z) F(z)|
double functional_eq_residual(const ModelParams& p, const SampledFunction& f, Complex gamma, Complex z);

}  // namespace mll
