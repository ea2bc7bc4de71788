#pragma once

#include <functional>
#include <variant>

#include "mll/complex.hpp"
#include "mll/group.hpp"

namespace mll {

/// tau(z) = h.z = alpha z + beta, rho(g) = h g h^{-1}.
struct InnerAffine {
  GroupElement h;
};

/// tau(z) = alpha conj(z) + beta, rho([a, b]) = [conj(a), alpha conj(b) + beta (1 - conj(a))].
struct ConjugateAffine {
  GroupElement h;
};

/// Arbitrary pair supplied programmatically. The derivative callbacks must
/// describe `tau` exactly; nothing is differentiated numerically. All
/// callbacks must be pure and reentrant.
struct GenericPair {
  std::function<Complex(Complex)> tau;
  std::function<Complex(Complex)> dtau_dz;
  std::function<Complex(Complex)> dtau_dzbar;
  std::function<Complex(Complex)> lap_tau;
  std::function<GroupElement(const GroupElement&)> rho;
};

/// tau(z) = p z + q conj(z) + r for the two affine variants.
struct AffineTau {
  Complex p;
  Complex q;
  Complex r;
};

class EquivariantPair {
 public:
  using Variant = std::variant<InnerAffine, ConjugateAffine, GenericPair>;

  static EquivariantPair inner(const GroupElement& h);
  static EquivariantPair conjugate(const GroupElement& h);
  static EquivariantPair generic(GenericPair pair);
  /// tau = id, rho = id.
  static EquivariantPair identity() { return inner(GroupElement::identity()); }

  const Variant& variant() const { return v_; }
  bool is_affine() const { return !std::holds_alternative<GenericPair>(v_); }
  /// Throws NotAffine for generic pairs.
  AffineTau affine_tau() const;

  Complex tau(Complex z) const;
  Complex dtau_dz(Complex z) const;
  Complex dtau_dzbar(Complex z) const;
  Complex lap_tau(Complex z) const;
  GroupElement rho(const GroupElement& g) const;

 private:
  explicit EquivariantPair(Variant v) : v_(std::move(v)) {}

  Variant v_;
};

/// Weights (nu, mu) together with an equivariant pair. Both weights must be
/// finite and non-negative; positivity of the derived field is checked by the
/// spectral operations, not here.
struct ModelParams {
  double nu = 1.0;
  double mu = 0.0;
  EquivariantPair pair = EquivariantPair::identity();

  ModelParams(double nu, double mu, EquivariantPair pair);

  /// Pure Landau model with field B: nu = B, mu = 0, trivial pair.
  static ModelParams landau(double field);
};

/// S(z) = nu z + mu (tau d(conj tau)/d(conj z) - conj(tau) d(tau)/d(conj z)).
Complex s_function(const ModelParams& p, Complex z);

struct AffineS {
  double slope;    // sigma
  Complex offset;  // xi_0
};

/// S(z) = slope z + offset. Throws NotAffine for generic pairs.
AffineS s_affine(const ModelParams& p);

/// B = nu + mu (|d tau/dz|^2 - |d tau/d conj z|^2). Generic pairs are
/// sampled at fixed points and must agree within 1e-8 (NotConstant). Throws
/// NonPositiveField when B <= 0.
double magnetic_field(const ModelParams& p);

/// Same formula without the sign requirement.
double magnetic_field_unchecked(const ModelParams& p);

/// xi_0 = S(z) - B z; the gauge is phi(z) = -2 Im<z, xi_0>, phi(0) = 0.
/// Throws NotAffine.
Complex gauge_phi(const ModelParams& p);

/// phi(z) for affine models.
double gauge_phase(const ModelParams& p, Complex z);

/// R(z) = tau Laplacian(conj tau) - conj(tau) Laplacian(tau); zero for affine pairs.
Complex harmonic_defect(const ModelParams& p, Complex z);

/// |tau(g.z) - rho(g).tau(z)|
double check_equivariance(const EquivariantPair& pair, const GroupElement& g, Complex z);

}  // namespace mll
