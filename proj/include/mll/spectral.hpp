#pragma once

// Operator layer on the Wick class for affine equivariant pairs, where
// S(z) = sigma z + xi_0 and the harmonic defect R vanishes:
//
//   L   = -d_z d_zbar - (S d_z - conj(S) d_zbar) + |S|^2
//   A   =  d_zbar + S
//   A~  = -d_z + conj(S)
//   W f = exp(i phi) f,  phi(z) = -2 Im<z, xi_0>
//
// Every operation throws NotAffine for generic pairs (those go through the
// finite-difference oracle) and NonPositiveField when B <= 0.

#include "mll/group.hpp"
#include "mll/model.hpp"
#include "mll/wick.hpp"

namespace mll {

/// Relation between the two eigenfunction constructions: iterating A~ on the
/// ground state gives (-1)^m times the Rodrigues construction.
enum class LadderSign { RodriguesPlus, RodriguesMinus };

inline constexpr LadderSign kLadderSign = LadderSign::RodriguesMinus;

/// Sign relating A~^m(z^n e^{-B|z|^2 - i phi}) to the Rodrigues eigenfunction.
inline double ladder_sign(int m) {
  if (kLadderSign == LadderSign::RodriguesPlus) return 1.0;
  return (m % 2 == 0) ? 1.0 : -1.0;
}

WickFunction apply_L(const ModelParams& p, const WickFunction& f);
WickFunction apply_A(const ModelParams& p, const WickFunction& f);
WickFunction apply_Atilde(const ModelParams& p, const WickFunction& f);

struct SusyResidual {
  double annihilator_first;  // max |(A~A + B) f - L f|
  double creator_first;      // max |(A A~ - B) f - L f|
};

/// `field_offset` shifts the B used in both relations (negative control).
SusyResidual check_susy(const ModelParams& p, const WickFunction& f, double field_offset = 0.0);

/// H_{m,n}(z) = e^{2B|z|^2} d^m/dz^m (z^n e^{-2B|z|^2}), returned with a zero exponent.
WickFunction hermite(double field, int m, int n);

/// G_{m,n}(z) = e^{2B|z|^2 - h} d^m/dz^m (z^n e^{-2B|z|^2 + h}), h(z) = h0 + h1 z.
WickFunction generalized_hermite(double field, Complex h0, Complex h1, int m, int n);

/// Laguerre polynomial L_k(x) by the three-term recurrence.
double laguerre(int k, double x);

/// psi_{m,n} = e^{-B|z|^2} e^{-i phi} H_{m,n}; eigenvalue B (2m + 1).
WickFunction eigenfunction(const ModelParams& p, int m, int n);

/// A~^m (z^n e^{-B|z|^2 - i phi}), equal to ladder_sign(m) * eigenfunction(p, m, n).
WickFunction eigenfunction_by_ladder(const ModelParams& p, int m, int n);

/// Landau level B (2m + 1).
double landau_level(const ModelParams& p, int m);

/// max coefficient of L f - lambda f after scaling f to unit max-coefficient.
double eigen_residual(const ModelParams& p, const WickFunction& f, double eigenvalue);

WickFunction gauge_W(const ModelParams& p, const WickFunction& f);
WickFunction gauge_W_inv(const ModelParams& p, const WickFunction& f);

/// max coefficient of W L f - L_B W f, L_B the pure Landau operator at the same B.
double check_intertwine(const ModelParams& p, const WickFunction& f);

/// Exponent of J(g, z) = j^nu(g, z) j^mu(rho(g), tau(z)), which is affine in (z, conj z).
Exponent magnetic_factor_exponent(const ModelParams& p, const GroupElement& g);

/// [T_g f](z) = J(g, z) f(g.z)
WickFunction magnetic_T(const ModelParams& p, const GroupElement& g, const WickFunction& f);

/// max coefficient of T_g L f - L T_g f
double check_T_commutes(const ModelParams& p, const GroupElement& g, const WickFunction& f);

}  // namespace mll
