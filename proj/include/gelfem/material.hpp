#pragma once

/**
 * \file material.hpp
 * \brief Flory-Rehner gel constitutive kernel in the free-swelling frame.
 *
 * The dry-network energy, in units of kT/v per unit dry volume, is
 * \f[
 *   W(F) = \tfrac12 Nv (I_1 - 3 - 2\ln J)
 *          - \Big[(J-1)\ln\frac{J}{J-1} + \frac{\chi}{J}\Big]
 *          - \frac{\mu}{kT}(J-1).
 * \f]
 * Computations are carried out relative to the stress-free swollen state
 * \f$ F = \lambda_0 F' \f$, with the energy per unit swollen volume
 * \f$ W'(F') = \lambda_0^{-3} W(\lambda_0 F') \f$. All stresses and moduli
 * returned here are with respect to the primed configuration.
 */

#include "gelfem/types.hpp"

namespace gelfem {

/// Admissible states need lambda0^3 * J' > 1 + kAdmissibilityGuard.
inline constexpr double kAdmissibilityGuard = 1e-9;

struct MaterialParams {
  double Nv = 1e-3;
  double chi = 0.1;
  double mu_bar = 0.0;   ///< current mu/kT
  double mu0_bar = 0.0;  ///< mu/kT of the free-swelling reference
  double lambda0 = 1.0;  ///< free-swelling stretch at mu0_bar

  /// Solves for lambda0 and starts at the reference (mu_bar = mu0_bar).
  static MaterialParams at_reference(double Nv, double chi, double mu0_bar);

  [[nodiscard]] MaterialParams with_mu(double mu) const {
    MaterialParams p = *this;
    p.mu_bar = mu;
    return p;
  }
};

/// Residual of the free-swelling balance
/// Nv(1/l - 1/l^3) + ln(1 - 1/l^3) + 1/l^3 + chi/l^6 - mu0_bar.
double free_swelling_residual(double Nv, double chi, double mu0_bar, double lambda);

/// Bracketed bisection followed by safeguarded Newton on [1 + 1e-4, 100].
/// Throws DomainError when Nv <= 0, mu0_bar > 0 or the bracket holds no root.
double solve_free_swelling_stretch(double Nv, double chi, double mu0_bar);

/// Kinematics of one material point, measured from the free-swelling state.
struct DeformationState {
  Mat3 Fp = Mat3::Identity();
  Mat3 Cp = Mat3::Identity();
  Mat3 Cp_inv = Mat3::Identity();
  double I1p = 3.0;
  double I3p = 1.0;
  double Jp = 1.0;

  static DeformationState from_F(const Mat3& Fp);
  /// F' is taken as the symmetric square root of C'.
  static DeformationState from_C(const Mat3& Cp);
};

struct StressTangent {
  Vec6 S = Vec6::Zero();
  Mat6 D = Mat6::Zero();
  double W = 0.0;
};

/// Derivatives of W' with respect to the invariants of C'.
struct InvariantDerivatives {
  double dW_dI1 = 0.0;
  double dW_dJ = 0.0;
  double d2W_dJ2 = 0.0;
  double dW_dI3 = 0.0;
  double d2W_dI3dI3 = 0.0;
  double delta1 = 0.0;  ///< coefficient of C'^-1 (x) C'^-1
  double delta2 = 0.0;  ///< coefficient of the symmetrized C'^-1 (.) C'^-1
};

/// Dry-network energy at a total deformation (J and I1 of F measured from dry).
double dry_energy(const MaterialParams& params, double I1, double J);

/// Dry-network first Piola-Kirchhoff stress P = dW/dF for a total F.
Mat3 dry_nominal_stress(const MaterialParams& params, const Mat3& F);

double energy(const MaterialParams& params, const DeformationState& state);

InvariantDerivatives invariant_derivatives(const MaterialParams& params,
                                           const DeformationState& state);

StressTangent stress_and_tangent(const MaterialParams& params, const DeformationState& state);

/// P' = dW'/dF' evaluated through the dry nominal stress (independent of S).
Mat3 nominal_stress(const MaterialParams& params, const DeformationState& state);

/// Throws DomainError unless J' > 0 and lambda0^3 J' > 1 + guard.
void check_admissible(const MaterialParams& params, double Jp);

}  // namespace gelfem
