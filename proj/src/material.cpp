#include "gelfem/material.hpp"
#include "gelfem/voigt.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

namespace gelfem {

namespace {

constexpr double kLambdaLow = 1.0 + 1e-4;
constexpr double kLambdaHigh = 100.0;

double free_swelling_residual_slope(double Nv, double chi, double lambda) {
  const double l3 = lambda * lambda * lambda;
  const double l4 = l3 * lambda;
  return Nv * (-1.0 / (lambda * lambda) + 3.0 / l4) + 3.0 / (l4 * (1.0 - 1.0 / l3)) - 3.0 / l4 -
         6.0 * chi / (l4 * l3);
}

// Derivatives of the dry energy with respect to the total Jacobian J.
double dry_dW_dJ(const MaterialParams& p, double J) {
  return -p.Nv / J + 1.0 / J + p.chi / (J * J) + std::log1p(-1.0 / J) - p.mu_bar;
}

double dry_d2W_dJ2(const MaterialParams& p, double J) {
  return (p.Nv - 1.0) / (J * J) - 2.0 * p.chi / (J * J * J) + 1.0 / (J * (J - 1.0));
}

}  // namespace

double free_swelling_residual(double Nv, double chi, double mu0_bar, double lambda) {
  const double inv3 = 1.0 / (lambda * lambda * lambda);
  return Nv * (1.0 / lambda - inv3) + std::log1p(-inv3) + inv3 + chi * inv3 * inv3 - mu0_bar;
}

double solve_free_swelling_stretch(double Nv, double chi, double mu0_bar) {
  if (!(Nv > 0.0)) throw DomainError("free swelling: Nv must be positive");
  if (!(mu0_bar <= 0.0)) throw DomainError("free swelling: mu0_bar must be <= 0 (solvent at or below saturation)");

  double lo = kLambdaLow;
  double hi = kLambdaHigh;
  const double r_lo = free_swelling_residual(Nv, chi, mu0_bar, lo);
  const double r_hi = free_swelling_residual(Nv, chi, mu0_bar, hi);
  if (!(r_lo < 0.0)) {
    std::ostringstream msg;
    msg << "free swelling: no root, residual at lambda=" << lo << " is not negative (" << r_lo << ")";
    throw DomainError(msg.str());
  }
  if (!(r_hi > 0.0)) {
    std::ostringstream msg;
    msg << "free swelling: no root, residual at lambda=" << hi << " is not positive (" << r_hi
        << "); mu0_bar too close to saturation";
    throw DomainError(msg.str());
  }

  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (free_swelling_residual(Nv, chi, mu0_bar, mid) < 0.0) lo = mid; else hi = mid;
  }

  double lambda = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double r = free_swelling_residual(Nv, chi, mu0_bar, lambda);
    if (r == 0.0) break;
    if (r < 0.0) lo = lambda; else hi = lambda;
    double next = lambda - r / free_swelling_residual_slope(Nv, chi, lambda);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - lambda);
    lambda = next;
    if (step < 1e-13) break;
  }
  return lambda;
}

MaterialParams MaterialParams::at_reference(double Nv, double chi, double mu0_bar) {
  MaterialParams p;
  p.Nv = Nv;
  p.chi = chi;
  p.mu0_bar = mu0_bar;
  p.mu_bar = mu0_bar;
  p.lambda0 = solve_free_swelling_stretch(Nv, chi, mu0_bar);
  return p;
}

DeformationState DeformationState::from_F(const Mat3& Fp) {
  DeformationState s;
  s.Fp = Fp;
  s.Cp = Fp.transpose() * Fp;
  s.Jp = Fp.determinant();
  s.I1p = s.Cp.trace();
  s.I3p = s.Jp * s.Jp;
  if (s.Jp > 0.0) s.Cp_inv = s.Cp.inverse();
  return s;
}

DeformationState DeformationState::from_C(const Mat3& Cp) {
  Eigen::SelfAdjointEigenSolver<Mat3> eig(Cp);
  const Mat3 Fp = eig.eigenvectors() * eig.eigenvalues().cwiseSqrt().asDiagonal() *
                  eig.eigenvectors().transpose();
  DeformationState s = from_F(Fp);
  s.Cp = Cp;
  s.I1p = Cp.trace();
  s.Cp_inv = Cp.inverse();
  return s;
}

void check_admissible(const MaterialParams& params, double Jp) {
  const double l3 = params.lambda0 * params.lambda0 * params.lambda0;
  if (!(Jp > 0.0) || !(l3 * Jp > 1.0 + kAdmissibilityGuard)) {
    std::ostringstream msg;
    msg << "inadmissible state: total volume at/below dry network (lambda0^3*J'=" << l3 * Jp << ")";
    throw DomainError(msg.str());
  }
}

double dry_energy(const MaterialParams& p, double I1, double J) {
  const double elastic = 0.5 * p.Nv * (I1 - 3.0 - 2.0 * std::log(J));
  // (J-1) ln(J/(J-1)) written to stay accurate for J >> 1.
  const double mixing = -(J - 1.0) * std::log1p(-1.0 / J) + p.chi / J;
  return elastic - mixing - p.mu_bar * (J - 1.0);
}

Mat3 dry_nominal_stress(const MaterialParams& p, const Mat3& F) {
  const double J = F.determinant();
  const Mat3 F_invT = F.inverse().transpose();
  const double mixing = J * std::log(J / (J - 1.0)) - 1.0 - p.chi / J;
  return p.Nv * (F - F_invT) - mixing * F_invT - p.mu_bar * J * F_invT;
}

double energy(const MaterialParams& params, const DeformationState& state) {
  check_admissible(params, state.Jp);
  const double l = params.lambda0;
  const double l3 = l * l * l;
  return dry_energy(params, l * l * state.I1p, l3 * state.Jp) / l3;
}

InvariantDerivatives invariant_derivatives(const MaterialParams& params,
                                           const DeformationState& state) {
  check_admissible(params, state.Jp);
  const double l = params.lambda0;
  const double l3 = l * l * l;
  const double Jp = state.Jp;
  const double J = l3 * Jp;

  InvariantDerivatives d;
  d.dW_dI1 = 0.5 * params.Nv / l;
  d.dW_dJ = dry_dW_dJ(params, J);
  d.d2W_dJ2 = l3 * dry_d2W_dJ2(params, J);

  // J' = sqrt(I3'): dJ/dI3 = 1/(2J), d2J/dI3^2 = -1/(4J^3).
  d.dW_dI3 = d.dW_dJ / (2.0 * Jp);
  d.d2W_dI3dI3 = d.d2W_dJ2 / (4.0 * Jp * Jp) - d.dW_dJ / (4.0 * Jp * Jp * Jp);

  const double I3 = state.I3p;
  d.delta1 = 4.0 * (I3 * d.dW_dI3 + I3 * I3 * d.d2W_dI3dI3);
  d.delta2 = -4.0 * I3 * d.dW_dI3;
  return d;
}

StressTangent stress_and_tangent(const MaterialParams& params, const DeformationState& state) {
  const InvariantDerivatives d = invariant_derivatives(params, state);
  const Mat3& Ci = state.Cp_inv;

  StressTangent out;
  out.W = energy(params, state);
  const Mat3 S = 2.0 * (d.dW_dI1 * Mat3::Identity() + state.I3p * d.dW_dI3 * Ci);
  out.S = voigt::from_stress(S);

  for (int a = 0; a < 6; ++a) {
    const auto [i, j] = voigt::kIndex[a];
    for (int b = 0; b < 6; ++b) {
      const auto [k, m] = voigt::kIndex[b];
      out.D(a, b) = d.delta1 * Ci(i, j) * Ci(k, m) +
                    d.delta2 * 0.5 * (Ci(i, k) * Ci(j, m) + Ci(i, m) * Ci(j, k));
    }
  }
  return out;
}

Mat3 nominal_stress(const MaterialParams& params, const DeformationState& state) {
  check_admissible(params, state.Jp);
  const double l = params.lambda0;
  return dry_nominal_stress(params, l * state.Fp) / (l * l);
}

}  // namespace gelfem
