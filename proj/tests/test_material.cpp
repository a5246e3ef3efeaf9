#include "gelfem/material.hpp"
#include "gelfem/verify.hpp"
#include "gelfem/voigt.hpp"
#include "oracle_values.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace gelfem {
namespace {

using oracle::kChi;
using oracle::kNv;

MaterialParams reference_at_zero() { return MaterialParams::at_reference(kNv, kChi, 0.0); }

TEST(FreeSwellingStretch, MatchesBisectionOracle) {
  const double lambda0 = solve_free_swelling_stretch(kNv, kChi, 0.0);
  EXPECT_NEAR(lambda0, oracle::kLambda0AtZero, 1e-10 * oracle::kLambda0AtZero);
  EXPECT_LT(std::abs(free_swelling_residual(kNv, kChi, 0.0, lambda0)), 1e-12);
}

TEST(FreeSwellingStretch, CommonlyQuotedValues) {
  // 3.390 is the root at mu/kT = 0; 1.482 is the root at mu/kT = -0.05.
  EXPECT_NEAR(solve_free_swelling_stretch(kNv, kChi, 0.0), 3.390, 0.005 * 3.390);
  EXPECT_NEAR(solve_free_swelling_stretch(kNv, kChi, -0.05), oracle::kLambda0AtMinus005, 1e-12);
  EXPECT_NEAR(solve_free_swelling_stretch(kNv, kChi, -0.05), 1.482, 1e-3);
}

TEST(FreeSwellingStretch, OtherOraclePoints) {
  EXPECT_NEAR(solve_free_swelling_stretch(kNv, kChi, -0.02), oracle::kLambda0AtMinus002, 1e-12);
  EXPECT_NEAR(solve_free_swelling_stretch(kNv, kChi, -1.0), oracle::kLambda0AtMinus1, 1e-12);
}

TEST(FreeSwellingStretch, MonotoneInChemicalPotential) {
  double prev = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double mu = -0.05 + 0.05 * k / 9.0;
    const double lambda = solve_free_swelling_stretch(kNv, kChi, mu);
    EXPECT_GT(lambda, prev);
    EXPECT_GT(lambda, 1.0);
    prev = lambda;
  }
}

TEST(FreeSwellingStretch, RejectsBadParameters) {
  EXPECT_THROW(solve_free_swelling_stretch(0.0, kChi, 0.0), DomainError);
  EXPECT_THROW(solve_free_swelling_stretch(-1e-3, kChi, 0.0), DomainError);
  EXPECT_THROW(solve_free_swelling_stretch(kNv, kChi, 0.1), DomainError);
  try {
    solve_free_swelling_stretch(kNv, kChi, 0.1);
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("mu0_bar"), std::string::npos);
  }
}

TEST(Energy, ReferenceValueMatchesScalarOracle) {
  const MaterialParams p = reference_at_zero();
  EXPECT_NEAR(energy(p, DeformationState{}), oracle::kEnergyAtReference, 1e-14);
}

TEST(Energy, RotationDoesNotChangeEnergy) {
  const MaterialParams p = reference_at_zero();
  verify::RandomStates rs(7);
  for (int k = 0; k < 20; ++k) {
    const Mat3 Q = rs.rotation();
    EXPECT_NEAR(energy(p, DeformationState::from_F(Q)), energy(p, DeformationState{}), 1e-15);
  }
}

TEST(Energy, DryNetworkLimit) {
  // The elastic and (J-1) ln(J/(J-1)) terms vanish as F -> I; the chi/J term
  // leaves the constant -chi, so the limit is zero only for chi = 0.
  for (double chi : {0.0, kChi}) {
    MaterialParams p;
    p.Nv = kNv;
    p.chi = chi;
    p.mu_bar = -0.3;
    for (double eps : {1e-4, 1e-6, 1e-8}) {
      const double J = 1.0 + eps;
      const double stretch = std::cbrt(J);
      const double W = dry_energy(p, 3.0 * stretch * stretch, J);
      EXPECT_LT(std::abs(W + chi), 20.0 * eps) << "chi=" << chi << " eps=" << eps;
    }
  }
}

TEST(Energy, InadmissibleStateThrows) {
  const MaterialParams p = reference_at_zero();
  const double l3 = std::pow(p.lambda0, 3);
  const Mat3 F = Mat3::Identity() * std::cbrt(0.99 / l3);
  EXPECT_THROW(energy(p, DeformationState::from_F(F)), DomainError);
  EXPECT_THROW(stress_and_tangent(p, DeformationState::from_F(F)), DomainError);
  EXPECT_THROW(energy(p, DeformationState::from_F(-Mat3::Identity())), DomainError);
}

TEST(Stress, VanishesAtFreeSwellingReference) {
  for (double mu0 : {-0.05, -0.02, 0.0}) {
    const MaterialParams p = MaterialParams::at_reference(kNv, kChi, mu0);
    const StressTangent st = stress_and_tangent(p, DeformationState{});
    EXPECT_LT(st.S.cwiseAbs().maxCoeff(), 1e-10) << "mu0=" << mu0;
  }
}

TEST(Stress, MatchesFiniteDifferencesOfEnergy) {
  verify::RandomStates rs(11);
  for (int k = 0; k < 20; ++k) {
    const MaterialParams p = rs.params();
    const Mat3 F = rs.deformation(p);
    const Mat3 C = F.transpose() * F;
    const StressTangent st = stress_and_tangent(p, DeformationState::from_C(C));
    EXPECT_LT(verify::relative_error(verify::fd_stress(p, C), st.S), 1e-6);
  }
}

TEST(Tangent, MatchesFiniteDifferencesOfStress) {
  verify::RandomStates rs(12);
  for (int k = 0; k < 20; ++k) {
    const MaterialParams p = rs.params();
    const Mat3 F = rs.deformation(p);
    const Mat3 C = F.transpose() * F;
    const StressTangent st = stress_and_tangent(p, DeformationState::from_C(C));
    EXPECT_LT(verify::relative_error(verify::fd_tangent(p, C), st.D), 1e-5);
    EXPECT_LT((st.D - st.D.transpose()).norm(), 1e-14 * st.D.norm());
  }
}

TEST(Tangent, InvariantCoefficientIdentities) {
  verify::RandomStates rs(13);
  for (int k = 0; k < 20; ++k) {
    const MaterialParams p = rs.params();
    const DeformationState s = DeformationState::from_F(rs.deformation(p));
    const InvariantDerivatives d = invariant_derivatives(p, s);
    EXPECT_DOUBLE_EQ(d.delta2, -4.0 * s.I3p * d.dW_dI3);
    EXPECT_NEAR(d.delta1 + d.delta2, 4.0 * s.I3p * s.I3p * d.d2W_dI3dI3, 1e-13 * std::abs(d.delta1));
  }
}

TEST(Tangent, JacobianDerivativesMatchFiniteDifferences) {
  // Along F' = diag(1, 1, t), J' = t and I1' = 2 + t^2; the I1 part of W' is linear.
  const MaterialParams p = MaterialParams::at_reference(kNv, kChi, -0.02).with_mu(-0.015);
  const auto at = [&](double t) { return DeformationState::from_F(Eigen::Vector3d(1, 1, t).asDiagonal()); };
  for (double t : {0.8, 1.0, 1.3}) {
    const double h = 1e-6;
    const auto d = invariant_derivatives(p, at(t));
    const auto w = [&](double s) { return energy(p, at(s)) - d.dW_dI1 * at(s).I1p; };
    EXPECT_NEAR((w(t + h) - w(t - h)) / (2 * h), d.dW_dJ, 1e-8 * std::abs(d.dW_dJ) + 1e-12);
    const double fd2 = (invariant_derivatives(p, at(t + h)).dW_dJ - invariant_derivatives(p, at(t - h)).dW_dJ) / (2 * h);
    EXPECT_NEAR(fd2, d.d2W_dJ2, 1e-7 * std::abs(d.d2W_dJ2));
  }
}

TEST(Stress, FrameIndifference) {
  verify::RandomStates rs(14);
  for (int k = 0; k < 20; ++k) {
    const MaterialParams p = rs.params();
    const Mat3 F = rs.deformation(p);
    const Mat3 Q = rs.rotation();
    const auto a = stress_and_tangent(p, DeformationState::from_F(F));
    const auto b = stress_and_tangent(p, DeformationState::from_F(Q * F));
    EXPECT_NEAR(a.W, b.W, 1e-14);
    EXPECT_LT((a.S - b.S).norm(), 1e-12 * a.S.norm());
    EXPECT_LT((a.D - b.D).norm(), 1e-11 * a.D.norm());
  }
}

TEST(Stress, IsotropyUnderPermutation) {
  verify::RandomStates rs(15);
  Mat3 Pi;
  Pi << 0, 1, 0, 0, 0, 1, 1, 0, 0;
  for (int k = 0; k < 20; ++k) {
    const MaterialParams p = rs.params();
    const Mat3 F = rs.deformation(p);
    const Mat3 C = F.transpose() * F;
    const Mat3 S = voigt::to_matrix(stress_and_tangent(p, DeformationState::from_C(C)).S);
    const Mat3 S_perm =
        voigt::to_matrix(stress_and_tangent(p, DeformationState::from_C(Pi.transpose() * C * Pi)).S);
    EXPECT_LT((S_perm - Pi.transpose() * S * Pi).norm(), 1e-12 * S.norm());
  }
}

TEST(NominalStress, ZeroAtReference) {
  const MaterialParams p = reference_at_zero();
  EXPECT_LT(nominal_stress(p, DeformationState{}).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(NominalStress, EqualsFTimesSecondPiola) {
  verify::RandomStates rs(16);
  for (int k = 0; k < 50; ++k) {
    const MaterialParams p = rs.params();
    const DeformationState s = DeformationState::from_F(rs.deformation(p));
    const Mat3 P = nominal_stress(p, s);
    const Mat3 FS = s.Fp * voigt::to_matrix(stress_and_tangent(p, s).S);
    EXPECT_LT((P - FS).norm(), 1e-10 * P.norm());
  }
}

TEST(NominalStress, UniaxialStateHasNoTransverseStress) {
  const MaterialParams p = reference_at_zero();
  const double l1 = 1.1 * oracle::kLambda0AtZero;
  const double l2 = oracle::kLambda2AtTenPercent;
  const Mat3 F = Eigen::Vector3d(l1 / p.lambda0, l2 / p.lambda0, l2 / p.lambda0).asDiagonal();
  const Mat3 P = nominal_stress(p, DeformationState::from_F(F));
  EXPECT_LT(std::abs(P(1, 1)), 1e-8);
  EXPECT_LT(std::abs(P(2, 2)), 1e-8);
  EXPECT_GT(P(0, 0), 1e-5);
}

}  // namespace
}  // namespace gelfem
