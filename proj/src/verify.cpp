#include "gelfem/verify.hpp"
#include "gelfem/analytic.hpp"
#include "gelfem/voigt.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace gelfem::verify {

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("GELFEM_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
    }
  }
  return kDefaultSeed;
}

MaterialParams RandomStates::params() {
  MaterialParams p = MaterialParams::at_reference(1e-3, 0.1, uniform(-0.05, 0.0));
  p.mu_bar = p.mu0_bar + uniform(-0.01, 0.01);
  return p;
}

Mat3 RandomStates::rotation() {
  Eigen::Quaterniond q(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
  q.normalize();
  return q.toRotationMatrix();
}

Mat3 RandomStates::deformation(const MaterialParams& params, double min_total_J) {
  const double l3 = params.lambda0 * params.lambda0 * params.lambda0;
  for (;;) {
    Mat3 A;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) A(i, j) = uniform(-0.2, 0.2);
    const Mat3 U = Mat3::Identity() + 0.5 * (A + A.transpose());
    const Mat3 F = rotation() * U;
    const double J = F.determinant();
    if (J > 0.0 && l3 * J > min_total_J) return F;
  }
}

NodeCoords RandomStates::distorted_hex(double L) {
  NodeCoords X;
  for (int a = 0; a < 8; ++a)
    for (int i = 0; i < 3; ++i)
      X(a, i) = 0.5 * L * (1.0 + kHexCorners[a][i]) + uniform(-0.1, 0.1) * L;
  return X;
}

NodalValues RandomStates::admissible_displacement(const NodeCoords& X, const MaterialParams& params,
                                                  double scale) {
  const auto geometry = element_geometry(X);
  for (;;) {
    NodalValues u;
    for (int a = 0; a < 8; ++a)
      for (int i = 0; i < 3; ++i) u(a, i) = uniform(-scale, scale);
    bool ok = true;
    for (const auto& gp : geometry) {
      const double J = deformation_gradient(gp.dN_dX, u).determinant();
      const double l3 = params.lambda0 * params.lambda0 * params.lambda0;
      ok = ok && J > 0.0 && l3 * J > 1.05;
    }
    if (ok) return u;
  }
}

namespace {

Mat3 symmetric_unit(int a) {
  const auto [i, j] = voigt::kIndex[a];
  Mat3 E = Mat3::Zero();
  E(i, j) = 1.0;
  E(j, i) = 1.0;
  return E;
}

double energy_of_C(const MaterialParams& p, const Mat3& C) {
  return energy(p, DeformationState::from_C(C));
}

}  // namespace

Vec6 fd_stress(const MaterialParams& params, const Mat3& Cp, double h) {
  Vec6 S;
  for (int a = 0; a < 6; ++a) {
    const Mat3 E = symmetric_unit(a);
    const double dW = (energy_of_C(params, Cp + h * E) - energy_of_C(params, Cp - h * E)) / (2.0 * h);
    // Diagonal: dW = S_ii/2 per unit; off-diagonal pair: dW = S_ij per unit.
    S(a) = (a < 3) ? 2.0 * dW : dW;
  }
  return S;
}

Mat6 fd_tangent(const MaterialParams& params, const Mat3& Cp, double h) {
  Mat6 D;
  for (int b = 0; b < 6; ++b) {
    const Mat3 E = symmetric_unit(b);
    const Vec6 Sp = stress_and_tangent(params, DeformationState::from_C(Cp + h * E)).S;
    const Vec6 Sm = stress_and_tangent(params, DeformationState::from_C(Cp - h * E)).S;
    const Vec6 dS = (Sp - Sm) / (2.0 * h);
    D.col(b) = (b < 3) ? Vec6(2.0 * dS) : dS;
  }
  return D;
}

Mat24 fd_stiffness(const NodeCoords& X, const NodalValues& u, const MaterialParams& params, double h) {
  Mat24 K;
  const Vec24 u0 = flatten(u);
  for (int c = 0; c < 24; ++c) {
    Vec24 up = u0;
    Vec24 um = u0;
    up(c) += h;
    um(c) -= h;
    K.col(c) = (internal_force(X, unflatten(up), params) - internal_force(X, unflatten(um), params)) / (2.0 * h);
  }
  return K;
}

Vec24 fd_internal_force(const NodeCoords& X, const NodalValues& u, const MaterialParams& params, double h) {
  Vec24 f;
  const Vec24 u0 = flatten(u);
  for (int c = 0; c < 24; ++c) {
    Vec24 up = u0;
    Vec24 um = u0;
    up(c) += h;
    um(c) -= h;
    f(c) = (element_energy(X, unflatten(up), params) - element_energy(X, unflatten(um), params)) / (2.0 * h);
  }
  return f;
}

std::vector<CheckResult> run_all(std::uint64_t seed, int samples) {
  RandomStates rs(seed);
  std::vector<CheckResult> out;

  CheckResult swell{"free-swelling residual at computed stretch", 0.0, 1e-12, 0};
  CheckResult uni{"uniaxial transverse residual at computed stretch", 0.0, 1e-12, 0};
  for (int k = 0; k < samples; ++k) {
    const double mu = rs.uniform(-0.5, 0.0);
    const double lambda0 = solve_free_swelling_stretch(1e-3, 0.1, mu);
    swell.worst = std::max(swell.worst, std::abs(free_swelling_residual(1e-3, 0.1, mu, lambda0)));
    ++swell.samples;
    const double l1 = lambda0 * rs.uniform(0.9, 1.2);
    const double l2 = analytic::uniaxial_transverse_stretch(1e-3, 0.1, mu, l1);
    uni.worst = std::max(uni.worst, std::abs(analytic::uniaxial_residual(1e-3, 0.1, mu, l1, l2)));
    ++uni.samples;
  }
  out.push_back(swell);
  out.push_back(uni);

  CheckResult stress{"S vs finite differences of W", 0.0, 1e-6, 0};
  CheckResult tangent{"D vs finite differences of S", 0.0, 1e-5, 0};
  for (int k = 0; k < samples; ++k) {
    const MaterialParams p = rs.params();
    const Mat3 C = [&] {
      const Mat3 F = rs.deformation(p);
      return Mat3(F.transpose() * F);
    }();
    const StressTangent st = stress_and_tangent(p, DeformationState::from_C(C));
    stress.worst = std::max(stress.worst, relative_error(fd_stress(p, C), st.S));
    tangent.worst = std::max(tangent.worst, relative_error(fd_tangent(p, C), st.D));
    ++stress.samples;
    ++tangent.samples;
  }
  out.push_back(stress);
  out.push_back(tangent);

  CheckResult stiff{"element K vs finite differences of f_int", 0.0, 1e-5, 0};
  for (int k = 0; k < samples; ++k) {
    const MaterialParams p = rs.params();
    const NodeCoords X = rs.distorted_hex();
    const NodalValues u = rs.admissible_displacement(X, p, 0.3);
    stiff.worst = std::max(stiff.worst, relative_error(fd_stiffness(X, u, p), stiffness(X, u, p)));
    ++stiff.samples;
  }
  out.push_back(stiff);
  return out;
}

}  // namespace gelfem::verify
