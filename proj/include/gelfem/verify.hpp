#pragma once

// Finite-difference and residual checks over seeded random admissible states.
// The difference quotients call only energy() and internal_force(), so they
// stay independent of the closed-form stress, tangent and stiffness they
// check.

#include "gelfem/element.hpp"
#include "gelfem/material.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gelfem::verify {

inline constexpr std::uint64_t kDefaultSeed = 20101;

/// GELFEM_SEED if set and numeric, otherwise kDefaultSeed.
std::uint64_t seed_from_env();

class RandomStates {
 public:
  explicit RandomStates(std::uint64_t seed) : rng_(seed) {}

  /// Nv = 1e-3, chi = 0.1, reference mu0 in [-0.05, 0], current mu within 0.01 of it.
  MaterialParams params();
  /// Rotation times a stretch with principal values in about [0.7, 1.4];
  /// resampled until lambda0^3 J' > min_total_J.
  Mat3 deformation(const MaterialParams& params, double min_total_J = 1.05);
  Mat3 rotation();
  /// Cube [0, L]^3 with corners moved by up to 10% of L.
  NodeCoords distorted_hex(double L = 2.0);
  /// Nodal displacements up to `scale` per component that keep every Gauss
  /// point admissible.
  NodalValues admissible_displacement(const NodeCoords& X, const MaterialParams& params, double scale);

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }

 private:
  std::mt19937_64 rng_;
};

/// S from central differences of the energy in the six independent C'
/// components.
Vec6 fd_stress(const MaterialParams& params, const Mat3& Cp, double h = 1e-6);
/// D = 2 dS/dC' from central differences of stress_and_tangent().S.
Mat6 fd_tangent(const MaterialParams& params, const Mat3& Cp, double h = 1e-6);
/// dF_int/du by central differences of internal_force().
Mat24 fd_stiffness(const NodeCoords& X, const NodalValues& u, const MaterialParams& params, double h = 1e-6);
/// dE/du by central differences of element_energy().
Vec24 fd_internal_force(const NodeCoords& X, const NodalValues& u, const MaterialParams& params,
                        double h = 1e-6);

/// Norm-wise relative difference |a - b| / |b|.
template <typename A, typename B>
double relative_error(const A& a, const B& b) {
  return (a - b).norm() / b.norm();
}

struct CheckResult {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  int samples = 0;
  [[nodiscard]] bool passed() const { return worst <= tolerance; }
};

/// Swelling and uniaxial residuals plus stress, tangent and stiffness FD
/// checks at `samples` random states each.
std::vector<CheckResult> run_all(std::uint64_t seed, int samples = 100);

}  // namespace gelfem::verify
