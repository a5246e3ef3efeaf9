#pragma once

/**
 * \file solver.hpp
 * \brief Global assembly and Newton-Raphson equilibrium with continuation in
 *        the chemical potential and load factor.
 *
 * Dirichlet constraints are eliminated from the linear system; constrained
 * dofs are set to their prescribed values before each step and never moved
 * by a Newton update. Reactions are recovered as f_int - f_ext at those dofs.
 */

#include "gelfem/element.hpp"
#include "gelfem/material.hpp"

#include <Eigen/SparseCore>

#include <string>
#include <vector>

namespace gelfem {

enum class Dof : int { x = 0, y = 1, z = 2 };

struct DirichletBC {
  int node = 0;
  Dof dof = Dof::x;
  double value = 0.0;  ///< at load factor 1

  friend bool operator==(const DirichletBC&, const DirichletBC&) = default;
};

struct NodalLoad {
  int node = 0;
  Dof dof = Dof::x;
  double force = 0.0;  ///< at load factor 1, kT/v * length^2

  friend bool operator==(const NodalLoad&, const NodalLoad&) = default;
};

struct ContinuationSchedule {
  std::vector<double> mu_path;
  std::vector<double> load_factor_path;

  /// n_steps + 1 points from (mu0, 0) to (mu_target, 1), both linear in the step.
  static ContinuationSchedule linear(double mu0, double mu_target, int n_steps);

  [[nodiscard]] int n_steps() const { return static_cast<int>(mu_path.size()) - 1; }
  void validate(double mu0) const;

  friend bool operator==(const ContinuationSchedule&, const ContinuationSchedule&) = default;
};

struct SolverSettings {
  double rtol = 1e-10;   ///< force residual, relative to max(1, |f_ext|)
  double atol_u = 1e-12; ///< increment norm
  int max_iterations = 30;
  int max_halvings = 8;
  double residual_growth_limit = 10.0;
  int max_bisection_depth = 12;

  friend bool operator==(const SolverSettings&, const SolverSettings&) = default;
};

struct Model {
  std::vector<Vec3> nodes;  ///< free-swelling reference coordinates
  std::vector<Hex8Element> elements;
  std::vector<DirichletBC> dirichlet;
  std::vector<NodalLoad> loads;
  MaterialParams params;
  ContinuationSchedule schedule;
  SolverSettings settings;

  [[nodiscard]] int n_dofs() const { return 3 * static_cast<int>(nodes.size()); }
  [[nodiscard]] NodeCoords element_coords(int e) const;

  /// Index ranges, duplicate constraints and schedule shape. Throws Error.
  void validate() const;
};

inline int dof_index(int node, Dof dof) { return 3 * node + static_cast<int>(dof); }

struct GaussPointField {
  Mat3 Fp = Mat3::Identity();
  Vec6 S = Vec6::Zero();
  double W = 0.0;
};

struct SolutionState {
  Eigen::VectorXd u;
  double mu_bar = 0.0;
  double load_factor = 0.0;
  std::vector<double> residual_history;  ///< free-dof residual norm before each update
  std::vector<double> increment_history;
  std::vector<std::vector<GaussPointField>> gp_fields;  ///< [element][gauss point]
  std::vector<double> reactions;  ///< one per entry of Model::dirichlet, same order
  int iterations = 0;
  int bisections = 0;  ///< substeps inserted by run_continuation to reach this point
};

struct Assembly {
  Eigen::SparseMatrix<double> K;
  Eigen::VectorXd f_int;
  double energy = 0.0;
  std::vector<std::vector<GaussPointField>> gp_fields;
};

/// Scatter-adds element internal forces and tangents. Material failures are
/// collected over all elements and rethrown as one DomainError naming them.
Assembly assemble(const Model& model, const MaterialParams& params, const Eigen::VectorXd& u,
                  bool with_stiffness = true);

/// External load vector at load factor 1.
Eigen::VectorXd external_force(const Model& model);

/// Newton-Raphson to equilibrium at (mu_bar, load_factor) starting from u_prev.
SolutionState solve_step(const Model& model, const Eigen::VectorXd& u_prev, double mu_bar,
                         double load_factor);

/// One converged state per schedule point, each warm-started from the
/// previous. A failed step is bisected recursively up to
/// settings.max_bisection_depth.
std::vector<SolutionState> run_continuation(const Model& model);

}  // namespace gelfem
