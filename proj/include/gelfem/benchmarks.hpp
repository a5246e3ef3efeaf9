#pragma once

// Single-block gel benchmarks with closed-form answers: free swelling under
// a chemical-potential sweep, and the bar under uniaxial load. Both run on a
// cube of free-swelling edge L with rollers on the three minimum planes.

#include "gelfem/solver.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace gelfem {

struct FreeSwellRow {
  double mu_bar = 0.0;
  double lambda_fe = 0.0;  ///< from the far-corner displacement
  double lambda_analytic = 0.0;
  double rel_error = 0.0;
  int iterations = 0;
};

struct FreeSwellRun {
  Model model;
  std::vector<SolutionState> states;  ///< every schedule point
  std::vector<FreeSwellRow> rows;     ///< sweep points only
};

/// Reference state is the free swelling at mu_sweep.front(); `substeps`
/// continuation steps are taken between consecutive sweep points.
Model free_swelling_model(double Nv, double chi, std::span<const double> mu_sweep, int substeps = 1,
                          int divisions = 1, double L = 2.0);

FreeSwellRun run_free_swell(double Nv, double chi, std::span<const double> mu_sweep, int substeps = 1,
                            int divisions = 1, double L = 2.0);

enum class AxialControl { displacement, force };

struct UniaxialRow {
  double lambda1_target = 0.0;
  double lambda1_fe = 0.0;
  double lambda2_fe = 0.0;
  double lambda2_analytic = 0.0;  ///< transverse root at lambda1_fe
  double rel_error = 0.0;
  double stress_fe = 0.0;  ///< axial nominal stress, per dry area
  double stress_analytic = 0.0;
  double transverse_stress_fe = 0.0;  ///< max |P22|, |P33| over Gauss points
  int iterations = 0;
};

struct UniaxialRun {
  double lambda0 = 0.0;
  std::vector<Model> models;
  std::vector<SolutionState> finals;
  std::vector<UniaxialRow> rows;
};

/// Bar swollen freely at mu_bar, then stretched along X to lambda1 (measured
/// from the dry state) by a prescribed face displacement or by the face force
/// that the closed-form solution predicts for lambda1.
Model uniaxial_bar_model(double Nv, double chi, double mu_bar, double lambda1, AxialControl control,
                         int substeps = 4, double L = 2.0);

UniaxialRun run_uniaxial(double Nv, double chi, double mu_bar, std::span<const double> lambda1_grid,
                         AxialControl control, int substeps = 4, double L = 2.0);

/// Header "mu_bar,lambda_fe,lambda_analytic,rel_error,iterations".
void write_csv(std::ostream& os, const FreeSwellRun& run);
/// Header "lambda1_target,lambda1_fe,lambda2_fe,lambda2_analytic,rel_error,
/// stress_fe,stress_analytic,transverse_stress_fe,iterations".
void write_csv(std::ostream& os, const UniaxialRun& run);

}  // namespace gelfem
