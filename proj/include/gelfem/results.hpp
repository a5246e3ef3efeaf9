#pragma once

#include "gelfem/solver.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gelfem {

/// Legacy ASCII unstructured grid: deformed points, hexahedral cells,
/// point-data displacement and cell-data element-averaged S (Voigt) and W.
void write_vtk(std::ostream& os, const Model& model, const SolutionState& state,
               const std::string& title = "gelfem result");

/// One row per Newton iteration:
/// step,mu_bar,load_factor,iteration,residual,increment
void write_convergence_csv(std::ostream& os, const std::vector<SolutionState>& states);

/// One row per converged step:
/// step,mu_bar,load_factor,iterations,bisections,energy,max_abs_u
void write_steps_csv(std::ostream& os, const Model& model, const std::vector<SolutionState>& states);

}  // namespace gelfem
