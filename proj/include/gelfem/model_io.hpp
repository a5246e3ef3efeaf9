#pragma once

/**
 * \file model_io.hpp
 * \brief JSON model files.
 *
 * \code{.json}
 * {
 *   "material": {"Nv": 1e-3, "chi": 0.1, "mu0_bar": -0.05, "mu_target": 0.0},
 *   "mesh":     {"generator": "cube(1,1,1,2.0)"},
 *   "bcs":      [{"select": "X==0", "dof": "x", "value": 0.0}],
 *   "loads":    [{"face": "X==2", "dof": "x", "total_force": 1e-3}],
 *   "schedule": {"n_steps": 10}
 * }
 * \endcode
 *
 * The mesh is either a generator string or inline "nodes" ([[x,y,z],...]) and
 * "elements" ([[8 node ids],...]) with an optional "gauss_rule". A bc entry
 * targets nodes through "select" (plane selector), "node" or "nodes". A load
 * entry is one of {"node", "dof", "force"}, {"select"|"nodes", "dof",
 * "total_force"} (split evenly) or {"face", "dof", "total_force"} (consistent
 * lumping of a uniform traction). An optional "solver" object overrides the
 * solver settings. Unknown keys are rejected.
 */

#include "gelfem/solver.hpp"

#include <filesystem>
#include <string>

namespace gelfem {

/// Throws ParseError on malformed input, unknown keys or an invalid model.
Model parse_model(const std::string& text);

Model load_model_file(const std::filesystem::path& path);

/// Emits inline mesh and one explicit entry per constraint and nodal load, so
/// that parse_model(write_model(m)) reproduces m exactly.
std::string write_model(const Model& model);

}  // namespace gelfem
