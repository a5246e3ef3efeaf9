#pragma once

#include "gelfem/element.hpp"
#include "gelfem/solver.hpp"

#include <string>
#include <vector>

namespace gelfem {

struct Mesh {
  std::vector<Vec3> nodes;
  std::vector<Hex8Element> elements;
};

/// Structured cube [0,L]^3 with nx*ny*nz hexahedra. Node (i,j,k) has id
/// i + (nx+1)*(j + (ny+1)*k).
Mesh generate_cube_mesh(int nx, int ny, int nz, double L);

/// Axis-aligned plane predicate "X==v", "Y==v" or "Z==v" with an optional
/// " within tol" suffix (default 1e-9), or "all".
struct NodeSelector {
  int axis = -1;  ///< -1 selects every node
  double value = 0.0;
  double tol = 1e-9;

  static NodeSelector parse(const std::string& text);
  [[nodiscard]] bool matches(const Vec3& X) const;
};

std::vector<int> select_nodes(const std::vector<Vec3>& nodes, const NodeSelector& selector);

/// Consistent nodal forces for a uniform traction on every element face whose
/// four corners match the selector; the traction is total_force / face area.
/// One load per node, ordered by node id.
std::vector<NodalLoad> lump_face_load(const std::vector<Vec3>& nodes,
                                      const std::vector<Hex8Element>& elements,
                                      const NodeSelector& face, Dof dof, double total_force);

/// Rollers on the three minimum-coordinate planes: removes rigid modes and
/// leaves the body free to swell.
std::vector<DirichletBC> symmetry_constraints(const std::vector<Vec3>& nodes);

/// Volume of the reference mesh by quadrature.
double mesh_volume(const std::vector<Vec3>& nodes, const std::vector<Hex8Element>& elements);

}  // namespace gelfem
