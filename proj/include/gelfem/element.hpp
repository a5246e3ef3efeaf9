#pragma once

/**
 * \file element.hpp
 * \brief Trilinear hexahedron in the total Lagrangian frame.
 *
 * Corner ordering follows the VTK hexahedron: the bottom face (zeta = -1)
 * counter-clockwise, then the top face in the same order. Reference
 * coordinates are those of the free-swelling configuration.
 */

#include "gelfem/material.hpp"
#include "gelfem/types.hpp"

#include <array>
#include <vector>

namespace gelfem {

using NodeCoords = Eigen::Matrix<double, 8, 3>;
using NodalValues = Eigen::Matrix<double, 8, 3>;
using ShapeGrad = Eigen::Matrix<double, 8, 3>;
using Vec24 = Eigen::Matrix<double, 24, 1>;
using Mat24 = Eigen::Matrix<double, 24, 24>;
using BMatrix = Eigen::Matrix<double, 6, 24>;

/// Parent coordinates of the eight corners.
inline constexpr std::array<std::array<double, 3>, 8> kHexCorners{{{-1, -1, -1},
                                                                  {1, -1, -1},
                                                                  {1, 1, -1},
                                                                  {-1, 1, -1},
                                                                  {-1, -1, 1},
                                                                  {1, -1, 1},
                                                                  {1, 1, 1},
                                                                  {-1, 1, 1}}};

struct Hex8Element {
  std::array<int, 8> node_ids{};
  int gauss_rule = 2;  ///< points per axis, 1..3

  friend bool operator==(const Hex8Element&, const Hex8Element&) = default;
};

struct QuadraturePoint {
  Vec3 xi;
  double weight;
};

/// Tensor-product Gauss-Legendre rule on [-1,1]^3; weights sum to 8.
std::vector<QuadraturePoint> gauss_rule(int points_per_axis);

Eigen::Matrix<double, 8, 1> shape_values(const Vec3& xi);

struct GaussPointData {
  Vec3 xi;
  double weight = 0.0;
  ShapeGrad dN_dX = ShapeGrad::Zero();
  double Jxi = 0.0;
};

/// Gradients of the shape functions with respect to reference coordinates and
/// the reference-to-parent Jacobian determinant. Throws InvertedElementError
/// when Jxi <= 0.
GaussPointData shape_gradients(const NodeCoords& element_nodes, const Vec3& xi);

/// Quadrature data for every point of the element's rule.
std::vector<GaussPointData> element_geometry(const NodeCoords& element_nodes, int gauss_rule = 2);

/// F' = I + sum_I u_I (x) dN_I/dX.
Mat3 deformation_gradient(const ShapeGrad& dN_dX, const NodalValues& nodal_u);

/// Green-strain variation: dE (Voigt, engineering shears) = B * du.
BMatrix b_matrix(const ShapeGrad& dN_dX, const Mat3& F);

struct GaussPointResult {
  Mat3 Fp = Mat3::Identity();
  Vec6 S = Vec6::Zero();
  double W = 0.0;
};

struct ElementResponse {
  Vec24 f_int = Vec24::Zero();
  Mat24 K = Mat24::Zero();  ///< material + geometric
  Mat24 K_geo = Mat24::Zero();
  double energy = 0.0;  ///< stored energy over the element (kT/v * volume)
  std::vector<GaussPointResult> points;
};

/// Evaluates all quadrature points. Material domain errors are rethrown with
/// the Gauss-point index in the message.
ElementResponse evaluate_element(const std::vector<GaussPointData>& geometry,
                                 const NodalValues& nodal_u, const MaterialParams& params,
                                 bool with_stiffness = true);

Vec24 internal_force(const NodeCoords& element_nodes, const NodalValues& nodal_u,
                     const MaterialParams& params);

Mat24 stiffness(const NodeCoords& element_nodes, const NodalValues& nodal_u,
                const MaterialParams& params);

double element_energy(const NodeCoords& element_nodes, const NodalValues& nodal_u,
                      const MaterialParams& params);

/// Nodal displacements in row-per-node layout from a 24-vector (x,y,z per node).
NodalValues unflatten(const Vec24& u);
Vec24 flatten(const NodalValues& u);

}  // namespace gelfem
