#include "gelfem/element.hpp"
#include "gelfem/voigt.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

namespace gelfem {

std::vector<QuadraturePoint> gauss_rule(int n) {
  std::vector<double> pts;
  std::vector<double> wts;
  switch (n) {
    case 1:
      pts = {0.0};
      wts = {2.0};
      break;
    case 2: {
      const double a = 1.0 / std::sqrt(3.0);
      pts = {-a, a};
      wts = {1.0, 1.0};
      break;
    }
    case 3: {
      const double a = std::sqrt(0.6);
      pts = {-a, 0.0, a};
      wts = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
      break;
    }
    default:
      throw Error("gauss_rule: points per axis must be 1, 2 or 3");
  }
  std::vector<QuadraturePoint> rule;
  rule.reserve(n * n * n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        rule.push_back({Vec3(pts[i], pts[j], pts[k]), wts[i] * wts[j] * wts[k]});
  return rule;
}

Eigen::Matrix<double, 8, 1> shape_values(const Vec3& xi) {
  Eigen::Matrix<double, 8, 1> N;
  for (int a = 0; a < 8; ++a) {
    const auto& c = kHexCorners[a];
    N(a) = 0.125 * (1.0 + c[0] * xi(0)) * (1.0 + c[1] * xi(1)) * (1.0 + c[2] * xi(2));
  }
  return N;
}

GaussPointData shape_gradients(const NodeCoords& element_nodes, const Vec3& xi) {
  ShapeGrad dN_dxi;
  for (int a = 0; a < 8; ++a) {
    const auto& c = kHexCorners[a];
    const double sx = 1.0 + c[0] * xi(0);
    const double sy = 1.0 + c[1] * xi(1);
    const double sz = 1.0 + c[2] * xi(2);
    dN_dxi(a, 0) = 0.125 * c[0] * sy * sz;
    dN_dxi(a, 1) = 0.125 * sx * c[1] * sz;
    dN_dxi(a, 2) = 0.125 * sx * sy * c[2];
  }
  // dX/dxi (rows X components, columns parent directions)
  const Mat3 dX_dxi = element_nodes.transpose() * dN_dxi;

  GaussPointData gp;
  gp.xi = xi;
  gp.Jxi = dX_dxi.determinant();
  if (!(gp.Jxi > 0.0)) {
    std::ostringstream msg;
    msg << "inverted element: reference Jacobian " << gp.Jxi << " at parent point (" << xi(0) << ", "
        << xi(1) << ", " << xi(2) << ")";
    throw InvertedElementError(msg.str());
  }
  gp.dN_dX = dN_dxi * dX_dxi.inverse();
  return gp;
}

std::vector<GaussPointData> element_geometry(const NodeCoords& element_nodes, int rule) {
  std::vector<GaussPointData> out;
  int q = 0;
  for (const auto& qp : gauss_rule(rule)) {
    GaussPointData gp;
    try {
      gp = shape_gradients(element_nodes, qp.xi);
    } catch (const InvertedElementError& e) {
      std::ostringstream msg;
      msg << e.what() << " (gauss point " << q << ")";
      throw InvertedElementError(msg.str());
    }
    gp.weight = qp.weight;
    out.push_back(gp);
    ++q;
  }
  return out;
}

Mat3 deformation_gradient(const ShapeGrad& dN_dX, const NodalValues& nodal_u) {
  return Mat3::Identity() + nodal_u.transpose() * dN_dX;
}

BMatrix b_matrix(const ShapeGrad& dN_dX, const Mat3& F) {
  BMatrix B;
  for (int a = 0; a < 8; ++a) {
    const double n1 = dN_dX(a, 0);
    const double n2 = dN_dX(a, 1);
    const double n3 = dN_dX(a, 2);
    for (int i = 0; i < 3; ++i) {
      const int col = 3 * a + i;
      B(0, col) = n1 * F(i, 0);
      B(1, col) = n2 * F(i, 1);
      B(2, col) = n3 * F(i, 2);
      B(3, col) = n2 * F(i, 2) + n3 * F(i, 1);
      B(4, col) = n1 * F(i, 2) + n3 * F(i, 0);
      B(5, col) = n1 * F(i, 1) + n2 * F(i, 0);
    }
  }
  return B;
}

ElementResponse evaluate_element(const std::vector<GaussPointData>& geometry,
                                 const NodalValues& nodal_u, const MaterialParams& params,
                                 bool with_stiffness) {
  ElementResponse out;
  out.points.reserve(geometry.size());
  for (std::size_t q = 0; q < geometry.size(); ++q) {
    const GaussPointData& gp = geometry[q];
    const Mat3 F = deformation_gradient(gp.dN_dX, nodal_u);
    const DeformationState state = DeformationState::from_F(F);

    StressTangent st;
    try {
      st = stress_and_tangent(params, state);
    } catch (const DomainError& e) {
      std::ostringstream msg;
      msg << e.what() << " (gauss point " << q << ")";
      throw DomainError(msg.str());
    }

    const double dV = gp.weight * gp.Jxi;
    const BMatrix B = b_matrix(gp.dN_dX, F);
    out.f_int.noalias() += dV * (B.transpose() * st.S);
    out.energy += dV * st.W;

    if (with_stiffness) {
      out.K.noalias() += dV * (B.transpose() * st.D * B);
      const Mat3 S = voigt::to_matrix(st.S);
      const ShapeGrad SG = gp.dN_dX * S;
      for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
          const double g = dV * SG.row(a).dot(gp.dN_dX.row(b));
          for (int i = 0; i < 3; ++i) out.K_geo(3 * a + i, 3 * b + i) += g;
        }
      }
    }
    out.points.push_back({F, st.S, st.W});
  }
  if (with_stiffness) out.K += out.K_geo;
  return out;
}

Vec24 internal_force(const NodeCoords& element_nodes, const NodalValues& nodal_u,
                     const MaterialParams& params) {
  return evaluate_element(element_geometry(element_nodes), nodal_u, params, false).f_int;
}

Mat24 stiffness(const NodeCoords& element_nodes, const NodalValues& nodal_u,
                const MaterialParams& params) {
  return evaluate_element(element_geometry(element_nodes), nodal_u, params, true).K;
}

double element_energy(const NodeCoords& element_nodes, const NodalValues& nodal_u,
                      const MaterialParams& params) {
  return evaluate_element(element_geometry(element_nodes), nodal_u, params, false).energy;
}

NodalValues unflatten(const Vec24& u) {
  NodalValues out;
  for (int a = 0; a < 8; ++a)
    for (int i = 0; i < 3; ++i) out(a, i) = u(3 * a + i);
  return out;
}

Vec24 flatten(const NodalValues& u) {
  Vec24 out;
  for (int a = 0; a < 8; ++a)
    for (int i = 0; i < 3; ++i) out(3 * a + i) = u(a, i);
  return out;
}

}  // namespace gelfem
