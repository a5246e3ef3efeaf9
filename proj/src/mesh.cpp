#include "gelfem/mesh.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <regex>

namespace gelfem {

Mesh generate_cube_mesh(int nx, int ny, int nz, double L) {
  if (nx < 1 || ny < 1 || nz < 1) throw Error("cube mesh: divisions must be >= 1");
  if (!(L > 0.0)) throw Error("cube mesh: edge length must be positive");
  Mesh m;
  m.nodes.reserve((nx + 1) * (ny + 1) * (nz + 1));
  for (int k = 0; k <= nz; ++k)
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i <= nx; ++i)
        m.nodes.emplace_back(L * i / nx, L * j / ny, L * k / nz);

  auto id = [&](int i, int j, int k) { return i + (nx + 1) * (j + (ny + 1) * k); };
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        Hex8Element e;
        e.node_ids = {id(i, j, k),         id(i + 1, j, k),         id(i + 1, j + 1, k),
                      id(i, j + 1, k),     id(i, j, k + 1),         id(i + 1, j, k + 1),
                      id(i + 1, j + 1, k + 1), id(i, j + 1, k + 1)};
        m.elements.push_back(e);
      }
  return m;
}

NodeSelector NodeSelector::parse(const std::string& text) {
  static const std::regex pattern(
      R"(^\s*([XYZxyz])\s*==\s*([-+0-9.eE]+)\s*(?:within\s+([-+0-9.eE]+))?\s*$)");
  NodeSelector s;
  if (text == "all") return s;
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw ParseError("bad node selector '" + text + "'");
  s.axis = std::toupper(m[1].str()[0]) - 'X';
  try {
    s.value = std::stod(m[2].str());
    if (m[3].matched) s.tol = std::stod(m[3].str());
  } catch (const std::exception&) {
    throw ParseError("bad number in node selector '" + text + "'");
  }
  return s;
}

bool NodeSelector::matches(const Vec3& X) const {
  return axis < 0 || std::abs(X(axis) - value) <= tol;
}

std::vector<int> select_nodes(const std::vector<Vec3>& nodes, const NodeSelector& selector) {
  std::vector<int> out;
  for (std::size_t n = 0; n < nodes.size(); ++n)
    if (selector.matches(nodes[n])) out.push_back(static_cast<int>(n));
  return out;
}

std::vector<NodalLoad> lump_face_load(const std::vector<Vec3>& nodes,
                                      const std::vector<Hex8Element>& elements,
                                      const NodeSelector& face, Dof dof, double total_force) {
  static constexpr std::array<std::array<int, 4>, 6> kFaces{
      {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}}};
  static constexpr std::array<std::array<double, 2>, 4> kQuad{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
  const double g = 1.0 / std::sqrt(3.0);

  std::map<int, double> share;  // node -> integral of N over matched faces
  double area = 0.0;
  for (const auto& e : elements) {
    for (const auto& f : kFaces) {
      std::array<int, 4> ids{};
      bool on_face = true;
      for (int c = 0; c < 4; ++c) {
        ids[c] = e.node_ids[f[c]];
        on_face = on_face && face.matches(nodes[ids[c]]);
      }
      if (!on_face) continue;
      for (double s : {-g, g})
        for (double t : {-g, g}) {
          Vec3 dXs = Vec3::Zero();
          Vec3 dXt = Vec3::Zero();
          std::array<double, 4> N{};
          for (int c = 0; c < 4; ++c) {
            const double a = kQuad[c][0];
            const double b = kQuad[c][1];
            N[c] = 0.25 * (1 + a * s) * (1 + b * t);
            dXs += 0.25 * a * (1 + b * t) * nodes[ids[c]];
            dXt += 0.25 * b * (1 + a * s) * nodes[ids[c]];
          }
          const double dA = dXs.cross(dXt).norm();
          area += dA;
          for (int c = 0; c < 4; ++c) share[ids[c]] += N[c] * dA;
        }
    }
  }
  if (!(area > 0.0)) throw ParseError("face load: no element face matches the selector");
  std::vector<NodalLoad> loads;
  for (const auto& [node, w] : share) loads.push_back({node, dof, total_force * w / area});
  return loads;
}

std::vector<DirichletBC> symmetry_constraints(const std::vector<Vec3>& nodes) {
  Vec3 lo = nodes.front();
  for (const auto& X : nodes) lo = lo.cwiseMin(X);
  std::vector<DirichletBC> bcs;
  for (std::size_t n = 0; n < nodes.size(); ++n)
    for (int axis = 0; axis < 3; ++axis)
      if (std::abs(nodes[n](axis) - lo(axis)) <= 1e-9)
        bcs.push_back({static_cast<int>(n), static_cast<Dof>(axis), 0.0});
  return bcs;
}

double mesh_volume(const std::vector<Vec3>& nodes, const std::vector<Hex8Element>& elements) {
  double v = 0.0;
  for (const auto& e : elements) {
    NodeCoords X;
    for (int a = 0; a < 8; ++a) X.row(a) = nodes[e.node_ids[a]].transpose();
    for (const auto& gp : element_geometry(X, e.gauss_rule)) v += gp.weight * gp.Jxi;
  }
  return v;
}

}  // namespace gelfem
