// Python bindings: closed-form states, the material point, meshes and the
// solver drivers. Library errors map onto Python exceptions as
// DomainError/ParseError -> ValueError and ConvergenceError -> RuntimeError.

#include "gelfem/analytic.hpp"
#include "gelfem/benchmarks.hpp"
#include "gelfem/material.hpp"
#include "gelfem/mesh.hpp"
#include "gelfem/model_io.hpp"
#include "gelfem/solver.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace gelfem;

namespace {

py::dict state_to_dict(const SolutionState& s) {
  py::dict d;
  d["u"] = s.u;
  d["mu_bar"] = s.mu_bar;
  d["load_factor"] = s.load_factor;
  d["residual_history"] = s.residual_history;
  d["iterations"] = s.iterations;
  d["bisections"] = s.bisections;
  d["reactions"] = s.reactions;
  return d;
}

}  // namespace

PYBIND11_MODULE(_gelfem, m) {
  m.doc() = "Total Lagrangian finite elements for Flory-Rehner gels";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<MaterialParams>(m, "MaterialParams")
      .def_static("at_reference", &MaterialParams::at_reference, py::arg("Nv"), py::arg("chi"), py::arg("mu0_bar"))
      .def("with_mu", &MaterialParams::with_mu, py::arg("mu_bar"))
      .def_readonly("Nv", &MaterialParams::Nv)
      .def_readonly("chi", &MaterialParams::chi)
      .def_readonly("mu_bar", &MaterialParams::mu_bar)
      .def_readonly("mu0_bar", &MaterialParams::mu0_bar)
      .def_readonly("lambda0", &MaterialParams::lambda0)
      .def("__repr__", [](const MaterialParams& p) {
        return "MaterialParams(Nv=" + std::to_string(p.Nv) + ", chi=" + std::to_string(p.chi) +
               ", mu_bar=" + std::to_string(p.mu_bar) + ", lambda0=" + std::to_string(p.lambda0) + ")";
      });

  m.def("solve_free_swelling_stretch", &solve_free_swelling_stretch, py::arg("Nv"), py::arg("chi"),
        py::arg("mu0_bar"), "Free-swelling stretch lambda0 from the dry state.");

  m.def(
      "energy", [](const MaterialParams& p, const Mat3& Fp) { return energy(p, DeformationState::from_F(Fp)); },
      py::arg("params"), py::arg("Fp"), "Energy per unit free-swelling volume at F' (kT/v).");

  m.def(
      "stress_and_tangent",
      [](const MaterialParams& p, const Mat3& Fp) {
        const StressTangent st = stress_and_tangent(p, DeformationState::from_F(Fp));
        return py::make_tuple(st.S, st.D, st.W);
      },
      py::arg("params"), py::arg("Fp"),
      "(S, D, W): second Piola-Kirchhoff stress and tangent in Voigt order 11,22,33,23,13,12.");

  m.def(
      "nominal_stress", [](const MaterialParams& p, const Mat3& Fp) { return nominal_stress(p, DeformationState::from_F(Fp)); },
      py::arg("params"), py::arg("Fp"));

  m.def(
      "free_swelling_curve",
      [](double Nv, double chi, const std::vector<double>& mu) {
        return analytic::free_swelling_curve(Nv, chi, mu).lambda;
      },
      py::arg("Nv"), py::arg("chi"), py::arg("mu_grid"));

  m.def("uniaxial_transverse_stretch", &analytic::uniaxial_transverse_stretch, py::arg("Nv"), py::arg("chi"),
        py::arg("mu_bar"), py::arg("lambda1"));
  m.def("uniaxial_nominal_stress", &analytic::uniaxial_nominal_stress, py::arg("Nv"), py::arg("chi"),
        py::arg("mu_bar"), py::arg("lambda1"), py::arg("lambda2"));

  m.def(
      "generate_cube_mesh",
      [](int nx, int ny, int nz, double L) {
        const Mesh mesh = generate_cube_mesh(nx, ny, nz, L);
        Eigen::MatrixX3d nodes(mesh.nodes.size(), 3);
        for (std::size_t n = 0; n < mesh.nodes.size(); ++n) nodes.row(n) = mesh.nodes[n].transpose();
        Eigen::Matrix<int, Eigen::Dynamic, 8, Eigen::RowMajor> cells(mesh.elements.size(), 8);
        for (std::size_t e = 0; e < mesh.elements.size(); ++e)
          for (int a = 0; a < 8; ++a) cells(e, a) = mesh.elements[e].node_ids[a];
        return py::make_tuple(nodes, cells);
      },
      py::arg("nx"), py::arg("ny"), py::arg("nz"), py::arg("L"), "(nodes, hexahedra) of the cube [0, L]^3.");

  m.def(
      "run_free_swell",
      [](double Nv, double chi, const std::vector<double>& mu, int substeps, int divisions, double L) {
        const FreeSwellRun run = run_free_swell(Nv, chi, mu, substeps, divisions, L);
        py::list rows;
        for (const auto& r : run.rows) {
          py::dict d;
          d["mu_bar"] = r.mu_bar;
          d["lambda_fe"] = r.lambda_fe;
          d["lambda_analytic"] = r.lambda_analytic;
          d["rel_error"] = r.rel_error;
          d["iterations"] = r.iterations;
          rows.append(d);
        }
        return rows;
      },
      py::arg("Nv"), py::arg("chi"), py::arg("mu_sweep"), py::arg("substeps") = 1, py::arg("divisions") = 1,
      py::arg("L") = 2.0, "Free-swelling sweep; one dict per sweep point.");

  m.def(
      "run_uniaxial",
      [](double Nv, double chi, double mu, const std::vector<double>& lambda1, const std::string& control,
         int substeps, double L) {
        if (control != "displacement" && control != "force")
          throw ParseError("control must be 'displacement' or 'force'");
        const UniaxialRun run = run_uniaxial(Nv, chi, mu, lambda1,
                                             control == "force" ? AxialControl::force : AxialControl::displacement,
                                             substeps, L);
        py::list rows;
        for (const auto& r : run.rows) {
          py::dict d;
          d["lambda1_fe"] = r.lambda1_fe;
          d["lambda2_fe"] = r.lambda2_fe;
          d["lambda2_analytic"] = r.lambda2_analytic;
          d["rel_error"] = r.rel_error;
          d["stress_fe"] = r.stress_fe;
          d["stress_analytic"] = r.stress_analytic;
          d["transverse_stress_fe"] = r.transverse_stress_fe;
          rows.append(d);
        }
        return rows;
      },
      py::arg("Nv"), py::arg("chi"), py::arg("mu_bar"), py::arg("lambda1"), py::arg("control") = "displacement",
      py::arg("substeps") = 4, py::arg("L") = 2.0, "Uniaxial bar; one dict per axial stretch.");

  m.def(
      "run_model",
      [](const std::filesystem::path& path) {
        const Model model = load_model_file(path);
        py::list out;
        for (const auto& s : run_continuation(model)) out.append(state_to_dict(s));
        return out;
      },
      py::arg("path"), "Solve a JSON model file; one dict per converged schedule point.");
}
