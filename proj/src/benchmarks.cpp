#include "gelfem/benchmarks.hpp"
#include "gelfem/analytic.hpp"
#include "gelfem/format.hpp"
#include "gelfem/mesh.hpp"
#include "gelfem/voigt.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace gelfem {

namespace {

int far_corner(const Model& model) {
  int best = 0;
  for (std::size_t n = 1; n < model.nodes.size(); ++n)
    if (model.nodes[n].sum() > model.nodes[best].sum()) best = static_cast<int>(n);
  return best;
}

}  // namespace

Model free_swelling_model(double Nv, double chi, std::span<const double> mu_sweep, int substeps,
                          int divisions, double L) {
  if (mu_sweep.empty()) throw Error("free swell: empty chemical-potential sweep");
  if (substeps < 1) throw Error("free swell: substeps must be >= 1");
  for (double mu : mu_sweep)
    if (!(mu <= 0.0)) throw DomainError("free swell: chemical potentials must be <= 0");

  const Mesh mesh = generate_cube_mesh(divisions, divisions, divisions, L);
  Model model;
  model.nodes = mesh.nodes;
  model.elements = mesh.elements;
  model.dirichlet = symmetry_constraints(mesh.nodes);
  model.params = MaterialParams::at_reference(Nv, chi, mu_sweep.front());

  auto& s = model.schedule;
  s.mu_path.push_back(mu_sweep.front());
  for (std::size_t k = 1; k < mu_sweep.size(); ++k)
    for (int j = 1; j <= substeps; ++j)
      s.mu_path.push_back(j == substeps ? mu_sweep[k]
                                        : mu_sweep[k - 1] + (mu_sweep[k] - mu_sweep[k - 1]) * j / substeps);
  s.load_factor_path.assign(s.mu_path.size(), 0.0);
  return model;
}

FreeSwellRun run_free_swell(double Nv, double chi, std::span<const double> mu_sweep, int substeps,
                            int divisions, double L) {
  FreeSwellRun run;
  run.model = free_swelling_model(Nv, chi, mu_sweep, substeps, divisions, L);
  run.states = run_continuation(run.model);

  const int corner = far_corner(run.model);
  const double lambda0 = run.model.params.lambda0;
  for (std::size_t k = 0; k < mu_sweep.size(); ++k) {
    const SolutionState& st = run.states[k * substeps];
    FreeSwellRow row;
    row.mu_bar = mu_sweep[k];
    row.lambda_fe = analytic::stretch_from_displacement(st.u(dof_index(corner, Dof::x)), L, lambda0);
    row.lambda_analytic = solve_free_swelling_stretch(Nv, chi, mu_sweep[k]);
    row.rel_error = std::abs(row.lambda_fe - row.lambda_analytic) / row.lambda_analytic;
    row.iterations = st.iterations;
    run.rows.push_back(row);
  }
  return run;
}

Model uniaxial_bar_model(double Nv, double chi, double mu_bar, double lambda1, AxialControl control,
                         int substeps, double L) {
  const Mesh mesh = generate_cube_mesh(1, 1, 1, L);
  Model model;
  model.nodes = mesh.nodes;
  model.elements = mesh.elements;
  model.dirichlet = symmetry_constraints(mesh.nodes);
  model.params = MaterialParams::at_reference(Nv, chi, mu_bar);
  model.schedule = ContinuationSchedule::linear(mu_bar, mu_bar, substeps);

  const double lambda0 = model.params.lambda0;
  NodeSelector end_face;
  end_face.axis = 0;
  end_face.value = L;
  if (control == AxialControl::displacement) {
    for (int n : select_nodes(model.nodes, end_face))
      model.dirichlet.push_back({n, Dof::x, (lambda1 / lambda0 - 1.0) * L});
  } else {
    const double l2 = analytic::uniaxial_transverse_stretch(Nv, chi, mu_bar, lambda1);
    const double dry_side = L / lambda0;
    const double force = analytic::uniaxial_nominal_stress(Nv, chi, mu_bar, lambda1, l2) * dry_side * dry_side;
    model.loads = lump_face_load(model.nodes, model.elements, end_face, Dof::x, force);
  }
  return model;
}

UniaxialRun run_uniaxial(double Nv, double chi, double mu_bar, std::span<const double> lambda1_grid,
                         AxialControl control, int substeps, double L) {
  UniaxialRun run;
  run.lambda0 = solve_free_swelling_stretch(Nv, chi, mu_bar);
  for (double lambda1 : lambda1_grid) {
    Model model = uniaxial_bar_model(Nv, chi, mu_bar, lambda1, control, substeps, L);
    const auto states = run_continuation(model);
    const SolutionState& st = states.back();
    const int corner = far_corner(model);
    const double lambda0 = model.params.lambda0;

    UniaxialRow row;
    row.lambda1_target = lambda1;
    row.lambda1_fe = analytic::stretch_from_displacement(st.u(dof_index(corner, Dof::x)), L, lambda0);
    row.lambda2_fe = analytic::stretch_from_displacement(st.u(dof_index(corner, Dof::y)), L, lambda0);
    row.lambda2_analytic = analytic::uniaxial_transverse_stretch(Nv, chi, mu_bar, row.lambda1_fe);
    row.rel_error = std::abs(row.lambda2_fe - row.lambda2_analytic) / row.lambda2_analytic;
    row.stress_analytic =
        analytic::uniaxial_nominal_stress(Nv, chi, mu_bar, row.lambda1_fe, row.lambda2_analytic);

    // Dry-frame nominal stress P = lambda0^2 F' S'.
    double axial = 0.0;
    int count = 0;
    for (const auto& element : st.gp_fields)
      for (const auto& p : element) {
        const Mat3 P = lambda0 * lambda0 * p.Fp * voigt::to_matrix(p.S);
        axial += P(0, 0);
        row.transverse_stress_fe =
            std::max({row.transverse_stress_fe, std::abs(P(1, 1)), std::abs(P(2, 2))});
        ++count;
      }
    row.stress_fe = axial / count;
    row.iterations = st.iterations;

    run.rows.push_back(row);
    run.models.push_back(std::move(model));
    run.finals.push_back(st);
  }
  return run;
}

void write_csv(std::ostream& os, const FreeSwellRun& run) {
  os << "mu_bar,lambda_fe,lambda_analytic,rel_error,iterations\n";
  for (const auto& r : run.rows)
    os << fmt17(r.mu_bar) << ',' << fmt17(r.lambda_fe) << ',' << fmt17(r.lambda_analytic) << ','
       << fmt17(r.rel_error) << ',' << r.iterations << '\n';
}

void write_csv(std::ostream& os, const UniaxialRun& run) {
  os << "lambda1_target,lambda1_fe,lambda2_fe,lambda2_analytic,rel_error,stress_fe,stress_analytic,"
        "transverse_stress_fe,iterations\n";
  for (const auto& r : run.rows)
    os << fmt17(r.lambda1_target) << ',' << fmt17(r.lambda1_fe) << ',' << fmt17(r.lambda2_fe) << ','
       << fmt17(r.lambda2_analytic) << ',' << fmt17(r.rel_error) << ',' << fmt17(r.stress_fe) << ','
       << fmt17(r.stress_analytic) << ',' << fmt17(r.transverse_stress_fe) << ',' << r.iterations << '\n';
}

}  // namespace gelfem
