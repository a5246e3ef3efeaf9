#include "gelfem/results.hpp"
#include "gelfem/format.hpp"

#include <ostream>

namespace gelfem {

void write_vtk(std::ostream& os, const Model& model, const SolutionState& state, const std::string& title) {
  const std::size_t n_nodes = model.nodes.size();
  const std::size_t n_cells = model.elements.size();

  os << "# vtk DataFile Version 3.0\n" << title << "\nASCII\nDATASET UNSTRUCTURED_GRID\n";
  os << "POINTS " << n_nodes << " double\n";
  for (std::size_t n = 0; n < n_nodes; ++n) {
    const Vec3& X = model.nodes[n];
    os << fmt17(X(0) + state.u(3 * n)) << ' ' << fmt17(X(1) + state.u(3 * n + 1)) << ' '
       << fmt17(X(2) + state.u(3 * n + 2)) << '\n';
  }
  os << "CELLS " << n_cells << ' ' << 9 * n_cells << '\n';
  for (const auto& e : model.elements) {
    os << 8;
    for (int id : e.node_ids) os << ' ' << id;
    os << '\n';
  }
  os << "CELL_TYPES " << n_cells << '\n';
  for (std::size_t c = 0; c < n_cells; ++c) os << "12\n";

  os << "POINT_DATA " << n_nodes << "\nVECTORS displacement double\n";
  for (std::size_t n = 0; n < n_nodes; ++n)
    os << fmt17(state.u(3 * n)) << ' ' << fmt17(state.u(3 * n + 1)) << ' ' << fmt17(state.u(3 * n + 2))
       << '\n';

  os << "CELL_DATA " << n_cells << "\nFIELD cell_fields 2\n";
  os << "S_voigt 6 " << n_cells << " double\n";
  for (std::size_t c = 0; c < n_cells; ++c) {
    Vec6 avg = Vec6::Zero();
    const auto& pts = state.gp_fields[c];
    for (const auto& p : pts) avg += p.S;
    if (!pts.empty()) avg /= static_cast<double>(pts.size());
    for (int a = 0; a < 6; ++a) os << (a ? " " : "") << fmt17(avg(a));
    os << '\n';
  }
  os << "W 1 " << n_cells << " double\n";
  for (std::size_t c = 0; c < n_cells; ++c) {
    double avg = 0.0;
    const auto& pts = state.gp_fields[c];
    for (const auto& p : pts) avg += p.W;
    if (!pts.empty()) avg /= static_cast<double>(pts.size());
    os << fmt17(avg) << '\n';
  }
}

void write_convergence_csv(std::ostream& os, const std::vector<SolutionState>& states) {
  os << "step,mu_bar,load_factor,iteration,residual,increment\n";
  for (std::size_t s = 0; s < states.size(); ++s) {
    const auto& st = states[s];
    for (std::size_t k = 0; k < st.residual_history.size(); ++k) {
      os << s << ',' << fmt17(st.mu_bar) << ',' << fmt17(st.load_factor) << ',' << k << ','
         << fmt17(st.residual_history[k]) << ',';
      // increment k is the update applied after residual k
      if (k < st.increment_history.size()) os << fmt17(st.increment_history[k]);
      os << '\n';
    }
  }
}

void write_steps_csv(std::ostream& os, const Model& model, const std::vector<SolutionState>& states) {
  os << "step,mu_bar,load_factor,iterations,bisections,energy,max_abs_u\n";
  for (std::size_t s = 0; s < states.size(); ++s) {
    const auto& st = states[s];
    double energy = 0.0;
    for (std::size_t e = 0; e < st.gp_fields.size(); ++e) {
      const auto geom = element_geometry(model.element_coords(static_cast<int>(e)), model.elements[e].gauss_rule);
      for (std::size_t q = 0; q < geom.size() && q < st.gp_fields[e].size(); ++q)
        energy += geom[q].weight * geom[q].Jxi * st.gp_fields[e][q].W;
    }
    os << s << ',' << fmt17(st.mu_bar) << ',' << fmt17(st.load_factor) << ',' << st.iterations << ','
       << st.bisections << ',' << fmt17(energy) << ',' << fmt17(st.u.cwiseAbs().maxCoeff()) << '\n';
  }
}

}  // namespace gelfem
