#include "gelfem/solver.hpp"

#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

namespace gelfem {

ContinuationSchedule ContinuationSchedule::linear(double mu0, double mu_target, int n_steps) {
  if (n_steps < 1) throw Error("schedule: n_steps must be >= 1");
  ContinuationSchedule s;
  s.mu_path.reserve(n_steps + 1);
  s.load_factor_path.reserve(n_steps + 1);
  for (int k = 0; k <= n_steps; ++k) {
    const double t = static_cast<double>(k) / n_steps;
    s.mu_path.push_back(k == n_steps ? mu_target : mu0 + t * (mu_target - mu0));
    s.load_factor_path.push_back(t);
  }
  return s;
}

void ContinuationSchedule::validate(double mu0) const {
  if (mu_path.empty() || mu_path.size() != load_factor_path.size())
    throw Error("schedule: mu and load-factor paths must be non-empty and of equal length");
  if (mu_path.front() != mu0 || load_factor_path.front() != 0.0)
    throw Error("schedule: first entry must be the stress-free start (mu0_bar, 0)");
  for (double f : load_factor_path)
    if (!(f >= 0.0 && f <= 1.0)) throw Error("schedule: load factors must lie in [0, 1]");
}

NodeCoords Model::element_coords(int e) const {
  NodeCoords X;
  const auto& ids = elements[e].node_ids;
  for (int a = 0; a < 8; ++a) X.row(a) = nodes[ids[a]].transpose();
  return X;
}

void Model::validate() const {
  const int n = static_cast<int>(nodes.size());
  if (n == 0 || elements.empty()) throw Error("model: mesh is empty");
  for (std::size_t e = 0; e < elements.size(); ++e)
    for (int id : elements[e].node_ids)
      if (id < 0 || id >= n) {
        std::ostringstream msg;
        msg << "model: element " << e << " references node " << id << " out of range";
        throw Error(msg.str());
      }
  std::set<int> seen;
  for (const auto& bc : dirichlet) {
    if (bc.node < 0 || bc.node >= n) throw Error("model: constraint on a node out of range");
    if (!seen.insert(dof_index(bc.node, bc.dof)).second) {
      std::ostringstream msg;
      msg << "model: node " << bc.node << " dof " << static_cast<int>(bc.dof) << " constrained twice";
      throw Error(msg.str());
    }
  }
  for (const auto& l : loads)
    if (l.node < 0 || l.node >= n) throw Error("model: load on a node out of range");
  schedule.validate(params.mu0_bar);
}

Assembly assemble(const Model& model, const MaterialParams& params, const Eigen::VectorXd& u,
                  bool with_stiffness) {
  const int n = model.n_dofs();
  Assembly out;
  out.f_int = Eigen::VectorXd::Zero(n);
  out.gp_fields.resize(model.elements.size());

  std::vector<Eigen::Triplet<double>> triplets;
  if (with_stiffness) triplets.reserve(model.elements.size() * 24 * 24);

  std::ostringstream failures;
  int n_failed = 0;
  for (std::size_t e = 0; e < model.elements.size(); ++e) {
    const auto& elem = model.elements[e];
    NodalValues ue;
    for (int a = 0; a < 8; ++a)
      for (int i = 0; i < 3; ++i) ue(a, i) = u(3 * elem.node_ids[a] + i);

    ElementResponse r;
    try {
      r = evaluate_element(element_geometry(model.element_coords(static_cast<int>(e)), elem.gauss_rule),
                           ue, params, with_stiffness);
    } catch (const DomainError& err) {
      failures << (n_failed ? "; " : "") << "element " << e << ": " << err.what();
      ++n_failed;
      continue;
    }

    for (int a = 0; a < 8; ++a)
      for (int i = 0; i < 3; ++i) out.f_int(3 * elem.node_ids[a] + i) += r.f_int(3 * a + i);
    if (with_stiffness) {
      for (int a = 0; a < 24; ++a) {
        const int ga = 3 * elem.node_ids[a / 3] + a % 3;
        for (int b = 0; b < 24; ++b) {
          const int gb = 3 * elem.node_ids[b / 3] + b % 3;
          triplets.emplace_back(ga, gb, r.K(a, b));
        }
      }
    }
    out.energy += r.energy;
    auto& fields = out.gp_fields[e];
    fields.reserve(r.points.size());
    for (const auto& p : r.points) fields.push_back({p.Fp, p.S, p.W});
  }
  if (n_failed) {
    std::ostringstream msg;
    msg << n_failed << " inadmissible element(s): " << failures.str();
    throw DomainError(msg.str());
  }
  if (with_stiffness) {
    out.K.resize(n, n);
    out.K.setFromTriplets(triplets.begin(), triplets.end());
  }
  return out;
}

Eigen::VectorXd external_force(const Model& model) {
  Eigen::VectorXd f = Eigen::VectorXd::Zero(model.n_dofs());
  for (const auto& l : model.loads) f(dof_index(l.node, l.dof)) += l.force;
  return f;
}

namespace {

struct DofPartition {
  std::vector<int> free;
  std::vector<int> to_free;  // global dof -> free index or -1
};

DofPartition partition(const Model& model) {
  DofPartition p;
  p.to_free.assign(model.n_dofs(), 0);
  for (const auto& bc : model.dirichlet) p.to_free[dof_index(bc.node, bc.dof)] = -1;
  for (int g = 0; g < model.n_dofs(); ++g) {
    if (p.to_free[g] == -1) continue;
    p.to_free[g] = static_cast<int>(p.free.size());
    p.free.push_back(g);
  }
  return p;
}

Eigen::VectorXd restrict_free(const Eigen::VectorXd& v, const DofPartition& p) {
  Eigen::VectorXd out(p.free.size());
  for (std::size_t k = 0; k < p.free.size(); ++k) out(k) = v(p.free[k]);
  return out;
}

Eigen::SparseMatrix<double> reduce(const Eigen::SparseMatrix<double>& K, const DofPartition& p) {
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(K.nonZeros());
  for (int col = 0; col < K.outerSize(); ++col) {
    const int fc = p.to_free[col];
    if (fc < 0) continue;
    for (Eigen::SparseMatrix<double>::InnerIterator it(K, col); it; ++it) {
      const int fr = p.to_free[it.row()];
      if (fr >= 0) t.emplace_back(fr, fc, it.value());
    }
  }
  const auto n = static_cast<Eigen::Index>(p.free.size());
  Eigen::SparseMatrix<double> Kff(n, n);
  Kff.setFromTriplets(t.begin(), t.end());
  return Kff;
}

Eigen::VectorXd solve_reduced(const Eigen::SparseMatrix<double>& Kff, const Eigen::VectorXd& rhs) {
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
  ldlt.compute(Kff);
  if (ldlt.info() != Eigen::Success)
    throw SingularSystemError("singular system: factorization failed (missing constraints?)");
  const Eigen::VectorXd d = ldlt.vectorD();
  const double dmax = d.cwiseAbs().maxCoeff();
  const double dmin = d.cwiseAbs().minCoeff();
  if (!(dmax > 0.0) || dmin < 1e-12 * dmax) {
    std::ostringstream msg;
    msg << "singular system: pivot ratio " << (dmax > 0.0 ? dmin / dmax : 0.0)
        << " (rank deficient, typically missing rigid-body constraints)";
    throw SingularSystemError(msg.str());
  }
  Eigen::VectorXd x = ldlt.solve(rhs);
  if (ldlt.info() != Eigen::Success || !x.allFinite())
    throw SingularSystemError("singular system: back substitution failed");
  return x;
}

}  // namespace

SolutionState solve_step(const Model& model, const Eigen::VectorXd& u_prev, double mu_bar,
                         double load_factor) {
  const SolverSettings& cfg = model.settings;
  const MaterialParams params = model.params.with_mu(mu_bar);
  const DofPartition part = partition(model);
  const Eigen::VectorXd f_ext = load_factor * external_force(model);
  const double tol = cfg.rtol * std::max(1.0, f_ext.norm());

  SolutionState state;
  state.mu_bar = mu_bar;
  state.load_factor = load_factor;
  state.u = u_prev;
  for (const auto& bc : model.dirichlet) state.u(dof_index(bc.node, bc.dof)) = load_factor * bc.value;

  Assembly asm_state = assemble(model, params, state.u);
  Eigen::VectorXd r_free = restrict_free(asm_state.f_int - f_ext, part);
  double r_norm = r_free.norm();
  double du_norm = std::numeric_limits<double>::infinity();

  for (int it = 0;; ++it) {
    state.residual_history.push_back(r_norm);
    if (r_norm < tol && du_norm < cfg.atol_u) break;
    if (it == cfg.max_iterations) {
      std::ostringstream msg;
      msg << "newton did not converge in " << cfg.max_iterations << " iterations at mu_bar=" << mu_bar
          << ", load factor=" << load_factor << "; last residual " << r_norm;
      throw ConvergenceError(msg.str());
    }

    const Eigen::VectorXd du_free = solve_reduced(reduce(asm_state.K, part), -r_free);

    double alpha = 1.0;
    for (int h = 0;; ++h) {
      Eigen::VectorXd trial = state.u;
      for (std::size_t k = 0; k < part.free.size(); ++k) trial(part.free[k]) += alpha * du_free(k);
      bool accepted = false;
      try {
        Assembly trial_asm = assemble(model, params, trial);
        Eigen::VectorXd trial_r = restrict_free(trial_asm.f_int - f_ext, part);
        const double trial_norm = trial_r.norm();
        if (trial_norm <= tol || trial_norm <= cfg.residual_growth_limit * r_norm) {
          state.u = std::move(trial);
          asm_state = std::move(trial_asm);
          r_free = std::move(trial_r);
          r_norm = trial_norm;
          accepted = true;
        }
      } catch (const DomainError&) {
      }
      if (accepted) break;
      if (h == cfg.max_halvings) {
        std::ostringstream msg;
        msg << "newton update rejected after " << cfg.max_halvings << " halvings at mu_bar=" << mu_bar
            << ", load factor=" << load_factor << "; residual " << r_norm;
        throw ConvergenceError(msg.str());
      }
      alpha *= 0.5;
    }
    du_norm = alpha * du_free.norm();
    state.increment_history.push_back(du_norm);
    ++state.iterations;
  }

  state.gp_fields = std::move(asm_state.gp_fields);
  state.reactions.reserve(model.dirichlet.size());
  for (const auto& bc : model.dirichlet) {
    const int g = dof_index(bc.node, bc.dof);
    state.reactions.push_back(asm_state.f_int(g) - f_ext(g));
  }
  return state;
}

namespace {

struct PathPoint {
  double mu;
  double factor;
};

SolutionState advance(const Model& model, const Eigen::VectorXd& u_from, PathPoint from, PathPoint to,
                      int depth, int& bisections) {
  try {
    return solve_step(model, u_from, to.mu, to.factor);
  } catch (const SingularSystemError&) {
    throw;
  } catch (const Error& err) {
    if (depth >= model.settings.max_bisection_depth) {
      std::ostringstream msg;
      msg << "continuation failed: bisection depth " << depth << " exhausted; last good (mu_bar="
          << from.mu << ", load factor=" << from.factor << "), target (mu_bar=" << to.mu
          << ", load factor=" << to.factor << "): " << err.what();
      throw ConvergenceError(msg.str());
    }
  }
  ++bisections;
  const PathPoint mid{0.5 * (from.mu + to.mu), 0.5 * (from.factor + to.factor)};
  const SolutionState half = advance(model, u_from, from, mid, depth + 1, bisections);
  return advance(model, half.u, mid, to, depth + 1, bisections);
}

}  // namespace

std::vector<SolutionState> run_continuation(const Model& model) {
  model.validate();
  for (std::size_t e = 0; e < model.elements.size(); ++e) {
    try {
      element_geometry(model.element_coords(static_cast<int>(e)), model.elements[e].gauss_rule);
    } catch (const InvertedElementError& err) {
      std::ostringstream msg;
      msg << "element " << e << ": " << err.what();
      throw InvertedElementError(msg.str());
    }
  }

  const auto& sched = model.schedule;
  std::vector<SolutionState> states;
  states.reserve(sched.mu_path.size());
  Eigen::VectorXd u = Eigen::VectorXd::Zero(model.n_dofs());
  PathPoint prev{sched.mu_path.front(), sched.load_factor_path.front()};
  for (std::size_t k = 0; k < sched.mu_path.size(); ++k) {
    const PathPoint target{sched.mu_path[k], sched.load_factor_path[k]};
    int bisections = 0;
    SolutionState s = advance(model, u, prev, target, 0, bisections);
    s.bisections = bisections;
    u = s.u;
    prev = target;
    states.push_back(std::move(s));
  }
  return states;
}

}  // namespace gelfem
