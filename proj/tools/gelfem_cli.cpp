// gelfem command-line driver.
//
// Exit codes: 0 success, 1 verification failure or internal error, 2 parse or
// argument error, 3 convergence failure (including singular systems),
// 4 inadmissible state.

#include "gelfem/analytic.hpp"
#include "gelfem/benchmarks.hpp"
#include "gelfem/format.hpp"
#include "gelfem/mesh.hpp"
#include "gelfem/model_io.hpp"
#include "gelfem/results.hpp"
#include "gelfem/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace gelfem;

namespace {

enum ExitCode { kOk = 0, kFailed = 1, kParse = 2, kConvergence = 3, kInadmissible = 4 };

struct Outputs {
  fs::path dir = ".";
  std::string format = "all";
  [[nodiscard]] bool vtk() const { return format == "vtk" || format == "all"; }
  [[nodiscard]] bool csv() const { return format == "csv" || format == "all"; }
};

// "a:b:n" (n evenly spaced points) or a comma-separated list.
std::vector<double> parse_sweep(const std::string& text) {
  try {
    if (text.find(':') != std::string::npos) {
      std::stringstream ss(text);
      std::string a, b, n;
      std::getline(ss, a, ':');
      std::getline(ss, b, ':');
      std::getline(ss, n, ':');
      return analytic::linspace(std::stod(a), std::stod(b), std::stoi(n));
    }
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stod(item));
    if (out.empty()) throw ParseError("empty sweep");
    return out;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed sweep '" + text + "' (expected a:b:n or v1,v2,...)");
  }
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot write " + path.string());
  return os;
}

int run_free_swell_cmd(double Nv, double chi, const std::string& mu_text, int steps, int divisions, double L,
                       const Outputs& out) {
  const std::vector<double> sweep = parse_sweep(mu_text);
  for (double mu : sweep)
    if (!(mu <= 0.0)) throw ParseError("--mu: chemical potentials must be <= 0 (got " + fmt17(mu) + ")");

  const FreeSwellRun run = run_free_swell(Nv, chi, sweep, steps, divisions, L);
  fs::create_directories(out.dir);
  write_csv(std::cout, run);
  if (out.csv()) {
    auto table = open_out(out.dir / "free_swell.csv");
    write_csv(table, run);
    auto log = open_out(out.dir / "free_swell_convergence.csv");
    write_convergence_csv(log, run.states);
    auto curve = open_out(out.dir / "free_swell_curve.csv");
    const auto grid = analytic::linspace(sweep.front(), sweep.back(), 50);
    analytic::write_csv(curve, analytic::free_swelling_curve(Nv, chi, grid));
  }
  if (out.vtk()) {
    auto vtk = open_out(out.dir / "free_swell.vtk");
    write_vtk(vtk, run.model, run.states.back(), "gelfem free swelling");
  }
  return kOk;
}

int run_uniaxial_cmd(double Nv, double chi, double mu, const std::string& l1_text, const std::string& control,
                     int steps, double L, const Outputs& out) {
  if (!(mu <= 0.0)) throw ParseError("--mu must be <= 0");
  const double lambda0 = solve_free_swelling_stretch(Nv, chi, mu);
  const std::vector<double> grid =
      l1_text.empty() ? analytic::linspace(0.9 * lambda0, 1.2 * lambda0, 8) : parse_sweep(l1_text);
  const AxialControl mode = control == "force" ? AxialControl::force : AxialControl::displacement;

  const UniaxialRun run = run_uniaxial(Nv, chi, mu, grid, mode, steps, L);
  fs::create_directories(out.dir);
  write_csv(std::cout, run);
  if (out.csv()) {
    auto table = open_out(out.dir / "uniaxial.csv");
    write_csv(table, run);
    auto curve = open_out(out.dir / "uniaxial_curve.csv");
    const auto dense = analytic::linspace(grid.front(), grid.back(), 50);
    analytic::write_csv(curve, analytic::uniaxial_curve(Nv, chi, mu, dense));
  }
  if (out.vtk()) {
    auto vtk = open_out(out.dir / "uniaxial.vtk");
    write_vtk(vtk, run.models.back(), run.finals.back(), "gelfem uniaxial bar");
  }
  return kOk;
}

int run_model_cmd(const fs::path& file, const Outputs& out) {
  const Model model = load_model_file(file);
  const auto states = run_continuation(model);
  fs::create_directories(out.dir);
  const std::string stem = file.stem().string();
  if (out.vtk()) {
    auto vtk = open_out(out.dir / (stem + ".vtk"));
    write_vtk(vtk, model, states.back(), "gelfem " + stem);
  }
  if (out.csv()) {
    auto log = open_out(out.dir / (stem + "_convergence.csv"));
    write_convergence_csv(log, states);
    auto steps = open_out(out.dir / (stem + "_steps.csv"));
    write_steps_csv(steps, model, states);
  }
  std::cout << "converged " << states.size() << " step(s); final mu_bar=" << fmt17(states.back().mu_bar)
            << " load factor=" << fmt17(states.back().load_factor) << '\n';
  return kOk;
}

int run_mesh_cmd(int nx, int ny, int nz, double L, double Nv, double chi, double mu0, double mu_target,
                 int steps, const std::string& out_file) {
  const Mesh mesh = generate_cube_mesh(nx, ny, nz, L);
  Model model;
  model.nodes = mesh.nodes;
  model.elements = mesh.elements;
  model.dirichlet = symmetry_constraints(mesh.nodes);
  model.params = MaterialParams::at_reference(Nv, chi, mu0);
  model.schedule = ContinuationSchedule::linear(mu0, mu_target, steps);
  const std::string text = write_model(model);
  if (out_file.empty() || out_file == "-") {
    std::cout << text;
  } else {
    auto os = open_out(out_file);
    os << text;
  }
  return kOk;
}

int run_verify_cmd(int samples) {
  const auto seed = verify::seed_from_env();
  std::cout << "seed " << seed << ", " << samples << " samples per check\n";
  bool ok = true;
  for (const auto& c : verify::run_all(seed, samples)) {
    std::cout << (c.passed() ? "PASS " : "FAIL ") << c.name << ": worst " << c.worst << " (tol " << c.tolerance
              << ", n=" << c.samples << ")\n";
    ok = ok && c.passed();
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gelfem: total Lagrangian finite elements for Flory-Rehner gels"};
  app.require_subcommand(1);

  double Nv = 1e-3;
  double chi = 0.1;
  int steps = 1;
  Outputs out;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--Nv", Nv, "Dimensionless crosslink density")->capture_default_str();
    sub->add_option("--chi", chi, "Mixing enthalpy parameter")->capture_default_str();
    sub->add_option("--out-dir", out.dir, "Output directory")->capture_default_str();
    sub->add_option("--format", out.format, "Outputs to write")
        ->check(CLI::IsMember({"vtk", "csv", "all"}))
        ->capture_default_str();
  };

  auto* free_swell = app.add_subcommand("free-swell", "Single-block free swelling sweep vs closed form");
  add_common(free_swell);
  std::string mu_sweep = "-0.05:0:10";
  int divisions = 1;
  double L = 2.0;
  free_swell->add_option("--mu", mu_sweep, "Sweep a:b:n or comma list; first value is the reference")
      ->capture_default_str();
  free_swell->add_option("--steps", steps, "Continuation steps between sweep points")->capture_default_str();
  free_swell->add_option("--divisions", divisions, "Elements per cube edge")->capture_default_str();
  free_swell->add_option("--L", L, "Free-swelling edge length")->capture_default_str();

  auto* uniaxial = app.add_subcommand("uniaxial", "Uniaxial bar vs closed form");
  add_common(uniaxial);
  double mu = 0.0;
  std::string lambda1 = "";
  std::string control = "displacement";
  int bar_steps = 4;
  uniaxial->add_option("--mu", mu, "Chemical potential mu/kT")->capture_default_str();
  uniaxial->add_option("--lambda1", lambda1, "Axial stretches from dry, a:b:n or list (default 8 in [0.9,1.2]*lambda0)");
  uniaxial->add_option("--control", control, "Axial loading")
      ->check(CLI::IsMember({"displacement", "force"}))
      ->capture_default_str();
  uniaxial->add_option("--steps", bar_steps, "Load steps per point")->capture_default_str();
  uniaxial->add_option("--L", L, "Free-swelling edge length")->capture_default_str();

  auto* run = app.add_subcommand("run", "Solve a model file");
  std::string model_file;
  run->add_option("model", model_file, "Model file (JSON)")->required();
  run->add_option("--out-dir", out.dir, "Output directory")->capture_default_str();
  run->add_option("--format", out.format, "Outputs to write")
      ->check(CLI::IsMember({"vtk", "csv", "all"}))
      ->capture_default_str();

  auto* mesh = app.add_subcommand("mesh", "Emit a free-swelling cube model file");
  int nx = 1, ny = 1, nz = 1;
  double mu0 = -0.05, mu_target = 0.0;
  int mesh_steps = 10;
  std::string mesh_out;
  mesh->add_option("--nx", nx)->capture_default_str();
  mesh->add_option("--ny", ny)->capture_default_str();
  mesh->add_option("--nz", nz)->capture_default_str();
  mesh->add_option("--L", L, "Edge length")->capture_default_str();
  mesh->add_option("--Nv", Nv)->capture_default_str();
  mesh->add_option("--chi", chi)->capture_default_str();
  mesh->add_option("--mu", mu0, "Reference chemical potential")->capture_default_str();
  mesh->add_option("--mu-target", mu_target, "Final chemical potential")->capture_default_str();
  mesh->add_option("--steps", mesh_steps)->capture_default_str();
  mesh->add_option("-o,--out", mesh_out, "Output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Residual and finite-difference oracle suite (seed: GELFEM_SEED)");
  int samples = 100;
  verify_cmd->add_option("--samples", samples, "Random states per check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*free_swell) return run_free_swell_cmd(Nv, chi, mu_sweep, steps, divisions, L, out);
    if (*uniaxial) return run_uniaxial_cmd(Nv, chi, mu, lambda1, control, bar_steps, L, out);
    if (*run) return run_model_cmd(model_file, out);
    if (*mesh) return run_mesh_cmd(nx, ny, nz, L, Nv, chi, mu0, mu_target, mesh_steps, mesh_out);
    if (*verify_cmd) return run_verify_cmd(samples);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const SingularSystemError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConvergence;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConvergence;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInadmissible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kFailed;
}
