#include "gelfem/model_io.hpp"
#include "gelfem/mesh.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <regex>
#include <set>
#include <sstream>

namespace gelfem {

using nlohmann::json;

namespace {

void require_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& item : obj.items())
    if (!ok.count(item.key())) throw ParseError(where + ": unknown key '" + item.key() + "'");
}

template <typename T>
T get(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + ": missing '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(where + ": bad value for '" + key + "'");
  }
}

Dof parse_dof(const json& obj, const std::string& where) {
  const auto s = get<std::string>(obj, "dof", where);
  if (s == "x") return Dof::x;
  if (s == "y") return Dof::y;
  if (s == "z") return Dof::z;
  throw ParseError(where + ": dof must be x, y or z");
}

const char* dof_name(Dof d) {
  switch (d) {
    case Dof::x: return "x";
    case Dof::y: return "y";
    case Dof::z: return "z";
  }
  return "?";
}

Mesh parse_mesh(const json& j) {
  const std::string where = "mesh";
  if (j.contains("generator")) {
    require_keys(j, {"generator", "gauss_rule"}, where);
    static const std::regex cube(R"(^\s*cube\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*([-+0-9.eE]+)\s*\)\s*$)");
    const auto generator = get<std::string>(j, "generator", where);
    std::smatch m;
    if (!std::regex_match(generator, m, cube)) throw ParseError(where + ": unknown generator '" + generator + "'");
    Mesh mesh;
    try {
      mesh = generate_cube_mesh(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stod(m[4]));
    } catch (const Error& e) {
      throw ParseError(where + ": " + e.what());
    } catch (const std::exception&) {
      throw ParseError(where + ": bad generator arguments '" + generator + "'");
    }
    if (j.contains("gauss_rule"))
      for (auto& e : mesh.elements) e.gauss_rule = get<int>(j, "gauss_rule", where);
    return mesh;
  }
  require_keys(j, {"nodes", "elements", "gauss_rule"}, where);
  Mesh mesh;
  for (const auto& n : get<std::vector<std::array<double, 3>>>(j, "nodes", where))
    mesh.nodes.emplace_back(n[0], n[1], n[2]);
  const int rule = j.contains("gauss_rule") ? get<int>(j, "gauss_rule", where) : 2;
  for (const auto& ids : get<std::vector<std::array<int, 8>>>(j, "elements", where)) {
    Hex8Element e;
    e.node_ids = ids;
    e.gauss_rule = rule;
    mesh.elements.push_back(e);
  }
  return mesh;
}

std::vector<int> target_nodes(const json& entry, const Mesh& mesh, const std::string& where) {
  if (entry.contains("select")) return select_nodes(mesh.nodes, NodeSelector::parse(get<std::string>(entry, "select", where)));
  if (entry.contains("nodes")) return get<std::vector<int>>(entry, "nodes", where);
  if (entry.contains("node")) return {get<int>(entry, "node", where)};
  throw ParseError(where + ": needs one of 'select', 'nodes' or 'node'");
}

}  // namespace

Model parse_model(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("model file is not valid JSON: ") + e.what());
  }
  require_keys(root, {"material", "mesh", "bcs", "loads", "schedule", "solver"}, "model");
  for (const char* key : {"material", "mesh", "schedule"})
    if (!root.contains(key)) throw ParseError(std::string("model: missing section '") + key + "'");

  Model model;
  const json& mat = root["material"];
  require_keys(mat, {"Nv", "chi", "mu0_bar", "mu_target"}, "material");
  const auto Nv = get<double>(mat, "Nv", "material");
  const auto chi = get<double>(mat, "chi", "material");
  const auto mu0 = get<double>(mat, "mu0_bar", "material");
  const double mu_target = mat.contains("mu_target") ? get<double>(mat, "mu_target", "material") : mu0;
  try {
    model.params = MaterialParams::at_reference(Nv, chi, mu0);
  } catch (const DomainError& e) {
    throw ParseError(std::string("material: ") + e.what());
  }

  const Mesh mesh = parse_mesh(root["mesh"]);
  model.nodes = mesh.nodes;
  model.elements = mesh.elements;

  if (root.contains("bcs")) {
    if (!root["bcs"].is_array()) throw ParseError("bcs: expected an array");
    for (const auto& entry : root["bcs"]) {
      require_keys(entry, {"select", "nodes", "node", "dof", "value"}, "bcs");
      const Dof dof = parse_dof(entry, "bcs");
      const auto value = get<double>(entry, "value", "bcs");
      for (int n : target_nodes(entry, mesh, "bcs")) model.dirichlet.push_back({n, dof, value});
    }
  }

  if (root.contains("loads")) {
    if (!root["loads"].is_array()) throw ParseError("loads: expected an array");
    for (const auto& entry : root["loads"]) {
      require_keys(entry, {"select", "nodes", "node", "face", "dof", "force", "total_force"}, "loads");
      const Dof dof = parse_dof(entry, "loads");
      if (entry.contains("face")) {
        const auto face = NodeSelector::parse(get<std::string>(entry, "face", "loads"));
        const auto total = get<double>(entry, "total_force", "loads");
        for (const auto& l : lump_face_load(mesh.nodes, mesh.elements, face, dof, total))
          model.loads.push_back(l);
      } else if (entry.contains("force")) {
        const auto nodes = target_nodes(entry, mesh, "loads");
        const auto f = get<double>(entry, "force", "loads");
        for (int n : nodes) model.loads.push_back({n, dof, f});
      } else {
        const auto nodes = target_nodes(entry, mesh, "loads");
        if (nodes.empty()) throw ParseError("loads: selector matches no node");
        const auto total = get<double>(entry, "total_force", "loads");
        for (int n : nodes) model.loads.push_back({n, dof, total / static_cast<double>(nodes.size())});
      }
    }
  }

  const json& sched = root["schedule"];
  require_keys(sched, {"n_steps"}, "schedule");
  const int n_steps = get<int>(sched, "n_steps", "schedule");

  if (root.contains("solver")) {
    const json& s = root["solver"];
    require_keys(s, {"rtol", "atol_u", "max_iterations", "max_halvings", "max_bisection_depth"}, "solver");
    auto& cfg = model.settings;
    if (s.contains("rtol")) cfg.rtol = get<double>(s, "rtol", "solver");
    if (s.contains("atol_u")) cfg.atol_u = get<double>(s, "atol_u", "solver");
    if (s.contains("max_iterations")) cfg.max_iterations = get<int>(s, "max_iterations", "solver");
    if (s.contains("max_halvings")) cfg.max_halvings = get<int>(s, "max_halvings", "solver");
    if (s.contains("max_bisection_depth"))
      cfg.max_bisection_depth = get<int>(s, "max_bisection_depth", "solver");
  }

  try {
    model.schedule = ContinuationSchedule::linear(mu0, mu_target, n_steps);
    model.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return model;
}

Model load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string write_model(const Model& model) {
  json root;
  root["material"] = {{"Nv", model.params.Nv},
                      {"chi", model.params.chi},
                      {"mu0_bar", model.params.mu0_bar},
                      {"mu_target", model.schedule.mu_path.back()}};

  json nodes = json::array();
  for (const auto& X : model.nodes) nodes.push_back({X(0), X(1), X(2)});
  json elements = json::array();
  for (const auto& e : model.elements) elements.push_back(e.node_ids);
  root["mesh"] = {{"nodes", nodes},
                  {"elements", elements},
                  {"gauss_rule", model.elements.empty() ? 2 : model.elements.front().gauss_rule}};

  json bcs = json::array();
  for (const auto& bc : model.dirichlet)
    bcs.push_back({{"node", bc.node}, {"dof", dof_name(bc.dof)}, {"value", bc.value}});
  root["bcs"] = bcs;

  json loads = json::array();
  for (const auto& l : model.loads)
    loads.push_back({{"node", l.node}, {"dof", dof_name(l.dof)}, {"force", l.force}});
  root["loads"] = loads;

  root["schedule"] = {{"n_steps", model.schedule.n_steps()}};
  const auto& cfg = model.settings;
  root["solver"] = {{"rtol", cfg.rtol},
                    {"atol_u", cfg.atol_u},
                    {"max_iterations", cfg.max_iterations},
                    {"max_halvings", cfg.max_halvings},
                    {"max_bisection_depth", cfg.max_bisection_depth}};
  return root.dump(2) + "\n";
}

}  // namespace gelfem
