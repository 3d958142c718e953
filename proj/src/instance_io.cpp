#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mindist/instance.hpp"

namespace mindist {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw std::invalid_argument(path + ": " + why);
}

json require(const json& j, const char* key, const std::string& at) {
  if (!j.contains(key)) fail(at + "." + key, "missing field");
  return j.at(key);
}

std::vector<std::size_t> index_list(const json& j, const std::string& at) {
  if (!j.is_array()) fail(at, "expected an array of indices");
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 0)
      fail(at, "expected nonnegative integers");
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

Point point_list(const json& j, const std::string& at) {
  if (!j.is_array()) fail(at, "expected an array of numbers");
  Point out;
  for (const auto& e : j) {
    if (!e.is_number()) fail(at, "expected numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

json cut_to_json(const LinearCut& c) {
  json terms = json::array();
  for (const auto& [v, coef] : c.terms) terms.push_back({{"var", v}, {"coef", coef}});
  return {{"terms", terms}, {"rhs", c.rhs}};
}

LinearCut cut_from_json(const json& j, const std::string& at) {
  LinearCut c;
  for (const auto& t : require(j, "terms", at)) {
    const auto v = require(t, "var", at + ".terms");
    const auto coef = require(t, "coef", at + ".terms");
    if (!v.is_number_integer()) fail(at + ".terms.var", "expected an index");
    c.terms.emplace_back(v.get<std::size_t>(), coef.get<double>());
  }
  c.rhs = require(j, "rhs", at).get<double>();
  return c;
}

}  // namespace

std::string instance_to_json_text(const Instance& inst) {
  json j;
  j["version"] = 1;
  j["name"] = inst.name;
  j["num_vars"] = inst.num_vars;
  json bounds = json::array();
  for (std::size_t i = 0; i < inst.bounds.dim(); ++i)
    bounds.push_back({inst.bounds[i].lo, inst.bounds[i].hi});
  j["bounds"] = bounds;
  j["objective_var"] = inst.objective_var;

  json mindcs = json::array();
  for (const MinDC& c : inst.mindcs) {
    json jc;
    jc["y"] = c.y_vars;
    jc["z"] = c.z_vars;
    if (c.delta_var)
      jc["delta"] = {{"var", *c.delta_var}};
    else
      jc["delta"] = {{"const", c.delta_const}};
    mindcs.push_back(std::move(jc));
  }
  j["mindcs"] = mindcs;

  json balls = json::array();
  for (const BallContainment& b : inst.balls) {
    json jb;
    jb["vars"] = b.vars;
    jb["center"] = b.center;
    json radius;
    radius["const"] = b.radius_const;
    if (b.radius_var) {
      radius["var"] = *b.radius_var;
      radius["coef"] = b.radius_coef;
    }
    jb["radius"] = radius;
    balls.push_back(std::move(jb));
  }
  j["balls"] = balls;

  json spheres = json::array();
  for (const SphereMembership& s : inst.spheres) {
    spheres.push_back({{"vars", s.vars},
                       {"center", s.center},
                       {"radius", s.radius},
                       {"band", s.band}});
  }
  j["spheres"] = spheres;

  json cuts = json::array();
  for (const LinearCut& c : inst.static_cuts) cuts.push_back(cut_to_json(c));
  j["cuts"] = cuts;

  j["lex"] = {{"rows", inst.lex.rows}, {"cols", inst.lex.cols}};
  j["rotsym"] = inst.rotation_symmetric;
  if (inst.layout) {
    j["layout"] = {{"n", inst.layout->n},
                   {"dim", inst.layout->dim},
                   {"vars", inst.layout->vars}};
  } else {
    j["layout"] = nullptr;
  }
  return j.dump(2);
}

Instance instance_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("document: ") + e.what());
  }
  if (require(j, "version", "$").get<int>() != 1)
    fail("$.version", "unsupported version");

  Instance inst;
  inst.name = j.value("name", std::string{});
  inst.num_vars = require(j, "num_vars", "$").get<std::size_t>();

  std::vector<Interval> iv;
  for (const auto& b : require(j, "bounds", "$")) {
    if (!b.is_array() || b.size() != 2) fail("$.bounds", "expected [lo, hi]");
    iv.emplace_back(b[0].get<double>(), b[1].get<double>());
  }
  inst.bounds = BoxDomain(std::move(iv));
  inst.objective_var = require(j, "objective_var", "$").get<std::size_t>();

  std::size_t idx = 0;
  for (const auto& jc : require(j, "mindcs", "$")) {
    const std::string at = "$.mindcs[" + std::to_string(idx++) + "]";
    MinDC c;
    c.y_vars = index_list(require(jc, "y", at), at + ".y");
    c.z_vars = index_list(require(jc, "z", at), at + ".z");
    const json d = require(jc, "delta", at);
    if (d.contains("var"))
      c.delta_var = d.at("var").get<std::size_t>();
    else if (d.contains("const"))
      c.delta_const = d.at("const").get<double>();
    else
      fail(at + ".delta", "expected const or var");
    inst.mindcs.push_back(std::move(c));
  }

  idx = 0;
  for (const auto& jb : j.value("balls", json::array())) {
    const std::string at = "$.balls[" + std::to_string(idx++) + "]";
    BallContainment b;
    b.vars = index_list(require(jb, "vars", at), at + ".vars");
    b.center = point_list(require(jb, "center", at), at + ".center");
    const json r = require(jb, "radius", at);
    b.radius_const = require(r, "const", at + ".radius").get<double>();
    if (r.contains("var")) {
      b.radius_var = r.at("var").get<std::size_t>();
      b.radius_coef = require(r, "coef", at + ".radius").get<double>();
    }
    inst.balls.push_back(std::move(b));
  }

  idx = 0;
  for (const auto& js : j.value("spheres", json::array())) {
    const std::string at = "$.spheres[" + std::to_string(idx++) + "]";
    SphereMembership s;
    s.vars = index_list(require(js, "vars", at), at + ".vars");
    s.center = point_list(require(js, "center", at), at + ".center");
    s.radius = require(js, "radius", at).get<double>();
    s.band = js.value("band", 1e-6);
    inst.spheres.push_back(std::move(s));
  }

  idx = 0;
  for (const auto& jc : j.value("cuts", json::array())) {
    const std::string at = "$.cuts[" + std::to_string(idx++) + "]";
    inst.static_cuts.push_back(cut_from_json(jc, at));
  }

  const json lex = j.value("lex", json::object());
  inst.lex.rows = lex.value("rows", false);
  inst.lex.cols = lex.value("cols", false);
  inst.rotation_symmetric = j.value("rotsym", false);

  if (j.contains("layout") && !j.at("layout").is_null()) {
    const json jl = j.at("layout");
    PointMatrixLayout layout;
    layout.n = require(jl, "n", "$.layout").get<std::size_t>();
    layout.dim = require(jl, "dim", "$.layout").get<std::size_t>();
    layout.vars = index_list(require(jl, "vars", "$.layout"), "$.layout.vars");
    inst.layout = std::move(layout);
  }

  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("$.") + e.what());
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return instance_from_json_text(ss.str());
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << instance_to_json_text(inst) << "\n";
}

}  // namespace mindist
