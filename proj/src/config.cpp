#include "symtop/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "symtop/error.hpp"
#include "symtop/reduction.hpp"

namespace symtop {
namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw ConfigError("missing key '" + key + "' in " + where);
  return j.at(key);
}

double number(const json& j, const std::string& what) {
  if (!j.is_number()) throw ConfigError(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(what + " must be finite");
  return v;
}

Vec3 vec3(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) throw ConfigError(what + " must be an array of 3 numbers");
  return Vec3(number(j[0], what), number(j[1], what), number(j[2], what));
}

Rotation rotation_from_entries(const json& j) {
  if (!j.is_array() || j.size() != 9) throw ConfigError("initial.R must be an array of 9 numbers (row-major)");
  Mat3 m;
  for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = number(j[i], "initial.R");
  const double defect = orthogonality_defect(m);
  if (defect > kConfigRotationTolerance || m.determinant() <= 0.0) {
    throw ConfigError("initial.R is not a rotation (orthogonality defect " + std::to_string(defect) + ")");
  }
  return reorthonormalize(m);
}

Vec3 unit_nu(const json& j) {
  const Vec3 nu = vec3(j, "initial.nu");
  if (std::abs(nu.norm() - 1.0) > kConfigRotationTolerance) throw ConfigError("initial.nu must be a unit vector");
  return nu.normalized();
}

}  // namespace

Potential parse_potential(const json& j) {
  if (!j.is_object()) throw ConfigError("potential must be an object");
  const json& type_j = require(j, "type", "potential");
  if (!type_j.is_string()) throw ConfigError("potential.type must be a string");
  const std::string type = type_j.get<std::string>();
  if (type == "zero") {
    reject_unknown(j, {"type"}, "potential");
    return Potential::zero();
  }
  if (type == "linear_gravity") {
    reject_unknown(j, {"type", "g", "chi"}, "potential");
    return Potential::linear_gravity(vec3(require(j, "g", "potential"), "potential.g"),
                                     number(require(j, "chi", "potential"), "potential.chi"));
  }
  if (type == "dipole") {
    reject_unknown(j, {"type", "m", "mu"}, "potential");
    return Potential::dipole(number(require(j, "m", "potential"), "potential.m"),
                             vec3(require(j, "mu", "potential"), "potential.mu"));
  }
  if (type == "sum") {
    reject_unknown(j, {"type", "terms"}, "potential");
    const json& terms = require(j, "terms", "potential");
    if (!terms.is_array()) throw ConfigError("potential.terms must be an array");
    std::vector<Potential> parts;
    for (const auto& t : terms) parts.push_back(parse_potential(t));
    return Potential::sum(parts);
  }
  throw ConfigError("unknown potential type '" + type + "'");
}

RunConfig parse_run_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(j,
                 {"space", "body", "potential", "initial", "dt", "T", "method", "sample_stride", "seed",
                  "reduced_dt", "tolerance"},
                 "config");
  RunConfig cfg;

  const json& space = require(j, "space", "config");
  if (space == "full") {
    cfg.space = RunSpace::Full;
  } else if (space == "reduced") {
    cfg.space = RunSpace::Reduced;
  } else {
    throw ConfigError("space must be \"full\" or \"reduced\"");
  }

  const json& body = require(j, "body", "config");
  if (!body.is_object()) throw ConfigError("body must be an object");
  reject_unknown(body, {"M", "I1", "I3"}, "body");
  cfg.body = {number(require(body, "M", "body"), "body.M"), number(require(body, "I1", "body"), "body.I1"),
              number(require(body, "I3", "body"), "body.I3")};
  try {
    cfg.body.validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }

  if (j.contains("potential")) cfg.potential = parse_potential(j.at("potential"));

  cfg.options.dt = number(require(j, "dt", "config"), "dt");
  cfg.options.T = number(require(j, "T", "config"), "T");
  if (cfg.options.dt <= 0.0) throw ConfigError("dt must be positive");
  if (cfg.options.T <= 0.0) throw ConfigError("T must be positive");
  if (j.contains("method")) {
    const json& m = j.at("method");
    if (m == "rk4") {
      cfg.options.method = Method::RK4;
    } else if (m == "rk4_repair") {
      cfg.options.method = Method::RK4Repair;
    } else {
      throw ConfigError("method must be \"rk4\" or \"rk4_repair\"");
    }
  }
  if (j.contains("sample_stride")) {
    const json& s = j.at("sample_stride");
    if (!s.is_number_integer() || s.get<long long>() < 1) throw ConfigError("sample_stride must be an integer >= 1");
    cfg.options.sample_stride = static_cast<int>(s.get<long long>());
  }
  if (j.contains("seed")) {
    const json& s = j.at("seed");
    if (!s.is_number_integer() || (!s.is_number_unsigned() && s.get<long long>() < 0)) {
      throw ConfigError("seed must be a non-negative integer");
    }
    cfg.seed = s.get<std::uint64_t>();
  }
  cfg.reduced_dt = cfg.options.dt;
  if (j.contains("reduced_dt")) {
    cfg.reduced_dt = number(j.at("reduced_dt"), "reduced_dt");
    if (cfg.reduced_dt != cfg.options.dt) {
      throw ConfigError("reduced_dt must equal dt: the full and reduced runs share one time step");
    }
  }
  if (j.contains("tolerance")) {
    cfg.tolerance = number(j.at("tolerance"), "tolerance");
    if (cfg.tolerance <= 0.0) throw ConfigError("tolerance must be positive");
  }

  const json& init = require(j, "initial", "config");
  if (init == "random") {
    cfg.full_initial = std::get<FullState>(random_state(SpaceId::CotSE3, cfg.seed));
  } else {
    if (!init.is_object()) throw ConfigError("initial must be \"random\" or an object");
    reject_unknown(init, {"x", "p", "pi", "R", "axis_angle", "nu"}, "initial");
    FullState s;
    if (init.contains("x")) s.x = vec3(init.at("x"), "initial.x");
    if (init.contains("p")) s.p = vec3(init.at("p"), "initial.p");
    if (init.contains("pi")) s.pi = vec3(init.at("pi"), "initial.pi");
    const int attitude = int(init.contains("R")) + int(init.contains("axis_angle")) + int(init.contains("nu"));
    if (attitude != 1) throw ConfigError("initial needs exactly one of R, axis_angle, nu");
    if (init.contains("R")) {
      s.R = rotation_from_entries(init.at("R"));
    } else if (init.contains("axis_angle")) {
      s.R = exp_so3(vec3(init.at("axis_angle"), "initial.axis_angle"));
    } else {
      s.R = section(unit_nu(init.at("nu")));
    }
    cfg.full_initial = s;
  }
  cfg.reduced_initial = project_full(cfg.full_initial);
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_run_config(j);
}

}  // namespace symtop
