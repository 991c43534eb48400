#include "hcqft/run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hcqft/errors.hpp"

namespace hcqft {
namespace {

using nlohmann::json;

void only_keys(const json& j, const std::string& where, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double number(const json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError(key + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(key + " must be finite");
  return v;
}

long long integer(const json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ConfigError(key + " must be an integer");
  return j.get<long long>();
}

std::array<Bicomplex, 4> ring_quad(const json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 4) throw ConfigError(key + " must list four ring values");
  std::array<Bicomplex, 4> out;
  for (std::size_t s = 0; s < 4; ++s) {
    const json& e = j[s];
    if (!e.is_array() || e.size() != 4) throw ConfigError(key + " entries are [x, y, u, v]");
    const std::string at = key + "[" + std::to_string(s) + "]";
    out[s] = {number(e[0], at), number(e[1], at), number(e[2], at), number(e[3], at)};
  }
  return out;
}

json quad_json(const std::array<Bicomplex, 4>& q) {
  json out = json::array();
  for (const auto& b : q) out.push_back({b.x, b.y, b.u, b.v});
  return out;
}

}  // namespace

void RunConfig::validate() const {
  auto finite = [](double v, const char* name) {
    if (!std::isfinite(v)) throw ConfigError(std::string(name) + " must be finite");
  };
  finite(params.m, "m");
  finite(params.gamma, "gamma");
  finite(table.lattice.delta_k, "delta_k");
  if (params.m < 0.0) throw ConfigError("m must be non-negative");
  if (params.gamma < 0.0) throw ConfigError("gamma must be non-negative");
  if (!(table.lattice.delta_k > 0.0)) throw ConfigError("delta_k must be positive");
  if (table.lattice.N < 0) throw ConfigError("N must be non-negative");
  if (truncation_order < 0) throw ConfigError("truncation_order must be non-negative");
  if (max_kets == 0) throw ConfigError("max_kets must be positive");
  if (geom.kind == GeometryKind::finite_interval) {
    finite(geom.L1, "L1");
    finite(geom.L2, "L2");
    if (!(geom.L2 > geom.L1)) throw ConfigError("geometry needs L2 > L1");
  }
  for (const auto& r : table.rho) {
    for (double c : {r.x, r.y, r.u, r.v}) finite(c, "rho");
  }
  for (const auto& s : table.sigma) {
    for (double c : {s.x, s.y, s.u, s.v}) finite(c, "sigma");
  }
}

std::vector<std::string> RunConfig::warnings() const {
  std::vector<std::string> out;
  const double span = table.lattice.N * table.lattice.delta_k;
  const double scale = 5.0 * std::max(params.m, params.gamma);
  if (span < scale) {
    std::ostringstream os;
    os << "lattice span N*delta_k = " << span << " is below 5*max(m, gamma) = " << scale;
    out.push_back(os.str());
  }
  if (params.modified_mass_sq() <= 0.0) {
    out.push_back("modified mass squared m^2 - gamma^2/4 is not positive; infrared cutoff in use");
  }
  return out;
}

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  only_keys(doc, "config",
            {"params", "lattice", "geometry", "table", "truncation_order", "output_dir", "seed", "max_kets"});
  RunConfig c;
  if (doc.contains("params")) {
    const json& p = doc["params"];
    only_keys(p, "params", {"m", "gamma"});
    if (p.contains("m")) c.params.m = number(p["m"], "m");
    if (p.contains("gamma")) c.params.gamma = number(p["gamma"], "gamma");
  }
  if (doc.contains("lattice")) {
    const json& l = doc["lattice"];
    only_keys(l, "lattice", {"delta_k", "N", "staggered"});
    if (l.contains("delta_k")) c.table.lattice.delta_k = number(l["delta_k"], "delta_k");
    if (l.contains("N")) c.table.lattice.N = static_cast<int>(integer(l["N"], "N"));
    if (l.contains("staggered")) {
      if (!l["staggered"].is_boolean()) throw ConfigError("staggered must be a boolean");
      c.table.lattice.staggered = l["staggered"].get<bool>();
    }
  }
  if (doc.contains("geometry")) {
    const json& g = doc["geometry"];
    only_keys(g, "geometry", {"kind", "L1", "L2"});
    if (g.contains("kind")) {
      if (!g["kind"].is_string()) throw ConfigError("geometry.kind must be a string");
      const auto kind = g["kind"].get<std::string>();
      if (kind == "infinite") {
        c.geom.kind = GeometryKind::infinite_line;
      } else if (kind == "finite") {
        c.geom.kind = GeometryKind::finite_interval;
      } else {
        throw ConfigError("geometry.kind must be 'finite' or 'infinite'");
      }
    }
    if (g.contains("L1")) c.geom.L1 = number(g["L1"], "L1");
    if (g.contains("L2")) c.geom.L2 = number(g["L2"], "L2");
  }
  if (doc.contains("table")) {
    const json& t = doc["table"];
    only_keys(t, "table", {"rho", "sigma"});
    if (t.contains("rho")) c.table.rho = ring_quad(t["rho"], "rho");
    if (t.contains("sigma")) c.table.sigma = ring_quad(t["sigma"], "sigma");
  }
  if (doc.contains("truncation_order")) {
    c.truncation_order = static_cast<int>(integer(doc["truncation_order"], "truncation_order"));
  }
  if (doc.contains("output_dir")) {
    if (!doc["output_dir"].is_string()) throw ConfigError("output_dir must be a string");
    c.output_dir = doc["output_dir"].get<std::string>();
  }
  if (doc.contains("seed")) {
    const long long s = integer(doc["seed"], "seed");
    if (s < 0) throw ConfigError("seed must be non-negative");
    c.seed = static_cast<std::uint64_t>(s);
  }
  if (doc.contains("max_kets")) {
    const long long k = integer(doc["max_kets"], "max_kets");
    if (k <= 0) throw ConfigError("max_kets must be positive");
    c.max_kets = static_cast<std::size_t>(k);
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string config_to_json(const RunConfig& c) {
  json doc;
  doc["params"] = {{"m", c.params.m}, {"gamma", c.params.gamma}};
  doc["lattice"] = {{"delta_k", c.table.lattice.delta_k},
                    {"N", c.table.lattice.N},
                    {"staggered", c.table.lattice.staggered}};
  doc["geometry"] = {{"kind", c.geom.kind == GeometryKind::infinite_line ? "infinite" : "finite"},
                     {"L1", c.geom.L1},
                     {"L2", c.geom.L2}};
  doc["table"] = {{"rho", quad_json(c.table.rho)}, {"sigma", quad_json(c.table.sigma)}};
  doc["truncation_order"] = c.truncation_order;
  doc["output_dir"] = c.output_dir;
  doc["seed"] = c.seed;
  doc["max_kets"] = c.max_kets;
  return doc.dump(2);
}

}  // namespace hcqft
