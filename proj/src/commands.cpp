#include "hcqft/commands.hpp"

#include <filesystem>
#include <fstream>
#include <map>

#include "json.hpp"

#include "hcqft/errors.hpp"

namespace hcqft {
namespace {

using nlohmann::json;

const std::map<std::string, CommutatorWhich> kWhich{
    {"omega-omega", CommutatorWhich::omega_omega},     {"pi-pi", CommutatorWhich::pi_pi},
    {"omega-pi", CommutatorWhich::omega_pi},           {"w-omega-omega", CommutatorWhich::w_omega_omega},
    {"w-pi-pi", CommutatorWhich::w_pi_pi},             {"w-omega-pi", CommutatorWhich::w_omega_pi}};

// "" -> <output_dir>/fallback, "-" -> no file.
std::string resolve(const RunConfig& c, const std::string& path, const char* fallback) {
  if (path == "-") return {};
  if (!path.empty()) return path;
  return (std::filesystem::path(c.output_dir) / fallback).string();
}

void write_file(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) throw std::runtime_error("write to '" + path + "' failed");
}

void print_warnings(const RunConfig& c, std::ostream& err) {
  for (const auto& w : c.warnings()) err << "warning: " << w << '\n';
}

// Runs body, mapping library and I/O errors to exit code 2 with a message.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

const VacuumRules& default_rules() {
  static const VacuumRules rules = VacuumRules::constrained_by({0.4, -0.2}, {0.1, 0.3});
  return rules;
}

Lattice staggered(Lattice lat) {
  lat.staggered = true;
  return lat;
}

}  // namespace

std::string state_json(const StateVector& state) {
  json kets = json::object();
  for (const auto& [k, a] : state.amplitudes) kets[to_string(k)] = {a.x, a.y, a.u, a.v};
  json doc;
  doc["kets"] = std::move(kets);
  doc["size"] = state.size();
  doc["truncation_order"] = state.truncation_order;
  return doc.dump() + "\n";
}

int cmd_ring_check(std::ostream& out, std::ostream& err, std::uint64_t seed, const UnitTable& units, int samples) {
  const auto r = ring_suite(samples, seed, units);
  for (const auto& [name, n] : r.counts) out << name << ": " << n << " checks\n";
  out << r.checks << " checks, " << r.failures << " failures, " << r.seconds << " s\n";
  if (!r.passed()) {
    err << "ring property failed: " << r.first_failure << '\n';
    return kExitFailure;
  }
  return kExitPass;
}

bool parse_which(const std::string& name, CommutatorWhich& which) {
  const auto it = kWhich.find(name);
  if (it == kWhich.end()) return false;
  which = it->second;
  return true;
}

int cmd_commutator(const RunConfig& config, const SweepArgs& args, std::ostream& out, std::ostream& err) {
  if (args.grid.steps < 1) {
    err << "error: empty sweep (steps must be >= 1)\n";
    return kExitUsage;
  }
  return guarded(err, [&] {
    print_warnings(config, err);
    const auto rows = commutator_sweep(args.which, args.axis, args.grid, config.params, config.table);
    const std::string csv = figure_csv(rows);
    if (args.output.empty()) {
      out << csv;
    } else {
      write_file(args.output, csv);
      out << "wrote " << rows.size() << " rows to " << args.output << '\n';
    }
    return static_cast<int>(kExitPass);
  });
}

int cmd_evolve(const RunConfig& config, const EvolveArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    print_warnings(config, err);
    const auto state = evolve_vacuum(args.t, config.truncation_order, config.params, config.geom, config.table,
                                     default_rules(), config.max_kets);
    const auto x = evolution_exponent(args.t, config.params, config.geom, config.table.lattice);
    const std::string path = resolve(config, args.output, "state.json");
    if (!path.empty()) write_file(path, state_json(state));
    out << "kets " << state.size() << "  norm_deviation " << norm_deviation(state) << "  truncation_remainder "
        << truncation_remainder(x, config.truncation_order) << "  schmidt_rank "
        << schmidt_rank(state, momentum_modes({0})) << '\n';
    if (config.geom.kind == GeometryKind::infinite_line && config.params.gamma > 0.0) {
      const auto d = asymptotic_state_infinite({0.0, 1.0, 2.0}, config.params, config.table);
      out << "warning: infinite-geometry asymptotic state diverges (log-modulus growth rate "
          << d.modulus_growth_rate << " per unit t)\n";
    }
    return static_cast<int>(kExitPass);
  });
}

int cmd_asymptotic(const RunConfig& config, const AsymptoticArgs& args, std::ostream& out, std::ostream& err) {
  if (args.t_steps < 1 || !(args.t_max >= 0.0)) {
    err << "error: time grid needs steps >= 1 and t_max >= 0\n";
    return kExitUsage;
  }
  return guarded(err, [&] {
    print_warnings(config, err);
    const std::string path = resolve(config, args.output, "asymptotic.json");
    if (config.geom.kind == GeometryKind::finite_interval) {
      CommutationTable table = config.table;
      table.lattice = staggered(table.lattice);
      const AsymptoticOptions opts{args.contraction, args.reflected_branch, config.max_kets};
      const auto state = asymptotic_state_finite(config.truncation_order, config.params, config.geom.L1,
                                                 config.geom.L2, table, opts);
      if (!path.empty()) write_file(path, state_json(state));
      out << "kets " << state.size() << "  schmidt_rank " << schmidt_rank(state, momentum_modes({0})) << '\n';
      return static_cast<int>(kExitPass);
    }
    std::vector<double> ts;
    for (int i = 0; i < args.t_steps; ++i) {
      ts.push_back(args.t_steps == 1 ? 0.0 : args.t_max * i / (args.t_steps - 1));
    }
    const auto d = asymptotic_state_infinite(ts, config.params, config.table);
    json doc{{"t", d.t},
             {"log_modulus", d.log_modulus},
             {"phase", d.phase},
             {"modulus_growth_rate", d.modulus_growth_rate},
             {"expected_growth_rate", d.expected_growth_rate},
             {"max_mode_drift", d.max_mode_drift},
             {"is_cyclostationary", d.is_cyclostationary},
             {"divergent", d.divergent}};
    if (!path.empty()) write_file(path, doc.dump(1) + "\n");
    out << "growth_rate " << d.modulus_growth_rate << "  expected " << d.expected_growth_rate << "  max_mode_drift "
        << d.max_mode_drift << "  cyclostationary " << (d.is_cyclostationary ? "yes" : "no") << '\n';
    if (d.divergent) out << "warning: asymptotic state diverges\n";
    return static_cast<int>(kExitPass);
  });
}

int cmd_verify(const RunConfig& config, const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    print_warnings(config, err);
    const auto report = run_acceptance(config, args.options);
    for (const auto& c : report.criteria) out << format_line(c) << '\n';
    const std::string path = resolve(config, args.report, "verify.json");
    if (!path.empty()) write_file(path, report_json(report) + "\n");
    return static_cast<int>(report.all_pass() ? kExitPass : kExitFailure);
  });
}

}  // namespace hcqft
