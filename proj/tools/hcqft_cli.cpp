#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hcqft/commands.hpp"
#include "hcqft/errors.hpp"

using namespace hcqft;

namespace {

struct Overrides {
  std::string config_path;
  std::optional<double> m, gamma, delta_k, L1, L2;
  std::optional<int> N, order;
  std::optional<std::string> geometry;
  std::optional<std::string> output_dir;

  void add_physics(CLI::App* app) {
    app->add_option("--m", m, "bare mass");
    app->add_option("--gamma", gamma, "dissipation rate");
  }
  void add_lattice(CLI::App* app) {
    app->add_option("--delta-k", delta_k, "lattice spacing in momentum");
    app->add_option("--N", N, "lattice half-width");
  }
  void add_geometry(CLI::App* app) {
    app->add_option("--geometry", geometry, "finite or infinite")->check(CLI::IsMember({"finite", "infinite"}));
    app->add_option("--L1", L1, "left end of the finite interval");
    app->add_option("--L2", L2, "right end of the finite interval");
  }

  RunConfig resolve() const {
    RunConfig c = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (m) c.params.m = *m;
    if (gamma) c.params.gamma = *gamma;
    if (delta_k) c.table.lattice.delta_k = *delta_k;
    if (N) c.table.lattice.N = *N;
    if (order) c.truncation_order = *order;
    if (geometry) c.geom.kind = *geometry == "finite" ? GeometryKind::finite_interval : GeometryKind::infinite_line;
    if (L1) c.geom.L1 = *L1;
    if (L2) c.geom.L2 = *L2;
    if (output_dir) c.output_dir = *output_dir;
    c.validate();
    return c;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doubled-field bicomplex QFT toolkit"};
  app.require_subcommand(1);
  Overrides ov;
  app.add_option("--config", ov.config_path, "JSON run configuration");
  app.add_option("--output-dir", ov.output_dir, "directory for default output files");

  auto* ring = app.add_subcommand("ring-check", "run the exact ring property suite");
  std::uint64_t seed = 20240611;
  int samples = 10'000;
  std::vector<int> unit_table;
  ring->add_option("--seed", seed);
  ring->add_option("--samples", samples)->check(CLI::PositiveNumber);
  ring->add_option("--unit-table", unit_table, "test hook: i^2 j^2 (ji sign)")->expected(3);

  auto* comm = app.add_subcommand("commutator", "write a commutator sweep as x,re,im CSV");
  std::string which_name, axis_name = "delta", csv_out;
  Grid grid;
  comm->add_option("--which", which_name, "omega-omega|pi-pi|omega-pi|w-omega-omega|w-pi-pi|w-omega-pi")
      ->required();
  comm->add_option("--axis", axis_name, "delta or mass")->check(CLI::IsMember({"delta", "mass"}));
  comm->add_option("--x-min", grid.min);
  comm->add_option("--x-max", grid.max);
  comm->add_option("--steps", grid.steps);
  comm->add_option("--fixed-delta", grid.fixed_delta, "separation held fixed on mass sweeps");
  comm->add_option("--output", csv_out, "CSV path (default: stdout)");
  ov.add_physics(comm);

  auto* evolve = app.add_subcommand("evolve", "evolve the vacuum and dump the state");
  EvolveArgs evolve_args;
  evolve->add_option("--t", evolve_args.t);
  evolve->add_option("--order", ov.order);
  evolve->add_option("--output", evolve_args.output, "state JSON path ('-' for none)");
  ov.add_physics(evolve);
  ov.add_lattice(evolve);
  ov.add_geometry(evolve);

  auto* asym = app.add_subcommand("asymptotic", "asymptotic states and divergence diagnostics");
  AsymptoticArgs asym_args;
  std::string contraction = "printed";
  asym->add_option("--order", ov.order);
  asym->add_option("--contraction", contraction)->check(CLI::IsMember({"printed", "derived"}));
  asym->add_flag("--reflected", asym_args.reflected_branch, "derived only: keep the k' = -k root");
  asym->add_option("--t-max", asym_args.t_max);
  asym->add_option("--t-steps", asym_args.t_steps);
  asym->add_option("--output", asym_args.output, "JSON path ('-' for none)");
  ov.add_physics(asym);
  ov.add_lattice(asym);
  ov.add_geometry(asym);

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  VerifyArgs verify_args;
  verify->add_option("--config", ov.config_path, "JSON run configuration");
  verify->add_option("--report", verify_args.report, "JSON report path ('-' for none)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (*ring) {
    UnitTable units;
    if (!unit_table.empty()) units = {unit_table[0], unit_table[1], unit_table[2]};
    return cmd_ring_check(std::cout, std::cerr, seed, units, samples);
  }

  RunConfig config;
  try {
    config = ov.resolve();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (*comm) {
    SweepArgs args;
    if (!parse_which(which_name, args.which)) {
      std::cerr << "error: unknown commutator '" << which_name << "'\n";
      return kExitUsage;
    }
    args.axis = axis_name == "mass" ? SweepAxis::mass : SweepAxis::delta;
    args.grid = grid;
    args.output = csv_out;
    return cmd_commutator(config, args, std::cout, std::cerr);
  }
  if (*evolve) return cmd_evolve(config, evolve_args, std::cout, std::cerr);
  if (*asym) {
    asym_args.contraction = contraction == "derived" ? Contraction::derived : Contraction::printed;
    return cmd_asymptotic(config, asym_args, std::cout, std::cerr);
  }
  return cmd_verify(config, verify_args, std::cout, std::cerr);
}
