#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hcqft/acceptance.hpp"
#include "hcqft/entangled_states.hpp"
#include "hcqft/field_commutators.hpp"
#include "hcqft/run_config.hpp"

namespace hcqft {

enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

/// Ket label -> [x, y, u, v], keys sorted; plus the truncation order.
std::string state_json(const StateVector& state);

int cmd_ring_check(std::ostream& out, std::ostream& err, std::uint64_t seed = 20240611,
                   const UnitTable& units = {}, int samples = 10'000);

struct SweepArgs {
  CommutatorWhich which = CommutatorWhich::omega_pi;
  SweepAxis axis = SweepAxis::delta;
  Grid grid{};
  std::string output;  // empty: CSV to `out`
};

bool parse_which(const std::string& name, CommutatorWhich& which);

int cmd_commutator(const RunConfig& config, const SweepArgs& args, std::ostream& out, std::ostream& err);

struct EvolveArgs {
  double t = 1.0;
  std::string output;  // empty: <output_dir>/state.json; "-": no dump
};

int cmd_evolve(const RunConfig& config, const EvolveArgs& args, std::ostream& out, std::ostream& err);

struct AsymptoticArgs {
  Contraction contraction = Contraction::printed;
  bool reflected_branch = false;
  double t_max = 10.0;  // infinite geometry: diagnostics on [0, t_max]
  int t_steps = 101;
  std::string output;  // empty: <output_dir>/asymptotic.json; "-": no dump
};

int cmd_asymptotic(const RunConfig& config, const AsymptoticArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
  AcceptanceOptions options{};
  std::string report;  // empty: <output_dir>/verify.json; "-": no report file
};

int cmd_verify(const RunConfig& config, const VerifyArgs& args, std::ostream& out, std::ostream& err);

}  // namespace hcqft
