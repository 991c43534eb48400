#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hcqft/dispersion.hpp"
#include "hcqft/observables.hpp"
#include "hcqft/operator_algebra.hpp"

namespace hcqft {

struct RunConfig {
  FieldParams params{1.0, 0.5};
  GeometrySpec geom{GeometryKind::infinite_line, -1.0, 1.0};
  CommutationTable table{};  // lattice {0.1, 32}, rho1 = 1
  int truncation_order = 3;
  std::string output_dir = ".";
  std::uint64_t seed = 20240611;
  std::size_t max_kets = 1'000'000;

  /// Throws ConfigError on non-finite numbers or impossible values.
  void validate() const;
  /// Soft problems, e.g. a lattice span below 5 max(m, gamma).
  [[nodiscard]] std::vector<std::string> warnings() const;
};

/// Parses one JSON document. Unknown keys and wrong types are ConfigErrors.
///
///   {"params": {"m": 1, "gamma": 0.5},
///    "lattice": {"delta_k": 0.1, "N": 32, "staggered": false},
///    "geometry": {"kind": "infinite" | "finite", "L1": -1, "L2": 1},
///    "table": {"rho": [[x, y, u, v] x4], "sigma": [[x, y, u, v] x4]},
///    "truncation_order": 3, "output_dir": ".", "seed": 20240611, "max_kets": 1000000}
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);
std::string config_to_json(const RunConfig& config);

}  // namespace hcqft
