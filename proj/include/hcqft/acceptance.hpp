#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hcqft/run_config.hpp"

namespace hcqft {

/// Squares and ordering sign of the imaginary units used by the ring suite's
/// reference product. The defaults describe H; anything else is a fault.
struct UnitTable {
  int i_squared = -1;
  int j_squared = 1;
  int ji_sign = 1;  // j i = ji_sign * i j
};

struct RingSuiteResult {
  long checks = 0;
  long failures = 0;
  std::map<std::string, long> counts;  // property -> checks run
  std::string first_failure;           // empty when everything passed
  double seconds = 0.0;

  [[nodiscard]] bool passed() const { return failures == 0; }
};

/// `samples` random exact triples; every property is checked on each.
RingSuiteResult ring_suite(int samples, std::uint64_t seed, const UnitTable& units = {});

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string tolerance;
  std::string measured;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  UnitTable units{};
  int ring_samples = 10'000;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;

  [[nodiscard]] bool all_pass() const;
};

AcceptanceReport run_acceptance(const RunConfig& config, const AcceptanceOptions& opts = {});

/// "[PASS] 3 name | tol: ... | measured: ..." per criterion.
std::string format_line(const CriterionResult& c);
/// Keys sorted, one object per criterion.
std::string report_json(const AcceptanceReport& report);

}  // namespace hcqft
