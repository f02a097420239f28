#pragma once

// Identity suites behind `spm verify`.
//
// Every check records what it tested and over which range. "flagged" is
// reserved for the four known misprints in the source formulas; a flagged
// check still fails if the reading treated as correct does not hold.

#include <functional>
#include <string>
#include <vector>

#include "spm/numeric.hpp"

namespace spm::verify {

enum class Status { Pass, Fail, Flagged };

std::string_view status_name(Status status);

struct Check {
  std::string name;
  std::string identity;
  std::string range;
  Status status = Status::Pass;
  std::string detail;  ///< counterexample on failure, evidence when flagged
};

struct Report {
  std::vector<Check> checks;

  /// No check failed (flagged checks do not count as failures).
  bool ok() const;
  std::size_t count(Status status) const;
  std::string render_text() const;
  std::string render_json() const;
};

struct Config {
  int order = 12;
  /// Replaces stirling2 inside the Stirling-number suites (fault injection).
  std::function<BigInt(long, long)> stirling2_override;
};

void run_combinum_suite(const Config& config, Report& report);
void run_powerseries_suite(const Config& config, Report& report);
void run_spcounts_suite(const Config& config, Report& report);
void run_discrepancy_suite(const Config& config, Report& report);

Report run_verify(const Config& config = {});

}  // namespace spm::verify
