#pragma once

#include "porism/chain.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace porism {

/// One verified claim: a named check bound to its source anchor, reporting a
/// residual against a tolerance. SUSPECTED_TYPO marks a printed closed form
/// that disagrees with its numeric oracle while the numeric cross-checks pass.
struct ClaimResult {
  std::string id;
  std::string anchor;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string status;  // PASS | FAIL | SUSPECTED_TYPO
  std::string note;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;
  int registered = 0;  // total registered claims
  int covered = 0;     // claims executed in this run
  bool any_fail() const;
};

struct VerifySuite {
  std::vector<PorismConfig> configs;  // covers all three regimes, N in 3..8
  int samples = 360;

  static VerifySuite defaults();
  static VerifySuite load(const std::string& path);  // throws InvalidConfiguration
};

const std::vector<std::string>& registered_claim_ids();

/// Runs every registered claim (or the `only` subset) against the suite.
/// Failures are report entries, never exceptions.
VerificationReport verify_all(const VerifySuite& suite,
                              const std::vector<std::string>& only = {});

/// JSON form: array of {id, anchor, residual, tolerance, status} records in
/// claim-id order (deterministic bytes for identical inputs).
nlohmann::ordered_json report_json(const VerificationReport& report);

std::string report_table(const VerificationReport& report);

}  // namespace porism
