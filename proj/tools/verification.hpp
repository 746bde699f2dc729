#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "doily/incidence.hpp"

namespace doily::cli {

enum class ClaimStatus { kPass, kFail, kSkipped };

struct ClaimEntry {
  std::string id;
  std::string description;
  nlohmann::json expected;
  nlohmann::json observed;
  ClaimStatus status = ClaimStatus::kFail;
};

struct VerificationReport {
  std::vector<ClaimEntry> claims;
  std::vector<std::pair<std::string, double>> timings_ms;

  // Skipped claims do not count against the result.
  bool overall() const;
  const ClaimEntry* first_failure() const;
  const ClaimEntry* find(const std::string& id) const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  bool long_run = false;
  // Test hook: replaces the catalog Desargues structure.
  std::optional<IncidenceStructure> desargues_override;
};

// Frozen claim ids, in pipeline order.
inline const std::vector<std::string> kClaimIds = {
    "catalog-integrity",
    "hyperplane-census-15",
    "perp-structure",
    "triangle-class-structure",
    "derived-geometry-15-lines",
    "xor-closed-rejections",
    "isomorphism-gq22",
    "gq-properties",
    "ovoid-image",
    "census-10-3",
    "fano-sanity",
    "symmetry-cross-checks",
    "census-15-3-count",
    "doily-triangle-free-uniqueness",
};

// Runs the fixed claim pipeline. CapacityError propagates; any other
// library error marks the claim (and claims depending on it) as failed.
VerificationReport verify_paper(const VerifyOptions& options = {});

}  // namespace doily::cli
