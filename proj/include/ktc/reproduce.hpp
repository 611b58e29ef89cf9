#ifndef KTC_REPRODUCE_HPP
#define KTC_REPRODUCE_HPP

#include "ktc/search.hpp"

#include <string>
#include <vector>

namespace ktc {

// One entry per verifiable claim about Kendall-tau codes that this
// library can check at desk scale. Each check is deterministic.
enum class ClaimStatus { pass, fail, skipped };

struct ClaimResult {
  std::string id;
  std::string statement;
  ClaimStatus status = ClaimStatus::skipped;
  double seconds = 0.0;
  std::string detail;
};

struct ReproduceReport {
  std::vector<ClaimResult> results;
  bool all_pass() const;
};

// Manifest of known claim ids, in execution order.
std::vector<std::string> claim_ids();

// Human-readable statement for a claim id; throws on unknown id.
std::string claim_statement(const std::string& id);

// Runs one claim. Budget-limited searches that run out report skipped,
// never pass. Throws std::invalid_argument on unknown id.
ClaimResult run_claim(const std::string& id, const SearchBudget& budget = {});

// Runs a selection of claims (empty selection means all).
ReproduceReport run_claims(const std::vector<std::string>& selection,
                           const SearchBudget& budget = {});

}  // namespace ktc

#endif
