#pragma once

// Recomputes published numeric claims about the reference state psi_alpha,
// the I5 bounds, the assistance identity and the published closed forms, and
// records claim-by-claim agreement. Reporting only: a
// disagreement is a recorded verdict, never a failure.

#include <string>
#include <vector>

namespace triq {

struct ConformanceClaim {
    std::string claim;
    double paper_value = 0;
    double computed_value = 0;
    bool agree = false;
    std::string note;
};

std::vector<ConformanceClaim> conformance_claims(std::uint64_t seed = 42);

std::string conformance_json(const std::vector<ConformanceClaim>& claims);

}  // namespace triq
