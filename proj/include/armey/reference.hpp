#pragma once

#include <string>
#include <vector>

#include "armey/pipeline.hpp"

namespace armey {

/// Compares a replication run against the built-in reference estimates for
/// the Cambodia 1971-2015 dataset. Tolerances are loose because the public
/// source series are revised over time. Returns one line per comparison;
/// `failures` collects the ones out of tolerance.
struct ReferenceCheck {
    std::vector<std::string> lines;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

ReferenceCheck check_against_reference(const ReplicationReport& rep);

}  // namespace armey
