#pragma once

#include <optional>
#include <vector>

#include "delta/polynomial.hpp"

namespace delta {

// One clause of a simultaneous approximation query:
//   || n^power * coeff - target || < delta
struct SimulCondition {
    unsigned power = 1;
    RealValue coeff;
    RealValue target = RealValue::exact(Rat(0));
    Rat delta;
};

struct SimulStats {
    Int candidates_examined{0};
    Int skipped_unknown{0};
    std::vector<Int> unknown_candidates;  // first few, for the report
};

struct SimulResult {
    std::optional<Int> n;  // least certified hit, NotFoundWithinBound otherwise
    SimulStats stats;
};

// Least n in [n_min, n_max] satisfying every condition, each certified In via
// interval arithmetic. Candidates that stay Unknown at the precision cap are
// skipped and reported; an empty conjunction returns n_min.
SimulResult simultaneous_search(const std::vector<SimulCondition>& conditions, const Int& n_min,
                                const Int& n_max, const PrecisionPolicy& policy = {});

// Same contract over an explicit ascending candidate list (used by the
// structured avoider scans).
SimulResult simultaneous_search_over(const std::vector<SimulCondition>& conditions,
                                     const std::vector<Int>& candidates,
                                     const PrecisionPolicy& policy = {});

// Certified verdict for one condition at one candidate.
Mod1Bound check_condition(const SimulCondition& c, const Int& n, const PrecisionPolicy& policy);

}  // namespace delta
