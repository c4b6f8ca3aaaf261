#pragma once

#include <map>
#include <optional>
#include <set>

#include "delta/diff.hpp"
#include "delta/polynomial.hpp"

namespace delta {

// Outcome of a recurrence-witness search over one finite sequence. The
// witness tuple is the lex-least one whose difference value d satisfies
// d >= 1 and ||v(d)|| < eps certified In (membership in R(v, eps) lives in N,
// so nonpositive d never witnesses).
struct WitnessReport {
    bool found = false;
    IndexTuple indices;
    Int diff_value{0};
    Mod1Bound bound;
    Int tuples_examined{0};
    Int distinct_diffs{0};
    Int unknown_diffs{0};  // Unknown verdicts at the cap, counted, never Out
    std::string sequence_id;
    // set when v is odd of degree <= 2*level - 1 and the sequence was long,
    // where the recurrence theorem makes a miss overwhelmingly suspicious
    bool suspected_implementation_error = false;
};

WitnessReport find_delta_witness(const FiniteSequence& s, const PolySpec& v, const Rat& eps,
                                 unsigned level, const PrecisionPolicy& policy = {});

// Independent re-verification: recompute the difference value from the
// indices and re-certify the verdict at (typically doubled) precision.
bool verify_witness(const FiniteSequence& s, const PolySpec& v, const Rat& eps,
                    const WitnessReport& report, const PrecisionPolicy& policy);

// {n in [1, N] : v(n) in (E - E) intersect N} for integer-valued v, with
// exact density statistics.
struct SarkozyReport {
    std::vector<Int> hits;
    Rat hit_density;         // |hits| / N
    Rat input_density;       // |E| / N
    Int difference_count{0};  // |(E - E) intersect N|
};

SarkozyReport sarkozy_search(const std::set<Int>& E, const Int& N, const PolySpec& v);

}  // namespace delta
