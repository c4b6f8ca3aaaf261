#pragma once

#include <optional>
#include <utility>

#include "delta/dioph_search.hpp"
#include "delta/sequence.hpp"

namespace delta {

// What each per-tuple record asserts about the tuple's difference value d:
//   ShiftedIn      ||Q(d) - shift|| <  eps   (certified In)
//   DistOutStrict  ||Q(d)||         >  eps   (certified strictly outside)
//   InIntervalUnion  d lies in one of the stored integer intervals
// where Q is the certificate's check polynomial.
enum class TupleCheckKind { ShiftedIn, DistOutStrict, InIntervalUnion };

struct TupleRecord {
    unsigned level = 1;
    std::vector<size_t> indices;  // 1-based positions into the sequence
    Int diff_value{0};
    Mod1Bound bound;              // mod-1 kinds
    long interval_index = -1;     // InIntervalUnion
    bool ok = false;
};

struct ElementScanRecord {
    Int chosen{0};
    std::string strategy;         // candidate stream used
    Int candidates_examined{0};
    Rat tolerance_used;           // final (possibly relaxed) schedule value
};

// Finite-scale avoidance evidence: a constructed sequence together with an
// exhaustive per-tuple bound list. Re-verifiable from the sequence and the
// claim parameters alone.
struct AvoiderCertificate {
    FiniteSequence sequence;
    std::string claim;
    TupleCheckKind kind = TupleCheckKind::ShiftedIn;
    PolySpec check_poly;                         // Q above (mod-1 kinds)
    Rat shift;                                   // ShiftedIn target
    Rat eps;
    std::vector<unsigned> levels;                // levels with records
    std::vector<std::pair<Int, Int>> intervals;  // InIntervalUnion
    std::vector<TupleRecord> tuple_bounds;
    std::vector<ElementScanRecord> scans;
    bool complete = false;  // reached the requested length (else partial)
    bool verified = false;  // every record ok
};

// Sequence with ||n_k a|| and ||n_k^2 a - 1/3|| small and pairwise products
// ||n_j n_k a|| small; every quadruple then has ||d^2 a - 4/3|| < eps, hence
// ||d^2 a|| >= 1/3 - eps. Requires an irrational (non-exact) alpha and
// eps in (0, 1/6].
AvoiderCertificate build_square_avoider(const RealValue& alpha, const Rat& eps, size_t length,
                                        const Int& scan_bound,
                                        const PrecisionPolicy& policy = {});

// Sequence whose level-l difference values all have ||v(d) - 1/2|| < 1/4 for
// odd v of degree 2l'-1 > 2l-1. aux holds l' constants alpha_0..alpha_{l'-1}
// (rationally independent, trusted; the last must back v's leading
// coefficient); the builder tracks the three limit conditions of the converse
// construction at an adaptive schedule and enforces the certificate
// inequality outright.
AvoiderCertificate build_high_degree_avoider(const PolySpec& v, unsigned level, size_t length,
                                             const Int& scan_bound,
                                             const std::vector<ConstantPtr>& aux,
                                             const PrecisionPolicy& policy = {});

// Sequence whose D_l for every l <= level_max lies in {n : ||v(n)|| > eps},
// for even v with v(0) = 0 and an irrational leading coefficient.
AvoiderCertificate build_even_avoider(const PolySpec& v, const Rat& eps, unsigned level_max,
                                      size_t length, const Int& scan_bound,
                                      const PrecisionPolicy& policy = {});

// The syndeticity obstruction: given interval system (L_k, R_k) with
// L_k < R_k < L_{k+1} and sum_{s<=k} R_s + L_{k+1} < R_{k+1}, the sequence
// (R_k) has D_l inside the union of the intervals.
AvoiderCertificate build_nonsyndetic_avoider(const std::vector<std::pair<Int, Int>>& intervals,
                                             unsigned level);

// Recompute every tuple record from the sequence and claim parameters and
// compare; run with a doubled-precision policy for independent checking.
bool verify_avoider(const AvoiderCertificate& cert, const PrecisionPolicy& policy);

// The standard interval system L_{k+1} = sum_{s<=k} R_s + k, R_{k+1} = 2 L_{k+1}
// seeded at (1, 2); satisfies the growth precondition by construction.
std::vector<std::pair<Int, Int>> generate_nonsyndetic_intervals(size_t count);

}  // namespace delta
