#pragma once

#include <array>
#include <map>
#include <optional>

#include "delta/witness.hpp"

namespace delta {

// Total coloring of the k-subsets of [1..ground] with colors 1..M.
struct Coloring {
    unsigned ground = 0;
    unsigned arity = 2;
    std::map<std::vector<unsigned>, unsigned> colors;

    unsigned color_of(const std::vector<unsigned>& subset) const;  // sorted subset
    unsigned color_count() const;
    void validate_total() const;  // every k-subset present
};

// Certified upper bound on R(level, M, r): any M-coloring of the
// 2^level-subsets of [1..bound] admits a monochromatic r-set. Uses the
// greedy cone recursion  R_k <= m + M^C(m, k)  with  m = R_{k-1}(r-1) + 1,
// pigeonhole at arity 1. Values explode quickly; a bit-size guard throws
// BoundExceeded instead of allocating astronomically.
Int ramsey_upper_bound(unsigned level, const Int& colors, unsigned r,
                       unsigned long max_bits = 1u << 24);

// Lex-least r-subset of the ground set all of whose arity-subsets share one
// color; exact exhaustive search at desk scale.
std::optional<std::vector<unsigned>> monochromatic_search(const Coloring& c, unsigned r);

struct CellIndex {
    long k1 = 0, k2 = 0, k3 = 0;
    bool operator==(const CellIndex&) const = default;
};

// The cell [k_i/N, (k_i+1)/N) of a point of T^3; nullopt when a coordinate
// straddles a cell boundary at the precision cap.
std::optional<CellIndex> cube_cell(const std::array<RealValue, 3>& point, unsigned N,
                                   const PrecisionPolicy& policy = {});

enum class PipelineStatus { Ok, Incomplete };

// The finitary cubic pipeline: color quadruples (j1<j2<j3<j4) of the sequence
// by the torus cell of
//   ( (n_{j2}-n_{j1})^3 a,  n_{j3} (n_{j2}-n_{j1})^2 a,  (n_{j3}-n_{j2})^2 n_{j1} a ),
// find a monochromatic 6-set t1<...<t6, and certify the three intermediate
// inequalities and the final bound ||d^3 a|| < eps for the extracted
// quadruple (t1,t2,t3,t4).
struct PipelineReport {
    PipelineStatus status = PipelineStatus::Incomplete;
    unsigned N = 1;
    Int quadruples_colored{0};
    std::vector<unsigned> mono_set;  // t1..t6 (1-based)
    Mod1Bound cube_diff_bound;       // ||((n4-n3)^3 - (n2-n1)^3) a|| < 1/N
    Mod1Bound mixed_bound_1;         // ||3 (n4-n3)(n2-n1)^2 a|| < 3/N
    Mod1Bound mixed_bound_2;         // ||3 (n4-n3)^2 (n2-n1) a|| < 3/N
    WitnessReport witness;           // final quadruple and ||d^3 a|| bound
};

PipelineReport finitistic_cubic_pipeline(const RealValue& alpha, const Rat& eps,
                                         const FiniteSequence& s,
                                         const PrecisionPolicy& policy = {});

}  // namespace delta
