#pragma once

#include <set>
#include <string>

#include "delta/structure_search.hpp"

namespace delta {

// An explicit finite set witnessing a separation between set families, with
// the membership claims it is built to exhibit. The infinite claims are
// represented by bounded-search evidence plus the structural certificate
// (gap property, decimal-expansion argument) at truncation K.
struct SeparatorSet {
    std::string name;
    unsigned truncation = 0;
    std::vector<Int> elements;  // strictly increasing
    std::vector<std::string> claimed_in;
    std::vector<std::string> claimed_not_in;

    std::set<Int> as_set() const { return {elements.begin(), elements.end()}; }
};

// E = union over k <= K of E_k = {(2k)! * j : 1 <= j <= k}
SeparatorSet strict_inclusion_set(unsigned K);

// the gap mechanism: max E_s < min E_{s+1} - (2s)! for all s < K
bool strict_inclusion_gap_check(unsigned K);

// D = {9 * sum_{s=i}^{j} 10^s : 0 <= i <= j <= K} = {10^{j+1} - 10^i}
SeparatorSet powers_of_ten_set(unsigned K);

// Bounded refutation search for a 14-element generator with D_2 inside
// FS(s truncated): the lacunary obstruction at level 2 (generator length
// 2^{l-2} * 14 grows with l, so only l = 2 is desk-feasible).
struct LacunaryCheckReport {
    FiniteSequence truncated;
    size_t fs_size = 0;
    StructureSearchResult search;  // a found witness would be a bug
};

LacunaryCheckReport lacunary_fs_check(const FiniteSequence& s, unsigned level, const Int& c_bound,
                                      size_t truncation = 0);

// subsequence in one residue class mod m (all difference-set values are then
// multiples of m); among classes with enough members, the lexicographically
// least resulting subsequence wins
FiniteSequence multiples_subsequence(const FiniteSequence& s, const Int& m, size_t target_len);

// |E intersect [M+1, N]| / (N - M), exact
Rat window_density(const std::set<Int>& E, const Int& M, const Int& N);

}  // namespace delta
