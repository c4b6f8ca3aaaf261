#pragma once

#include <functional>
#include <span>
#include <vector>

#include "delta/sequence.hpp"

namespace delta {

// Strictly increasing tuple of 2^level positions into a sequence (1-based).
struct IndexTuple {
    unsigned level = 1;
    std::vector<size_t> indices;

    IndexTuple() = default;
    IndexTuple(unsigned lvl, std::vector<size_t> idx);
};

// The iterated difference operator: base case d(a,b) = b - a, and at each
// level the difference of the two half-tuple values. Defined on all of
// Z^(2^l); the tuple need not be increasing.
Int iterated_diff(std::span<const Int> values);
Int iterated_diff(const std::vector<Int>& values);

// d applied to the sequence values at the tuple's positions
Int iterated_diff_at(const FiniteSequence& s, const IndexTuple& t);

unsigned tuple_level(size_t len);  // log2(len), throws MalformedTuple unless len = 2^l >= 2

// The l-th differences set D_l generated by a sequence. `values` holds one
// entry per increasing index tuple, in lexicographic tuple order.
struct DiffStructure {
    FiniteSequence generator;
    unsigned level = 1;
    bool positive_only = false;
    std::vector<Int> values;      // multiset, tuple order (filtered when positive_only)
    std::vector<Int> value_set;   // sorted, deduplicated
};

DiffStructure diff_set(const FiniteSequence& s, unsigned level, bool positive_only = false);

// Finite sums FS((n_k)_{k=1..r}): all sums over nonempty subsets.
struct FSStructure {
    FiniteSequence generator;
    unsigned count = 0;          // r
    std::vector<Int> values;     // multiset, 2^r - 1 entries, subset-mask order
    std::vector<Int> value_set;  // sorted, deduplicated
};

FSStructure fs_set(const FiniteSequence& s, unsigned r);

// s_k = n_1 + ... + n_k; D_1(partial_sums(s)) is contained in FS(s)
FiniteSequence partial_sums(const FiniteSequence& s);

// Visit every strictly increasing index combination of length k over [0, n),
// in lexicographic order. f gets the 0-based index vector.
void for_each_combination(size_t n, size_t k, const std::function<bool(const std::vector<size_t>&)>& f);

}  // namespace delta
