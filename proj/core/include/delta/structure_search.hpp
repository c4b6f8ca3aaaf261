#pragma once

#include <optional>
#include <set>
#include <vector>

#include "delta/diff.hpp"

namespace delta {

// A miss is NotFoundWithinBound: evidence at the stated bound only, never a
// disproof of membership in the infinite family.
struct StructureSearchResult {
    std::optional<FiniteSequence> witness;  // lex-least generator when found
    Int candidates_examined{0};
    Int bound{0};

    bool found() const { return witness.has_value(); }
};

// Lex-least strictly increasing r-element integer sequence, all elements in
// [-bound, bound], whose full l-th difference set lies inside E (so every
// tuple value is positive, E being a set of naturals). Requires r >= 2^l.
StructureSearchResult contains_diff_structure(const std::set<Int>& E, unsigned level, unsigned r,
                                              const Int& bound);

// Lex-least r-element generator in N (elements <= bound) with FS inside E.
StructureSearchResult contains_fs_structure(const std::set<Int>& E, unsigned r, const Int& bound);

}  // namespace delta
