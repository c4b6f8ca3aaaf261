#pragma once

#include <string>
#include <vector>

#include "delta/rational.hpp"

namespace delta {

// Strictly increasing finite integer sequence (a truncated (n_k)).
struct FiniteSequence {
    std::vector<Int> elements;
    std::string source;

    FiniteSequence() = default;
    FiniteSequence(std::vector<Int> elems, std::string src = "");

    size_t size() const { return elements.size(); }
    const Int& operator[](size_t i) const { return elements[i]; }
};

// UTF-8 text, one decimal integer per line, '#' starts a comment line.
FiniteSequence load_sequence_file(const std::string& path);
void save_sequence_file(const FiniteSequence& s, const std::string& path);

// Deterministic pseudo-random test sequences ("mixed" growth interleaves
// lacunary jumps with polynomial steps; "lacunary" keeps ratio >= 3; "poly"
// uses quadratic-ish increments). The seed only shapes generated inputs,
// never any verdict computed from them.
FiniteSequence generate_test_sequence(const std::string& kind, size_t length,
                                      unsigned long seed);

}  // namespace delta
