#pragma once

#include <vector>

#include "delta/interval.hpp"
#include "delta/trig.hpp"

namespace delta {

// finite truncation w(1..d) of a point of {0,1}^N
struct BitWord {
    std::vector<bool> bits;

    BitWord() = default;
    explicit BitWord(std::vector<bool> b);
    unsigned depth() const { return unsigned(bits.size()); }
    bool operator()(unsigned s) const { return bits.at(s - 1); }  // 1-based
};

// n_k = 2^{6^k}
Int cantor_modulus(unsigned k);

// Exact dyadic truncation of F(w) = sum_s w(s) / n_s^3 with a certified
// one-sided tail: the full value lies in [value, value + tail].
struct DyadicValue {
    Rat value;
    Rat tail;

    Interval enclosure() const { return Interval(value, value + tail); }
};

DyadicValue cantor_point(const BitWord& w);

// Certified rows ||n_k^3 F||, ||M n_k^2 F||, ||M n_k F|| for k in
// [k_min, k_max]. An entry whose scaled tail swamps the unit interval is
// flagged not-certified (the trivial [0,1/2] bound).
struct LimitTableEntry {
    unsigned k = 1;
    Interval cubic, quadratic, linear;
    bool cubic_certified = false, quadratic_certified = false, linear_certified = false;
};

std::vector<LimitTableEntry> limit_table(const BitWord& w, unsigned k_min, unsigned k_max,
                                         const Int& M);

// The character integral over the product measure: product over s <= depth of
// (1 + e^{2 pi i m / n_s^3}) / 2, with a certified tail widening
// |factor_s - 1| <= pi |m| 2^{-3*6^s} for the omitted s > depth.
struct CharIntegral {
    ComplexInterval finite_product;  // the computed factors only
    Rat tail_radius;                 // certified |full - finite| bound
    ComplexInterval value;           // finite product widened by the tail
};

CharIntegral char_integral(const Int& m, unsigned depth, unsigned bits = 192);

}  // namespace delta
