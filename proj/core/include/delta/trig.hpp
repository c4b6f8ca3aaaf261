#pragma once

#include "delta/interval.hpp"

namespace delta {

// enclosure of pi with width <= 2^-bits (Machin arctan series, exact
// rationals, alternating-tail remainder)
Interval pi_enclosure(unsigned bits);

// enclosures of sin(2 pi x) / cos(2 pi x) for exact rational x, via argument
// reduction to [-1/2, 1/2] and Taylor sums with explicit remainder
Interval sin2pi(const Rat& x, unsigned bits);
Interval cos2pi(const Rat& x, unsigned bits);

struct ComplexInterval {
    Interval re, im;

    ComplexInterval operator*(const ComplexInterval& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexInterval operator+(const ComplexInterval& o) const { return {re + o.re, im + o.im}; }
    // scale both components
    ComplexInterval operator*(const Rat& v) const { return {re * v, im * v}; }
    void widen(const Rat& radius) {
        re = Interval(re.lo - radius, re.hi + radius);
        im = Interval(im.lo - radius, im.hi + radius);
    }
    // certified upper bound on |z - 1|^2
    Rat dist_to_one_sq_upper() const;
};

}  // namespace delta
