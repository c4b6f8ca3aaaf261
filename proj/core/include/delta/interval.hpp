#pragma once

#include "delta/rational.hpp"

namespace delta {

// Closed interval with exact rational endpoints. All operations return
// enclosures of the exact image, so anything derived from an Interval is a
// certified bound, never an estimate.
struct Interval {
    Rat lo, hi;

    Interval() : lo(0), hi(0) {}
    explicit Interval(const Rat& v) : lo(v), hi(v) {}
    Interval(Rat l, Rat h);

    static Interval centered(const Rat& center, const Rat& radius);

    Rat width() const { return hi - lo; }
    Rat center() const { return (lo + hi) / 2; }
    Rat radius() const { return (hi - lo) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

    Interval operator-() const;
    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator+(const Rat& v) const { return *this + Interval(v); }
    Interval operator-(const Rat& v) const { return *this - Interval(v); }
    Interval operator*(const Rat& v) const;

    Interval& operator+=(const Interval& o) { return *this = *this + o; }
};

Interval operator*(const Rat& v, const Interval& iv);

// Enclosure of { ||x|| : x in iv }, a subset of [0, 1/2].
Interval dist_to_int_interval(const Interval& iv);

// Enclosure of the fractional parts { x mod 1 : x in iv } as an interval in
// [0, 1]; if iv spans an integer the result is the full [0, 1].
Interval frac_interval(const Interval& iv);

}  // namespace delta
