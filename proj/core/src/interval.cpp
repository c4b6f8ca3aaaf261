#include "delta/interval.hpp"

#include <algorithm>

#include "delta/errors.hpp"

namespace delta {

Interval::Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw MalformedInput("interval endpoints out of order");
}

Interval Interval::centered(const Rat& center, const Rat& radius) {
    if (radius < 0) throw MalformedInput("negative interval radius");
    return Interval(center - radius, center + radius);
}

Interval Interval::operator-() const { return Interval(-hi, -lo); }

Interval Interval::operator+(const Interval& o) const { return Interval(lo + o.lo, hi + o.hi); }

Interval Interval::operator-(const Interval& o) const { return Interval(lo - o.hi, hi - o.lo); }

Interval Interval::operator*(const Interval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return Interval(std::min({a, b, c, d}), std::max({a, b, c, d}));
}

Interval Interval::operator*(const Rat& v) const {
    if (v >= 0) return Interval(lo * v, hi * v);
    return Interval(hi * v, lo * v);
}

Interval operator*(const Rat& v, const Interval& iv) { return iv * v; }

Interval dist_to_int_interval(const Interval& iv) {
    if (iv.width() >= 1) return Interval(Rat(0), Rat(1, 2));
    // Shift so the interval sits near the origin; ||.|| is 1-periodic.
    Int k = round_int(iv.center());
    Rat a = iv.lo - Rat(k), b = iv.hi - Rat(k);  // b - a < 1, interval near 0
    Rat da = dist_to_int(a), db = dist_to_int(b);
    Rat lo = std::min(da, db), hi = std::max(da, db);
    // Interior extrema: an integer inside forces min 0, a half-integer forces
    // max 1/2. With width < 1 only the points in {-1/2, 0, 1/2} can be inside.
    if (a <= 0 && 0 <= b) lo = 0;
    if ((a <= Rat(1, 2) && Rat(1, 2) <= b) || (a <= Rat(-1, 2) && Rat(-1, 2) <= b)) hi = Rat(1, 2);
    return Interval(lo, hi);
}

Interval frac_interval(const Interval& iv) {
    Int fa = floor_int(iv.lo);
    Int fb = floor_int(iv.hi);
    if (fa != fb) {
        if (fb == fa + 1 && iv.hi == Rat(fb)) {
            // right endpoint exactly on the next integer: image is [frac(lo), 1]
            return Interval(iv.lo - Rat(fa), Rat(1));
        }
        return Interval(Rat(0), Rat(1));
    }
    return Interval(iv.lo - Rat(fa), iv.hi - Rat(fa));
}

}  // namespace delta
