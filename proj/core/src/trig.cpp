#include "delta/trig.hpp"

#include <mutex>

#include "delta/errors.hpp"

namespace delta {

namespace {

// arctan(1/n) partial sum with alternating-series remainder
Interval arctan_inv(unsigned long n, unsigned bits) {
    Rat eps = pow2_inv(bits);
    Rat sum(0);
    Rat npow(1, n);  // (1/n)^{2k+1}
    Rat n2inv = Rat(1, n) * Rat(1, n);
    int sign = 1;
    unsigned long k = 0;
    while (true) {
        Rat term = npow / Rat(2 * k + 1);
        if (term <= eps) {
            // |remainder| <= first omitted term
            return Interval(sum - term, sum + term);
        }
        sum += sign > 0 ? term : Rat(-term);
        sign = -sign;
        npow *= n2inv;
        ++k;
        if (k > 8 * bits + 64) throw PrecisionExhausted("arctan series stalled");
    }
}

Interval pow_interval(const Interval& x, unsigned e) {
    Interval acc(Rat(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * x;
    return acc;
}

// round endpoints outward to denominators 2^bits; keeps the series sums in
// dyadic arithmetic instead of compounding the pi enclosure's denominators
Interval dyadicize(const Interval& iv, unsigned bits) {
    Rat lo = iv.lo, hi = iv.hi;
    mpz_mul_2exp(lo.get_num().get_mpz_t(), lo.get_num().get_mpz_t(), bits);
    lo.canonicalize();
    Int flo = floor_int(lo);
    mpz_mul_2exp(hi.get_num().get_mpz_t(), hi.get_num().get_mpz_t(), bits);
    hi.canonicalize();
    Int fhi = floor_int(hi) + 1;
    Rat scale = pow2_inv(bits);
    return Interval(Rat(flo) * scale, Rat(fhi) * scale);
}

}  // namespace

Interval pi_enclosure(unsigned bits) {
    struct Cache {
        std::mutex mu;
        unsigned bits = 0;
        Interval value;
    };
    static Cache cache;
    std::lock_guard<std::mutex> lock(cache.mu);
    if (cache.bits >= bits) return cache.value;
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    Interval a = arctan_inv(5, bits + 8);
    Interval b = arctan_inv(239, bits + 8);
    Interval pi = a * Rat(16) - b * Rat(4);
    cache.bits = bits;
    cache.value = pi;
    return pi;
}

namespace {

// Taylor sums for sin(y)/cos(y) with y = 2 pi xr, |xr| <= 1/2 so |y| <= pi.
// Terms alternate with decreasing magnitude from k = 1 on, so the remainder
// is bounded by the first omitted term evaluated at |y| <= pi < 2^2.
Interval sincos_series(const Rat& xr, unsigned bits, bool want_sin) {
    Interval two_pi = dyadicize(pi_enclosure(bits + 16) * Rat(2), bits + 16);
    Rat eps = pow2_inv(bits + 2);
    Interval sum(Rat(0));
    // term_k = (-1)^k y^{p_k} / p_k!  with p_k = 2k+1 (sin) or 2k (cos)
    Int fact(1);
    unsigned k = 0;
    while (true) {
        unsigned p = want_sin ? 2 * k + 1 : 2 * k;
        // p! incrementally
        if (k > 0) {
            fact *= Int(p - 1);
            fact *= Int(p);
        }
        // |y|^p <= 4^p bound for the stopping rule; exact interval for the sum
        Rat xq = pow_rat(xr, p);
        Interval ypow = pow_interval(two_pi, p) * xq;
        Interval term = ypow * Rat(Int(1), fact);
        Rat term_mag = std::max(abs(term.lo), abs(term.hi));
        if (k >= 2 && term_mag <= eps) {
            // remainder bounded by the first omitted term's magnitude
            sum += Interval(-term_mag, term_mag);
            return sum;
        }
        sum += (k % 2 == 0) ? term : -term;
        ++k;
        if (k > 4 * bits + 64) throw PrecisionExhausted("trig series stalled");
    }
}

}  // namespace

Interval sin2pi(const Rat& x, unsigned bits) {
    // reduce to xr in [-1/2, 1/2]
    Rat xr = frac(x);
    if (xr > Rat(1, 2)) xr -= 1;
    return sincos_series(xr, bits, true);
}

Interval cos2pi(const Rat& x, unsigned bits) {
    Rat xr = frac(x);
    if (xr > Rat(1, 2)) xr -= 1;
    return sincos_series(xr, bits, false);
}

Rat ComplexInterval::dist_to_one_sq_upper() const {
    Rat dre = std::max(abs(re.lo - 1), abs(re.hi - 1));
    Rat dim = std::max(abs(im.lo), abs(im.hi));
    return dre * dre + dim * dim;
}

}  // namespace delta
