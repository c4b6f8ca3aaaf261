#include "delta/cantor.hpp"

#include "delta/errors.hpp"

namespace delta {

BitWord::BitWord(std::vector<bool> b) : bits(std::move(b)) {
    if (bits.empty()) throw MalformedInput("bit word depth must be >= 1");
}

Int cantor_modulus(unsigned k) {
    if (k < 1) throw MalformedQuery("k must be >= 1");
    unsigned long e = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (e > (1ul << 40) / 6) throw BoundExceeded("6^k exponent out of desk range");
        e *= 6;
    }
    Int n(1);
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), e);
    return n;
}

namespace {

// 2^{-3 * 6^s} as an exact dyadic rational
Rat cube_inverse(unsigned s) {
    unsigned long e = 1;
    for (unsigned i = 0; i < s; ++i) e *= 6;
    Rat r(1);
    mpz_mul_2exp(r.get_den().get_mpz_t(), r.get_den().get_mpz_t(), 3 * e);
    r.canonicalize();
    return r;
}

}  // namespace

DyadicValue cantor_point(const BitWord& w) {
    DyadicValue out;
    out.value = 0;
    for (unsigned s = 1; s <= w.depth(); ++s)
        if (w(s)) out.value += cube_inverse(s);
    // tail: sum over s > d of 2^{-3*6^s} <= 2 * 2^{-3*6^{d+1}}
    out.tail = cube_inverse(w.depth() + 1) * 2;
    return out;
}

std::vector<LimitTableEntry> limit_table(const BitWord& w, unsigned k_min, unsigned k_max,
                                         const Int& M) {
    if (k_min < 1 || k_min > k_max) throw MalformedQuery("bad k range");
    DyadicValue f = cantor_point(w);
    std::vector<LimitTableEntry> out;
    for (unsigned k = k_min; k <= k_max; ++k) {
        LimitTableEntry e;
        e.k = k;
        Int nk = cantor_modulus(k);
        auto row = [&](const Int& scale, Interval& dst, bool& certified) {
            Interval scaled = f.enclosure() * Rat(scale);
            if (scaled.width() >= 1) {
                dst = Interval(Rat(0), Rat(1, 2));
                certified = false;
            } else {
                dst = dist_to_int_interval(scaled);
                certified = true;
            }
        };
        row(nk * nk * nk, e.cubic, e.cubic_certified);
        row(M * nk * nk, e.quadratic, e.quadratic_certified);
        row(M * nk, e.linear, e.linear_certified);
        out.push_back(std::move(e));
    }
    return out;
}

CharIntegral char_integral(const Int& m, unsigned depth, unsigned bits) {
    if (depth < 1) throw MalformedQuery("depth must be >= 1");
    CharIntegral out;
    out.finite_product = ComplexInterval{Interval(Rat(1)), Interval(Rat(0))};
    for (unsigned s = 1; s <= depth; ++s) {
        Rat x = Rat(m) * cube_inverse(s);
        ComplexInterval factor;
        if (x.get_den() == 1) {
            // integer phase: e^{2 pi i x} = 1 exactly
            factor = ComplexInterval{Interval(Rat(1)), Interval(Rat(0))};
        } else {
            factor = ComplexInterval{(cos2pi(x, bits) + Rat(1)) * Rat(1, 2),
                                     sin2pi(x, bits) * Rat(1, 2)};
        }
        out.finite_product = out.finite_product * factor;
    }
    // |prod_{s>d}(1+u_s) - 1| <= 2 sum|u_s| when sum|u_s| <= 1/2, with
    // |u_s| = |factor_s - 1| <= pi |m| 2^{-3*6^s}; bound pi by 22/7
    Rat abs_m = abs(Rat(m));
    Rat tail_sum = Rat(22, 7) * abs_m * cube_inverse(depth + 1) * 2;
    out.tail_radius = tail_sum <= Rat(1, 2) ? tail_sum * 2 : Rat(2);
    out.value = out.finite_product;
    out.value.widen(out.tail_radius);
    return out;
}

}  // namespace delta
