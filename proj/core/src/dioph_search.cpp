#include "delta/dioph_search.hpp"

#include <algorithm>

#include "delta/errors.hpp"

namespace delta {

namespace {

constexpr unsigned kScaleBits = 128;

Int scale_shift(const Int& x) {
    Int r;
    mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), kScaleBits);
    return r;
}

// Integer brackets of the condition constants at scale S = 2^128; the scan
// classifies almost every candidate with pure mpz arithmetic. PASS and FAIL
// are certified; anything uncertain falls through to the exact path.
struct ScaledCondition {
    Int cl, ch;    // coeff * S in [cl, ch]
    Int tl, th;    // target * S in [tl, th]
    Int delta_ns;  // delta_num * S
    Int delta_d;   // delta_den

    enum class Quick { Pass, Fail, Ambiguous };

    Quick classify(const Int& npow) const {
        Int a = npow * cl, b = npow * ch;
        if (a > b) std::swap(a, b);
        Int vlo = a - th, vhi = b - tl;
        static const Int S = scale_shift(Int(1));
        Int width = vhi - vlo;
        if (width >= S) return Quick::Ambiguous;
        // reduce to r in [0, S); the value set is [r, r + width], possibly
        // wrapping past S but staying below 2S
        Int r;
        mpz_fdiv_r_2exp(r.get_mpz_t(), vlo.get_mpz_t(), kScaleBits);
        Int e = r + width;
        auto d = [&](const Int& x) {  // distance of x in [0, 2S) to {0, S, 2S}
            Int xr = x >= S ? Int(x - S) : x;
            return std::min(xr, Int(S - xr));
        };
        Int dmin, dmax;
        if (r == 0 || e >= S) {
            dmin = 0;
        } else {
            dmin = std::min(d(r), d(e));
        }
        dmax = std::max(d(r), d(e));
        Int half = S / 2;
        if (r <= half && half <= e) dmax = half;
        Int half3 = half + S;
        if (r <= half3 && half3 <= e) dmax = half;
        // dist < delta  iff  dist*S*den < num*S
        if (dmax * delta_d < delta_ns) return Quick::Pass;
        if (dmin * delta_d >= delta_ns) return Quick::Fail;
        return Quick::Ambiguous;
    }
};

ScaledCondition scale_condition(const SimulCondition& c) {
    ScaledCondition s;
    Interval ci = c.coeff.is_refinable() ? c.coeff.enclosure(kScaleBits + 64)
                                         : c.coeff.enclosure(0);
    Interval ti = c.target.is_refinable() ? c.target.enclosure(kScaleBits + 64)
                                          : c.target.enclosure(0);
    auto lo_of = [](const Rat& x) {
        Rat y = x;
        mpz_mul_2exp(y.get_num().get_mpz_t(), y.get_num().get_mpz_t(), kScaleBits);
        y.canonicalize();
        return floor_int(y);
    };
    s.cl = lo_of(ci.lo);
    s.ch = lo_of(ci.hi) + 1;
    s.tl = lo_of(ti.lo);
    s.th = lo_of(ti.hi) + 1;
    s.delta_ns = scale_shift(Int(c.delta.get_num()));
    s.delta_d = c.delta.get_den();
    return s;
}

void validate(const std::vector<SimulCondition>& conditions) {
    for (const auto& c : conditions) {
        if (c.delta <= 0) throw MalformedQuery("condition tolerance must be positive");
        if (c.power < 1) throw MalformedQuery("condition power must be >= 1");
    }
}

template <typename NextFn>
SimulResult scan(const std::vector<SimulCondition>& conditions, NextFn&& next,
                 const PrecisionPolicy& policy) {
    SimulResult res;
    std::vector<ScaledCondition> scaled;
    scaled.reserve(conditions.size());
    for (const auto& c : conditions) scaled.push_back(scale_condition(c));

    Int n;
    while (next(n)) {
        ++res.stats.candidates_examined;
        bool all_in = true;
        bool unknown = false;
        for (size_t i = 0; i < conditions.size(); ++i) {
            Int npow = pow_int(n, conditions[i].power);
            auto q = scaled[i].classify(npow);
            if (q == ScaledCondition::Quick::Pass) continue;
            if (q == ScaledCondition::Quick::Fail) {
                all_in = false;
                break;
            }
            Mod1Bound b = check_condition(conditions[i], n, policy);
            if (b.verdict == Verdict::In) continue;
            all_in = false;
            if (b.verdict == Verdict::Unknown) unknown = true;
            break;
        }
        if (unknown) {
            ++res.stats.skipped_unknown;
            if (res.stats.unknown_candidates.size() < 16) res.stats.unknown_candidates.push_back(n);
            continue;
        }
        if (all_in) {
            res.n = n;
            return res;
        }
    }
    return res;
}

}  // namespace

Mod1Bound check_condition(const SimulCondition& c, const Int& n, const PrecisionPolicy& policy) {
    if (c.delta <= 0) throw MalformedQuery("condition tolerance must be positive");
    Int npow = pow_int(n, c.power);
    if (c.coeff.is_exact() && c.target.is_exact()) {
        Rat val = c.coeff.exact_value() * Rat(npow) - c.target.exact_value();
        Mod1Bound b;
        b.eps = c.delta;
        b.value = Interval(dist_to_int(val));
        b.verdict = b.value.hi < c.delta ? Verdict::In : Verdict::Out;
        return b;
    }
    Mod1Bound b;
    for (unsigned bits = policy.start_bits;; bits *= 2) {
        unsigned pad = mpz_sizeinbase(npow.get_mpz_t(), 2) + 4;
        Interval v = c.coeff.enclosure(bits + pad) * Rat(npow);
        Interval t = c.target.is_refinable() ? c.target.enclosure(bits) : c.target.enclosure(0);
        b = dist_mod1_shifted(v, t, c.delta);
        b.bits_used = bits;
        bool refinable = c.coeff.is_refinable() || c.target.is_refinable();
        if (b.verdict != Verdict::Unknown || bits >= policy.cap_bits || !refinable) return b;
    }
}

SimulResult simultaneous_search_over(const std::vector<SimulCondition>& conditions,
                                     const std::vector<Int>& candidates,
                                     const PrecisionPolicy& policy) {
    validate(conditions);
    SimulResult res;
    if (conditions.empty()) {
        if (!candidates.empty()) res.n = candidates.front();
        return res;
    }
    size_t idx = 0;
    return scan(
        conditions,
        [&](Int& n) {
            if (idx >= candidates.size()) return false;
            n = candidates[idx++];
            return true;
        },
        policy);
}

SimulResult simultaneous_search(const std::vector<SimulCondition>& conditions, const Int& n_min,
                                const Int& n_max, const PrecisionPolicy& policy) {
    if (n_min > n_max) throw MalformedQuery("n_min must not exceed n_max");
    validate(conditions);
    SimulResult res;
    if (conditions.empty()) {
        res.n = n_min;
        return res;
    }
    Int cur = n_min;
    bool first = true;
    return scan(
        conditions,
        [&](Int& n) {
            if (!first) ++cur;
            first = false;
            if (cur > n_max) return false;
            n = cur;
            return true;
        },
        policy);
}

}  // namespace delta
