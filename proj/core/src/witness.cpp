#include "delta/witness.hpp"

#include "delta/errors.hpp"

namespace delta {

WitnessReport find_delta_witness(const FiniteSequence& s, const PolySpec& v, const Rat& eps,
                                 unsigned level, const PrecisionPolicy& policy) {
    if (eps <= 0 || eps > Rat(1, 2)) throw MalformedQuery("eps must lie in (0, 1/2]");
    if (level < 1) throw MalformedQuery("level must be >= 1");
    size_t k = size_t(1) << level;
    if (s.size() < k) throw TooShort("sequence shorter than 2^level");

    WitnessReport rep;
    rep.sequence_id = s.source;
    rep.bound.eps = eps;

    // many tuples share a difference value; cache verdicts per value
    std::map<Int, Mod1Bound> cache;
    std::vector<Int> vals(k);
    for_each_combination(s.size(), k, [&](const std::vector<size_t>& c) {
        ++rep.tuples_examined;
        for (size_t i = 0; i < k; ++i) vals[i] = s[c[i]];
        Int d = iterated_diff(vals);
        if (d < 1) return true;  // witnesses live in N
        auto it = cache.find(d);
        if (it == cache.end()) {
            it = cache.emplace(d, poly_eval_mod1(v, d, eps, policy)).first;
            if (it->second.verdict == Verdict::Unknown) ++rep.unknown_diffs;
        }
        if (it->second.verdict == Verdict::In) {
            std::vector<size_t> positions;
            positions.reserve(k);
            for (size_t i : c) positions.push_back(i + 1);
            rep.found = true;
            rep.indices = IndexTuple(level, positions);
            rep.diff_value = d;
            rep.bound = it->second;
            return false;  // lex order: first hit is the lex-least tuple
        }
        return true;
    });
    rep.distinct_diffs = Int(cache.size());

    if (!rep.found && v.is_odd() && !v.empty() && v.degree() <= 2 * level - 1) {
        // heuristic largeness threshold: the theorem guarantees success for
        // infinite sequences; a long sequence that misses usually means a bug
        Rat needed = Rat(Int(k)) * (2 / eps);
        if (Rat(Int(s.size())) >= needed) rep.suspected_implementation_error = true;
    }
    return rep;
}

bool verify_witness(const FiniteSequence& s, const PolySpec& v, const Rat& eps,
                    const WitnessReport& report, const PrecisionPolicy& policy) {
    if (!report.found) return false;
    Int d = iterated_diff_at(s, report.indices);
    if (d != report.diff_value) return false;
    if (d < 1) return false;
    Mod1Bound again = poly_eval_mod1(v, d, eps, policy);
    if (again.verdict != Verdict::In) return false;
    // the enclosures must be consistent: both contain the true value
    return !(again.value.lo > report.bound.value.hi) &&
           !(again.value.hi < report.bound.value.lo);
}

SarkozyReport sarkozy_search(const std::set<Int>& E, const Int& N, const PolySpec& v) {
    if (N < 1) throw MalformedQuery("N must be >= 1");
    if (!v.all_rational() || !is_integer_valued(v))
        throw MalformedInput("polynomial is not integer-valued on Z");
    for (const Int& e : E)
        if (e < 1 || e > N) throw MalformedInput("E must lie inside [1, N]");

    SarkozyReport rep;
    std::set<Int> diffs;
    for (const Int& a : E)
        for (const Int& b : E)
            if (a > b) diffs.insert(a - b);
    rep.difference_count = Int(diffs.size());
    for (Int n(1); n <= N; ++n) {
        Rat val = v.eval_exact(n);
        if (val.get_den() != 1) continue;  // cannot happen for integer-valued v
        Int iv(val.get_num());
        if (diffs.count(iv)) rep.hits.push_back(n);
    }
    rep.hit_density = Rat(Int(rep.hits.size())) / Rat(N);
    rep.input_density = Rat(Int(E.size())) / Rat(N);
    return rep;
}

}  // namespace delta
