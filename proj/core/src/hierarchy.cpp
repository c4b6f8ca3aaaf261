#include "delta/hierarchy.hpp"

#include <algorithm>
#include <map>

#include "delta/diff.hpp"
#include "delta/errors.hpp"

namespace delta {

namespace {

Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace

SeparatorSet strict_inclusion_set(unsigned K) {
    if (K < 1) throw MalformedQuery("K must be >= 1");
    SeparatorSet out;
    out.name = "strict-inclusion";
    out.truncation = K;
    for (unsigned k = 1; k <= K; ++k) {
        Int base = factorial(2 * k);
        for (unsigned j = 1; j <= k; ++j) out.elements.push_back(base * Int(j));
    }
    // blocks are already ascending thanks to the gap property
    out.claimed_in = {"Delta_{l,0} for every l"};
    out.claimed_not_in = {"Delta_l for any l", "IP"};
    return out;
}

bool strict_inclusion_gap_check(unsigned K) {
    for (unsigned s = 1; s < K; ++s) {
        Int max_es = factorial(2 * s) * Int(s);
        Int min_next = factorial(2 * (s + 1));
        if (!(max_es < min_next - factorial(2 * s))) return false;
    }
    return true;
}

SeparatorSet powers_of_ten_set(unsigned K) {
    if (K < 1) throw MalformedQuery("K must be >= 1");
    SeparatorSet out;
    out.name = "powers-of-ten-differences";
    out.truncation = K;
    for (unsigned i = 0; i <= K; ++i) {
        for (unsigned j = i; j <= K; ++j) {
            // 9 * sum_{s=i}^{j} 10^s = 10^{j+1} - 10^i
            out.elements.push_back(pow_int(Int(10), j + 1) - pow_int(Int(10), i));
        }
    }
    std::sort(out.elements.begin(), out.elements.end());
    out.claimed_in = {"Delta"};
    out.claimed_not_in = {"IP_3"};
    return out;
}

LacunaryCheckReport lacunary_fs_check(const FiniteSequence& s, unsigned level, const Int& c_bound,
                                      size_t truncation) {
    if (level != 2)
        throw BoundExceeded(
            "generator length 2^{l-2}*14 makes levels above 2 infeasible; only l=2 supported");
    if (c_bound < 0) throw MalformedQuery("c_bound must be nonnegative");
    if (c_bound > 2000) throw BoundExceeded("c_bound above the feasible search range");
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i + 1] < 3 * s[i])
            throw MalformedInput("lacunarity ratio n_{k+1}/n_k >= 3 fails at position " +
                                 std::to_string(i + 1));
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] < 1) throw MalformedInput("sequence must be positive");

    LacunaryCheckReport rep;
    size_t keep = truncation == 0 ? s.size() : std::min(truncation, s.size());
    std::vector<Int> elems(s.elements.begin(), s.elements.begin() + keep);
    rep.truncated = FiniteSequence(elems, s.source);
    auto fs = fs_set(rep.truncated, unsigned(keep));
    rep.fs_size = fs.value_set.size();
    std::set<Int> E(fs.value_set.begin(), fs.value_set.end());
    rep.search = contains_diff_structure(E, 2, 14, c_bound);
    return rep;
}

FiniteSequence multiples_subsequence(const FiniteSequence& s, const Int& m, size_t target_len) {
    if (m < 1) throw MalformedQuery("modulus must be >= 1");
    if (target_len < 1) throw MalformedQuery("target length must be >= 1");
    std::map<Int, std::vector<Int>> classes;
    for (const Int& n : s.elements) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
        auto& cls = classes[r];
        if (cls.size() < target_len) cls.push_back(n);
    }
    const std::vector<Int>* best = nullptr;
    for (const auto& [r, cls] : classes) {
        if (cls.size() < target_len) continue;
        if (!best || std::lexicographical_compare(cls.begin(), cls.end(), best->begin(),
                                                  best->end()))
            best = &cls;
    }
    if (!best) throw NotEnoughElements("no residue class mod " + m.get_str() + " has " +
                                       std::to_string(target_len) + " members");
    return FiniteSequence(*best, s.source + " (residue class mod " + m.get_str() + ")");
}

Rat window_density(const std::set<Int>& E, const Int& M, const Int& N) {
    if (!(M < N)) throw MalformedQuery("window requires M < N");
    Int count(0);
    for (const Int& e : E)
        if (M < e && e <= N) ++count;
    return Rat(count) / Rat(N - M);
}

}  // namespace delta
