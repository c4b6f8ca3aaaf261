#include <doctest.h>

#include <random>

#include "delta/errors.hpp"
#include "delta/witness.hpp"

using namespace delta;

namespace {
std::vector<Int> ints(std::initializer_list<long> v) {
    std::vector<Int> out;
    for (long x : v) out.emplace_back(x);
    return out;
}
}  // namespace

TEST_CASE("rational cubic witness on (1,2,3)") {
    // v = x^3/2, pairs in lex order: (1,2) -> d=1, ||1/2|| = 1/2 miss;
    // (1,3) -> d=2, v(2)=4, ||4|| = 0 hit
    FiniteSequence s(ints({1, 2, 3}), "example");
    auto rep = find_delta_witness(s, parse_poly("x^3/2"), Rat(1, 10), 1);
    REQUIRE(rep.found);
    CHECK(rep.indices.indices == std::vector<size_t>{1, 3});
    CHECK(rep.diff_value == 2);
    CHECK(rep.bound.value.hi == 0);
    CHECK(verify_witness(s, parse_poly("x^3/2"), Rat(1, 10), rep, PrecisionPolicy{256, 8192}));
}

TEST_CASE("too short sequence") {
    FiniteSequence s(ints({1, 5, 9}));
    CHECK_THROWS_AS(find_delta_witness(s, parse_poly("sqrt2*x^3"), Rat(1, 4), 2), TooShort);
}

TEST_CASE("level-2 witness on powers of three vs brute force") {
    std::vector<Int> elems;
    Int p(1);
    for (int k = 1; k <= 20; ++k) {
        p *= 3;
        elems.push_back(p);
    }
    FiniteSequence s(elems, "3^k");
    PolySpec v = parse_poly("sqrt2*x^3");
    Rat eps(1, 4);
    auto rep = find_delta_witness(s, v, eps, 2);
    REQUIRE(rep.found);

    // oracle: exhaustive scan over all quadruples at fixed 256-bit precision,
    // recording the lex-least In tuple
    PrecisionPolicy oracle_policy{256, 4096};
    std::optional<std::vector<size_t>> least;
    std::vector<Int> vals(4);
    for_each_combination(s.size(), 4, [&](const std::vector<size_t>& c) {
        for (size_t i = 0; i < 4; ++i) vals[i] = s[c[i]];
        Int d = iterated_diff(vals);
        if (d < 1) return true;
        if (poly_eval_mod1(v, d, eps, oracle_policy).verdict == Verdict::In) {
            least = c;
            return false;
        }
        return true;
    });
    REQUIRE(least.has_value());
    std::vector<size_t> expect;
    for (size_t i : *least) expect.push_back(i + 1);
    CHECK(rep.indices.indices == expect);
    CHECK(verify_witness(s, v, eps, rep, PrecisionPolicy{512, 16384}));
}

TEST_CASE("rational recurrence: b+1 elements always give an exact-zero witness") {
    // Lemma mechanism: among b+1 integers two are congruent mod b, so some
    // pair difference d has b | d and v(d) = d^3/b is an integer.
    std::mt19937_64 rng(1212);
    for (int b = 1; b <= 12; ++b) {
        PolySpec v = parse_poly("x^3/" + std::to_string(b));
        Rat eps(1, 2 * b + 2);  // strictly below 1/b: In means exactly zero
        for (int rep_i = 0; rep_i < 200; ++rep_i) {
            std::vector<Int> elems;
            long cur = long(rng() % 50);
            for (int i = 0; i <= b; ++i) {
                cur += 1 + long(rng() % 40);
                elems.emplace_back(cur);
            }
            FiniteSequence s(elems);
            auto rep = find_delta_witness(s, v, eps, 1);
            REQUIRE(rep.found);
            CHECK(rep.bound.value.hi == 0);
        }
    }
}

TEST_CASE("monotonicity in eps") {
    std::mt19937_64 rng(31);
    PolySpec v = parse_poly("sqrt2*x^3");
    for (int rep_i = 0; rep_i < 20; ++rep_i) {
        std::vector<Int> elems;
        long cur = 1 + long(rng() % 5);
        for (int i = 0; i < 8; ++i) {
            elems.emplace_back(cur);
            cur += 1 + long(rng() % 30);
        }
        FiniteSequence s(elems);
        auto small = find_delta_witness(s, v, Rat(1, 10), 1);
        auto big = find_delta_witness(s, v, Rat(1, 3), 1);
        if (small.found) CHECK(big.found);
    }
}

TEST_CASE("nonpositive differences never witness") {
    // at level 2 the tuple (1,2,3,4) of an AP has d = 0; eps-close to zero
    // values must come from genuinely positive differences
    FiniteSequence s(ints({10, 20, 30, 40}));
    auto rep = find_delta_witness(s, parse_poly("x^3"), Rat(1, 2), 2);
    // (40-30)-(20-10) = 0, the only quadruple; no witness in N
    CHECK_FALSE(rep.found);
}

TEST_CASE("sarkozy search examples") {
    SUBCASE("E = {1,2}, v = x^3, N = 10") {
        std::set<Int> E{Int(1), Int(2)};
        auto rep = sarkozy_search(E, Int(10), parse_poly("x^3"));
        REQUIRE(rep.hits.size() == 1);
        CHECK(rep.hits[0] == 1);
        CHECK(rep.hit_density == Rat(1, 10));
    }
    SUBCASE("E = {1,9,28} contains 3 via 27 = 28 - 1") {
        std::set<Int> E{Int(1), Int(9), Int(28)};
        auto rep = sarkozy_search(E, Int(30), parse_poly("x^3"));
        bool has3 = false;
        for (const Int& n : rep.hits) has3 |= (n == 3);
        CHECK(has3);
    }
    SUBCASE("empty E") {
        auto rep = sarkozy_search({}, Int(10), parse_poly("x^3"));
        CHECK(rep.hits.empty());
        CHECK(rep.hit_density == 0);
    }
    SUBCASE("non-integer-valued polynomial rejected") {
        std::set<Int> E{Int(1)};
        CHECK_THROWS_AS(sarkozy_search(E, Int(10), parse_poly("x^3/2")), MalformedInput);
        CHECK_THROWS_AS(sarkozy_search(E, Int(10), parse_poly("sqrt2*x")), MalformedInput);
    }
    SUBCASE("integer-valued with rational coefficients accepted") {
        // x(x+1)/2 is integer-valued
        std::set<Int> E{Int(1), Int(4)};
        auto rep = sarkozy_search(E, Int(5), parse_poly("x^2/2 + x/2"));
        REQUIRE(rep.hits.size() == 1);
        CHECK(rep.hits[0] == 2);  // v(2) = 3 = 4 - 1
    }
}
