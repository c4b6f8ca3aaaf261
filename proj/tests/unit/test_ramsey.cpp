#include <doctest.h>

#include "delta/errors.hpp"
#include "delta/ramsey.hpp"

using namespace delta;

namespace {

Coloring pair_coloring(unsigned ground, const std::function<unsigned(unsigned, unsigned)>& f) {
    Coloring c;
    c.ground = ground;
    c.arity = 2;
    for (unsigned i = 1; i <= ground; ++i)
        for (unsigned j = i + 1; j <= ground; ++j) c.colors[{i, j}] = f(i, j);
    return c;
}

// the classical extremal 2-coloring of pairs of [5]: color by whether the
// cyclic distance is 1 or 2; no monochromatic triangle
Coloring five_cycle() {
    return pair_coloring(5, [](unsigned i, unsigned j) {
        unsigned d = j - i;
        unsigned cyc = std::min(d, 5 - d);
        return cyc == 1 ? 1u : 2u;
    });
}

}  // namespace

TEST_CASE("ramsey upper bound basics") {
    CHECK(ramsey_upper_bound(1, Int(1), 7) == 7);   // one color
    CHECK(ramsey_upper_bound(1, Int(2), 2) == 2);   // r = 2^level
    CHECK(ramsey_upper_bound(2, Int(5), 4) == 4);   // r = 2^level
    CHECK(ramsey_upper_bound(3, Int(1), 11) == 11);
    // pigeonhole behavior via the recursion: arity-2, 2 colors, target 3
    Int b = ramsey_upper_bound(1, Int(2), 3);
    CHECK(b >= 6);  // R(3,3) = 6, so any certified bound is at least 6
}

TEST_CASE("ramsey upper bound monotonicity") {
    for (unsigned r = 3; r <= 6; ++r)
        CHECK(ramsey_upper_bound(1, Int(2), r) < ramsey_upper_bound(1, Int(2), r + 1));
    CHECK(ramsey_upper_bound(1, Int(2), 4) <= ramsey_upper_bound(1, Int(3), 4));
    CHECK(ramsey_upper_bound(1, Int(3), 4) <= ramsey_upper_bound(1, Int(4), 4));
}

TEST_CASE("ramsey upper bound argument validation and size guard") {
    CHECK_THROWS_AS(ramsey_upper_bound(1, Int(2), 1), MalformedQuery);
    CHECK_THROWS_AS(ramsey_upper_bound(1, Int(0), 3), MalformedQuery);
    CHECK_THROWS_AS(ramsey_upper_bound(0, Int(2), 3), MalformedQuery);
    // the arity-4 pipeline-scale bound blows past any representable size
    CHECK_THROWS_AS(ramsey_upper_bound(2, Int(729), 6), BoundExceeded);
}

TEST_CASE("monochromatic search: single color takes the whole ground set") {
    auto c = pair_coloring(6, [](unsigned, unsigned) { return 1u; });
    auto d = monochromatic_search(c, 6);
    REQUIRE(d.has_value());
    CHECK(*d == std::vector<unsigned>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("monochromatic search: extremal 5-cycle has no mono triangle") {
    auto d = monochromatic_search(five_cycle(), 3);
    CHECK_FALSE(d.has_value());
}

TEST_CASE("every 2-coloring of pairs of [6] has a mono triangle (R(3,3)=6)") {
    // exhaustive over all 2^15 colorings; verify each result independently
    for (unsigned mask = 0; mask < (1u << 15); ++mask) {
        unsigned bit = 0;
        Coloring c;
        c.ground = 6;
        c.arity = 2;
        for (unsigned i = 1; i <= 6; ++i)
            for (unsigned j = i + 1; j <= 6; ++j) c.colors[{i, j}] = ((mask >> bit++) & 1) + 1;
        auto d = monochromatic_search(c, 3);
        REQUIRE(d.has_value());
        auto col = c.colors[{(*d)[0], (*d)[1]}];
        CHECK(c.colors[{(*d)[0], (*d)[2]}] == col);
        CHECK(c.colors[{(*d)[1], (*d)[2]}] == col);
    }
}

TEST_CASE("monochromatic search guard and validation") {
    Coloring incomplete;
    incomplete.ground = 4;
    incomplete.arity = 2;
    incomplete.colors[{1, 2}] = 1;
    CHECK_THROWS_AS(monochromatic_search(incomplete, 2), MalformedInput);
    auto big = pair_coloring(6, [](unsigned, unsigned) { return 1u; });
    big.ground = 3000;  // guard triggers before the (absent) subsets are touched
    CHECK_THROWS_AS(monochromatic_search(big, 3), BoundExceeded);
}

TEST_CASE("cube cell examples") {
    auto cell = cube_cell({RealValue::exact(rat_from_string("0.05")),
                           RealValue::exact(rat_from_string("0.55")),
                           RealValue::exact(rat_from_string("0.95"))},
                          10);
    REQUIRE(cell.has_value());
    CHECK(*cell == CellIndex{0, 5, 9});

    auto zero = cube_cell({RealValue::exact(Rat(0)), RealValue::exact(Rat(0)),
                           RealValue::exact(Rat(0))},
                          7);
    REQUIRE(zero.has_value());
    CHECK(*zero == CellIndex{0, 0, 0});

    // a raw interval straddling the 1/10 boundary cannot be pinned
    auto straddle = cube_cell({RealValue::raw_interval(Interval(rat_from_string("0.0999"),
                                                                rat_from_string("0.1001"))),
                               RealValue::exact(Rat(0)), RealValue::exact(Rat(0))},
                              10);
    CHECK_FALSE(straddle.has_value());

    // negative coordinates reduce mod 1
    auto neg = cube_cell({RealValue::exact(rat_from_string("-0.25")), RealValue::exact(Rat(2)),
                          RealValue::exact(rat_from_string("1.5"))},
                         4);
    REQUIRE(neg.has_value());
    CHECK(*neg == CellIndex{3, 0, 2});
}

namespace {
FiniteSequence engineered_cubic_sequence(size_t len) {
    // multiples c_j * Q of a modulus with ||Q^3 sqrt2|| tiny; triangular
    // multipliers keep all early quadruple differences positive
    Int Q(41296);
    std::vector<Int> elems;
    for (size_t j = 1; j <= len; ++j) elems.push_back(Int(long(j * (j + 1) / 2)) * Q);
    return FiniteSequence(elems, "engineered cubic pipeline input");
}
}  // namespace

TEST_CASE("cubic pipeline on the engineered 40-term sequence") {
    auto s = engineered_cubic_sequence(40);
    auto rep = finitistic_cubic_pipeline(RealValue::named(make_sqrt(2)), rat_from_string("0.8"), s);
    CHECK(rep.N == 9);
    REQUIRE(rep.status == PipelineStatus::Ok);
    CHECK(rep.mono_set == std::vector<unsigned>{1, 2, 3, 4, 5, 6});
    CHECK(rep.cube_diff_bound.verdict == Verdict::In);
    CHECK(rep.mixed_bound_1.verdict == Verdict::In);
    CHECK(rep.mixed_bound_2.verdict == Verdict::In);
    REQUIRE(rep.witness.found);
    CHECK(rep.witness.indices.indices == std::vector<size_t>{1, 2, 3, 4});
    CHECK(rep.witness.diff_value == Int(41296) * 2);
    // doubled-precision re-verification and agreement with the direct search
    PolySpec v = PolySpec::monomial(3, RealValue::named(make_sqrt(2)), CoeffTag::Irrational);
    CHECK(verify_witness(s, v, Rat(1, 2), rep.witness, PrecisionPolicy{256, 8192}));
    auto direct = find_delta_witness(s, v, Rat(1, 2), 2);
    CHECK(direct.found);
}

TEST_CASE("cubic pipeline: fibonacci-like 40-term sequence comes up empty") {
    std::vector<Int> elems{Int(1), Int(2)};
    while (elems.size() < 40) elems.push_back(elems[elems.size() - 1] + elems[elems.size() - 2]);
    FiniteSequence s(elems, "fibonacci-like");
    auto rep = finitistic_cubic_pipeline(RealValue::named(make_sqrt(2)), rat_from_string("0.8"), s);
    CHECK(rep.N == 9);
    // no monochromatic 6-set at this length: R(2, 9^3, 6) is astronomically
    // larger, so the honest outcome is Incomplete
    CHECK(rep.status == PipelineStatus::Incomplete);
    CHECK(rep.mono_set.empty());
}

TEST_CASE("cubic pipeline: huge eps means one cell, first six indices") {
    std::vector<Int> elems;
    for (long j = 1; j <= 8; ++j) elems.emplace_back(j * j * j + j);
    FiniteSequence s(elems);
    auto rep = finitistic_cubic_pipeline(RealValue::named(make_sqrt(2)), Rat(8), s);
    CHECK(rep.N == 1);
    REQUIRE(rep.status == PipelineStatus::Ok);
    CHECK(rep.mono_set == std::vector<unsigned>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("cubic pipeline validation") {
    std::vector<Int> elems{Int(1), Int(2), Int(3), Int(4), Int(5)};
    FiniteSequence s(elems);
    CHECK_THROWS_AS(
        finitistic_cubic_pipeline(RealValue::named(make_sqrt(2)), rat_from_string("0.8"), s),
        TooShort);
    std::vector<Int> six{Int(1), Int(2), Int(3), Int(4), Int(5), Int(6)};
    CHECK_THROWS_AS(
        finitistic_cubic_pipeline(RealValue::exact(Rat(1, 3)), rat_from_string("0.8"),
                                  FiniteSequence(six)),
        MalformedInput);
}
