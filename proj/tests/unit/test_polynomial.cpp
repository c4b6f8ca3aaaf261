#include <doctest.h>

#include <map>

#include "delta/errors.hpp"
#include "delta/polynomial.hpp"

using namespace delta;

TEST_CASE("dist_mod1 on rationals") {
    CHECK(dist_mod1(Rat(7, 3)).value.lo == Rat(1, 3));
    CHECK(dist_mod1(Rat(-1, 5)).value.lo == Rat(1, 5));
    CHECK(dist_mod1(Rat(3, 2)).value.lo == Rat(1, 2));
}

TEST_CASE("poly_eval_mod1 exact rational case") {
    // v = x^3 / 2 at n = 2: v(2) = 4, ||4|| = 0
    PolySpec v = parse_poly("x^3/2");
    Mod1Bound b = poly_eval_mod1(v, Int(2), Rat(1, 4));
    CHECK(b.verdict == Verdict::In);
    CHECK(b.value.lo == 0);
    CHECK(b.value.hi == 0);
}

TEST_CASE("poly_eval_mod1 with sqrt2, In at loose eps") {
    PolySpec v = parse_poly("sqrt2*x");
    // ||sqrt2|| = 0.41421... < 0.42
    Mod1Bound b = poly_eval_mod1(v, Int(1), rat_from_string("0.42"));
    CHECK(b.verdict == Verdict::In);
    CHECK(b.value.hi < rat_from_string("0.42"));
    CHECK(b.value.lo > rat_from_string("0.414"));
}

TEST_CASE("poly_eval_mod1 with sqrt2, tight eps separates at high precision") {
    Rat eps = rat_from_string("0.41421356");
    // true value 0.4142135623... > eps, certified Out with the default cap
    PolySpec v = parse_poly("sqrt2*x");
    Mod1Bound b = poly_eval_mod1(v, Int(1), eps);
    CHECK(b.verdict == Verdict::Out);
    // with a tiny cap and a fresh constant the verdict stays Unknown
    PolySpec w = parse_poly("sqrt2*x");
    PrecisionPolicy tiny{8, 8};
    Mod1Bound u = poly_eval_mod1(w, Int(1), eps, tiny);
    CHECK(u.verdict == Verdict::Unknown);
    // a constant already refined past the cap keeps its narrow cache, so the
    // same query resolves
    Mod1Bound r = poly_eval_mod1(v, Int(1), eps, tiny);
    CHECK(r.verdict == Verdict::Out);
}

TEST_CASE("eps domain checked") {
    PolySpec v = parse_poly("x");
    CHECK_THROWS_AS(poly_eval_mod1(v, Int(1), Rat(0)), MalformedQuery);
    CHECK_THROWS_AS(poly_eval_mod1(v, Int(1), Rat(2, 3)), MalformedQuery);
}

TEST_CASE("decompose_polynomial splits by tag and parity") {
    // v = a x^3 + a x^2 + x/2 + 7 with a = sqrt2
    auto a = make_sqrt(2);
    PolySpec v({
        PolyTerm{3, RealValue::named(a), CoeffTag::Irrational},
        PolyTerm{2, RealValue::named(a), CoeffTag::Irrational},
        PolyTerm{1, RealValue::exact(Rat(1, 2)), CoeffTag::Rational},
        PolyTerm{0, RealValue::exact(Rat(7)), CoeffTag::Rational},
    });
    auto d = decompose_polynomial(v);
    CHECK(d.even.degree() == 2);
    CHECK(d.even.terms().size() == 1);
    CHECK(d.odd.degree() == 3);
    CHECK(d.odd.terms().size() == 1);
    CHECK(d.rational.terms().size() == 2);
    CHECK(d.even.is_even());
    CHECK(d.odd.is_odd());
    CHECK(d.rational.all_rational());
    // recombination equals the input termwise: the three parts partition the
    // degree set and carry the original coefficients
    std::map<unsigned, const PolyTerm*> parts;
    for (const auto& t : d.even.terms()) parts[t.degree] = &t;
    for (const auto& t : d.odd.terms()) parts[t.degree] = &t;
    for (const auto& t : d.rational.terms()) parts[t.degree] = &t;
    REQUIRE(parts.size() == v.terms().size());
    for (const auto& t : v.terms()) {
        REQUIRE(parts.count(t.degree) == 1);
        CHECK(parts[t.degree]->coeff.describe() == t.coeff.describe());
        CHECK(parts[t.degree]->tag == t.tag);
    }
}

TEST_CASE("decompose: all-rational cubic goes entirely to v_r") {
    PolySpec v = parse_poly("x^3");
    auto d = decompose_polynomial(v);
    CHECK(d.even.empty());
    CHECK(d.odd.empty());
    CHECK(d.rational.degree() == 3);
}

TEST_CASE("decompose: irrational odd monomial goes to v_o") {
    PolySpec v = parse_poly("sqrt2*x^5");
    auto d = decompose_polynomial(v);
    CHECK(d.even.empty());
    CHECK(d.rational.empty());
    CHECK(d.odd.degree() == 5);
}

TEST_CASE("rational tag with non-exact coefficient rejected") {
    auto a = make_sqrt(2);
    CHECK_THROWS_AS(PolySpec({PolyTerm{1, RealValue::named(a), CoeffTag::Rational}}),
                    MalformedInput);
}

TEST_CASE("integer-valued check") {
    CHECK(is_integer_valued(parse_poly("x^3")));
    CHECK(is_integer_valued(parse_poly("x^2/2 + x/2")));  // binomial(x+1, 2)
    CHECK_FALSE(is_integer_valued(parse_poly("x^3/2")));
    CHECK_FALSE(is_integer_valued(parse_poly("sqrt2*x")));
}

TEST_CASE("poly parser shapes") {
    CHECK(parse_poly("x^3").degree() == 3);
    CHECK(parse_poly("x^3").all_rational());
    CHECK(parse_poly("sqrt2*x^3").has_irrational_term());
    CHECK(parse_poly("x^3/12").terms()[0].coeff.exact_value() == Rat(1, 12));
    CHECK(parse_poly("-x + 7").terms().size() == 2);
    CHECK(parse_poly("3/4*x^2").terms()[0].coeff.exact_value() == Rat(3, 4));
    PolySpec g = parse_poly("golden*x");
    CHECK(g.has_irrational_term());
    CHECK(g.degree() == 1);
    CHECK(parse_poly("x + x").terms()[0].coeff.exact_value() == Rat(2));
}

TEST_CASE("odd/even predicates") {
    CHECK(parse_poly("x^3 + x").is_odd());
    CHECK_FALSE(parse_poly("x^3 + x^2").is_odd());
    CHECK(parse_poly("x^2 + 5").is_even());
}

TEST_CASE("monotone refinement never widens a bound") {
    auto a = make_sqrt(2);
    PolySpec v = PolySpec::monomial(3, RealValue::named(a), CoeffTag::Irrational);
    Mod1Bound coarse = poly_eval_mod1(v, Int(7), Rat(1, 3), PrecisionPolicy{64, 64});
    Mod1Bound fine = poly_eval_mod1(v, Int(7), Rat(1, 3), PrecisionPolicy{256, 256});
    CHECK(fine.value.width() <= coarse.value.width());
    CHECK(coarse.value.lo <= fine.value.lo);
    CHECK(fine.value.hi <= coarse.value.hi);
}
