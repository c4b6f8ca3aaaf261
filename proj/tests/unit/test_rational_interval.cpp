#include <doctest.h>

#include "delta/interval.hpp"
#include "delta/rational.hpp"

using namespace delta;

TEST_CASE("frac and dist_to_int") {
    CHECK(frac(Rat(7, 3)) == Rat(1, 3));
    CHECK(frac(Rat(-1, 5)) == Rat(4, 5));
    CHECK(dist_to_int(Rat(7, 3)) == Rat(1, 3));
    CHECK(dist_to_int(Rat(-1, 5)) == Rat(1, 5));
    CHECK(dist_to_int(Rat(3, 2)) == Rat(1, 2));
    CHECK(dist_to_int(Rat(4)) == 0);
}

TEST_CASE("dist is even and 1-periodic") {
    for (int num = -40; num <= 40; ++num) {
        for (int den = 1; den <= 7; ++den) {
            Rat x(num, den);
            CHECK(dist_to_int(x) == dist_to_int(-x));
            CHECK(dist_to_int(x) == dist_to_int(x + 3));
            CHECK(dist_to_int(x) <= Rat(1, 2));
        }
    }
}

TEST_CASE("rat string round trips") {
    CHECK(rat_from_string("3/4") == Rat(3, 4));
    CHECK(rat_from_string("-7") == Rat(-7));
    CHECK(rat_from_string("1.25") == Rat(5, 4));
    CHECK(rat_from_string("-0.5") == Rat(-1, 2));
    CHECK(rat_to_string(Rat(3, 4)) == "3/4");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_to_decimal(Rat(1, 3), 5) == "0.33333");
}

TEST_CASE("interval arithmetic encloses") {
    Interval a(Rat(1, 2), Rat(3, 2));
    Interval b(Rat(-1), Rat(2));
    Interval p = a * b;
    CHECK(p.lo == Rat(-3, 2));
    CHECK(p.hi == Rat(3));
    Interval s = a - b;
    CHECK(s.lo == Rat(-3, 2));
    CHECK(s.hi == Rat(5, 2));
}

TEST_CASE("dist interval near integers and halves") {
    // straddles 1 -> min 0
    Interval a(Rat(9, 10), Rat(11, 10));
    Interval d = dist_to_int_interval(a);
    CHECK(d.lo == 0);
    CHECK(d.hi == Rat(1, 10));
    // straddles 1/2 -> max 1/2
    Interval b(Rat(2, 5), Rat(3, 5));
    d = dist_to_int_interval(b);
    CHECK(d.hi == Rat(1, 2));
    CHECK(d.lo == Rat(2, 5));
    // wide interval -> the full range
    d = dist_to_int_interval(Interval(Rat(0), Rat(5)));
    CHECK(d.lo == 0);
    CHECK(d.hi == Rat(1, 2));
    // point
    d = dist_to_int_interval(Interval(Rat(17, 5)));
    CHECK(d.lo == d.hi);
    CHECK(d.lo == Rat(2, 5));
}
