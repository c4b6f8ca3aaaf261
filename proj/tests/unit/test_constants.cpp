#include <doctest.h>

#include <fstream>

#include "delta/constants.hpp"
#include "delta/errors.hpp"
#include "support/oracles.hpp"

using namespace delta;

TEST_CASE("sqrt2 enclosure brackets and narrows") {
    auto c = make_sqrt(2);
    Interval a = c->enclosure(32);
    Interval b = c->enclosure(128);
    CHECK(b.width() <= pow2_inv(128));
    CHECK(a.contains(b));
    // the 20-digit truncation sits inside the coarse enclosure and within
    // 10^-19 of the fine one
    Rat approx = rat_from_string("1.41421356237309504880");
    CHECK(a.contains(approx));
    CHECK(abs(b.center() - approx) < rat_from_string("0.0000000000000000001"));
}

TEST_CASE("perfect square rejected") {
    CHECK_THROWS_AS(make_sqrt(9), MalformedInput);
}

TEST_CASE("sqrt2 convergents match the spec list") {
    auto c = make_sqrt(2);
    auto conv = c->convergents(5);
    REQUIRE(conv.size() == 5);
    CHECK(conv[0] == Rat(1));
    CHECK(conv[1] == Rat(3, 2));
    CHECK(conv[2] == Rat(7, 5));
    CHECK(conv[3] == Rat(17, 12));
    CHECK(conv[4] == Rat(41, 29));
}

TEST_CASE("golden ratio convergents") {
    auto c = make_golden();
    auto conv = c->convergents(4);
    REQUIRE(conv.size() == 4);
    CHECK(conv[0] == Rat(1));
    CHECK(conv[1] == Rat(2));
    CHECK(conv[2] == Rat(3, 2));
    CHECK(conv[3] == Rat(5, 3));
    CHECK(c->convergents(0).empty());
}

TEST_CASE("convergents satisfy |c - p/q| < 1/q^2 and best-approximation records") {
    for (auto c : {make_sqrt(2), make_sqrt(3), make_golden(), make_sqrt(7)}) {
        auto conv = c->convergents(10);
        Interval iv = c->enclosure(512);
        for (const Rat& pq : conv) {
            Rat q(pq.get_den());
            Interval err = iv - Interval(pq);
            Rat abshi = std::max(abs(err.lo), abs(err.hi));
            CHECK(abshi < 1 / (q * q));
        }
        // every scan record with q >= 2 must be a convergent
        auto records = oracle::best_approximations(*c, Int(1000));
        std::set<Rat> conv_set(conv.begin(), conv.end());
        for (const Rat& r : records) {
            if (r.get_den() == 1) continue;  // q=1 record may round the other way
            if (r.get_den() <= conv.back().get_den()) CHECK(conv_set.count(r) == 1);
        }
        // and the convergents from index 1 appear among the records
        std::set<Rat> rec_set(records.begin(), records.end());
        for (size_t i = 1; i < conv.size(); ++i)
            if (conv[i].get_den() <= 1000) CHECK(rec_set.count(conv[i]) == 1);
    }
}

TEST_CASE("digit stream constants and precision exhaustion") {
    auto c = make_digit_stream("e", "2.718281828459045");
    Interval iv = c->enclosure(32);
    CHECK(iv.width() <= pow2_inv(32));
    CHECK(iv.lo >= rat_from_string("2.718281828459045"));
    CHECK_THROWS_AS(c->enclosure(64), PrecisionExhausted);
}

TEST_CASE("digit stream convergents via endpoint expansions") {
    // pi with 30 digits is plenty for a few partial quotients
    auto c = make_digit_stream("pi", "3.141592653589793238462643383279");
    auto conv = c->convergents(4);
    REQUIRE(conv.size() == 4);
    CHECK(conv[0] == Rat(3));
    CHECK(conv[1] == Rat(22, 7));
    CHECK(conv[2] == Rat(333, 106));
    CHECK(conv[3] == Rat(355, 113));
}

TEST_CASE("constant file loading") {
    std::string path = "test_constant_tmp.txt";
    {
        std::ofstream out(path);
        out << "# comment\n";
        out << "mystery\n";
        out << "0.1234567890\n";
    }
    auto c = load_constant_file(path);
    CHECK(c->name() == "mystery");
    Interval iv = c->enclosure(16);
    CHECK(iv.contains(rat_from_string("0.12345678901")));
    std::remove(path.c_str());
}
