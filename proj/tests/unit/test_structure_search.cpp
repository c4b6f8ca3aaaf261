#include <doctest.h>

#include <random>

#include "delta/errors.hpp"
#include "delta/structure_search.hpp"
#include "support/oracles.hpp"

using namespace delta;

namespace {
std::set<Int> as_set(std::initializer_list<long> v) {
    std::set<Int> out;
    for (long x : v) out.emplace(x);
    return out;
}
}  // namespace

TEST_CASE("diff structure witness, small examples") {
    // E = {1,2,3}: lex-least 3-element sequence within [-10,10]
    auto r = contains_diff_structure(as_set({1, 2, 3}), 1, 3, Int(10));
    REQUIRE(r.found());
    CHECK(r.witness->elements == std::vector<Int>{Int(-10), Int(-9), Int(-8)});
    // matches the independent brute force
    auto o = oracle::brute_diff_witness(as_set({1, 2, 3}), 1, 3, 10);
    REQUIRE(o.has_value());
    CHECK(r.witness->elements == *o);
}

TEST_CASE("diff structure witness, single difference") {
    auto r = contains_diff_structure(as_set({5}), 1, 2, Int(100));
    REQUIRE(r.found());
    CHECK(r.witness->elements[1] - r.witness->elements[0] == 5);
    CHECK(r.witness->elements[0] == -100);
}

TEST_CASE("diff structure miss: E={1} cannot host 3 elements") {
    auto r = contains_diff_structure(as_set({1}), 1, 3, Int(50));
    CHECK_FALSE(r.found());
    auto o = oracle::brute_diff_witness(as_set({1}), 1, 3, 50);
    CHECK_FALSE(o.has_value());
}

TEST_CASE("diff structure preconditions") {
    CHECK_THROWS_AS(contains_diff_structure(as_set({1}), 1, 1, Int(5)), MalformedQuery);
    CHECK_THROWS_AS(contains_diff_structure(as_set({1}), 2, 3, Int(5)), MalformedQuery);
    CHECK_THROWS_AS(contains_diff_structure(as_set({0, 1}), 1, 2, Int(5)), MalformedQuery);
}

TEST_CASE("level-2 diff structure search agrees with brute force") {
    std::mt19937_64 rng(555);
    for (int rep = 0; rep < 10; ++rep) {
        std::set<Int> E;
        while (E.size() < 5) E.emplace(1 + long(rng() % 12));
        auto fast = contains_diff_structure(E, 2, 4, Int(6));
        auto slow = oracle::brute_diff_witness(E, 2, 4, 6);
        CHECK(fast.found() == slow.has_value());
        if (fast.found()) CHECK(fast.witness->elements == *slow);
    }
}

TEST_CASE("fs structure witness examples") {
    auto r = contains_fs_structure(as_set({1, 2, 3}), 2, Int(100));
    REQUIRE(r.found());
    CHECK(r.witness->elements == std::vector<Int>{Int(1), Int(2)});

    auto r2 = contains_fs_structure(as_set({2, 4, 6}), 2, Int(100));
    REQUIRE(r2.found());
    CHECK(r2.witness->elements == std::vector<Int>{Int(2), Int(4)});

    auto r3 = contains_fs_structure(as_set({1, 2, 4}), 3, Int(100));
    CHECK_FALSE(r3.found());
}

TEST_CASE("bounded search agreement with brute force on random E, l=1") {
    std::mt19937_64 rng(4242);
    for (int rep = 0; rep < 25; ++rep) {
        std::set<Int> E;
        size_t want = 3 + rng() % 6;
        while (E.size() < want) E.emplace(1 + long(rng() % 30));
        for (unsigned r = 2; r <= 4; ++r) {
            auto fast = contains_diff_structure(E, 1, r, Int(30));
            auto slow = oracle::brute_diff_witness(E, 1, r, 30);
            CHECK(fast.found() == slow.has_value());
            if (fast.found()) CHECK(fast.witness->elements == *slow);
        }
        for (unsigned r = 1; r <= 3; ++r) {
            auto fast = contains_fs_structure(E, r, Int(30));
            auto slow = oracle::brute_fs_witness(E, r, 30);
            CHECK(fast.found() == slow.has_value());
            if (fast.found()) CHECK(fast.witness->elements == *slow);
        }
    }
}

TEST_CASE("exhaustive small-universe agreement, l=1, r=2") {
    // every nonempty E inside [1,8]
    for (unsigned mask = 1; mask < 256; ++mask) {
        std::set<Int> E;
        for (unsigned b = 0; b < 8; ++b)
            if (mask & (1u << b)) E.emplace(long(b + 1));
        auto fast = contains_diff_structure(E, 1, 2, Int(8));
        auto slow = oracle::brute_diff_witness(E, 1, 2, 8);
        REQUIRE(fast.found() == slow.has_value());
        if (fast.found()) CHECK(fast.witness->elements == *slow);
    }
}
