#include <doctest.h>

#include <random>

#include "delta/diff.hpp"
#include "delta/errors.hpp"
#include "support/oracles.hpp"

using namespace delta;

namespace {
std::vector<Int> ints(std::initializer_list<long> v) {
    std::vector<Int> out;
    for (long x : v) out.emplace_back(x);
    return out;
}
}  // namespace

TEST_CASE("iterated diff worked examples") {
    CHECK(iterated_diff(ints({1, 2})) == 1);
    CHECK(iterated_diff(ints({5, 3})) == -2);
    CHECK(iterated_diff(ints({1, 2, 5, 3})) == -3);
}

TEST_CASE("malformed tuples rejected") {
    CHECK_THROWS_AS(iterated_diff(ints({1})), MalformedTuple);
    CHECK_THROWS_AS(iterated_diff(ints({1, 2, 3})), MalformedTuple);
    CHECK_THROWS_AS(iterated_diff(ints({1, 2, 3, 4, 5, 6})), MalformedTuple);
}

TEST_CASE("composition identity on random tuples") {
    // d(m_1..m_{2^l}) = d(d(m_1,m_2), ..., d(m_{2^l-1}, m_{2^l}))
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    for (unsigned level = 2; level <= 4; ++level) {
        size_t len = size_t(1) << level;
        for (int rep = 0; rep < 1000; ++rep) {
            std::vector<Int> t(len);
            for (auto& x : t) x = dist(rng);
            std::vector<Int> pairs(len / 2);
            for (size_t i = 0; i < pairs.size(); ++i) pairs[i] = t[2 * i + 1] - t[2 * i];
            CHECK(iterated_diff(t) == iterated_diff(pairs));
            // and the fold agrees with the recursive definition
            CHECK(iterated_diff(t) == oracle::iterated_diff_recursive(t));
        }
    }
}

TEST_CASE("telescoping identity on random tuples") {
    // d(m_1..m_{2^l}) = m_{2^l} - sum_t d(m_{2^l-2^{l-t}+1} .. m_{2^l-2^{l-t-1}})
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    for (unsigned level = 1; level <= 4; ++level) {
        size_t len = size_t(1) << level;
        for (int rep = 0; rep < 1000; ++rep) {
            std::vector<Int> m(len);
            for (auto& x : m) x = dist(rng);
            Int rhs = m[len - 1];
            for (unsigned t = 0; t < level; ++t) {
                size_t a = len - (len >> t);        // 2^l - 2^{l-t}
                size_t b = len - (len >> (t + 1));  // 2^l - 2^{l-t-1}
                if (b - a == 1) {
                    rhs -= m[a];  // single element at the base of the telescope
                } else {
                    std::vector<Int> block(m.begin() + a, m.begin() + b);
                    rhs -= iterated_diff(block);
                }
            }
            CHECK(iterated_diff(m) == rhs);
        }
    }
}

TEST_CASE("antisymmetry at the base") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> dist(-100000, 100000);
    for (int rep = 0; rep < 200; ++rep) {
        Int a = dist(rng), b = dist(rng);
        CHECK(iterated_diff(std::vector<Int>{a, b}) == -iterated_diff(std::vector<Int>{b, a}));
    }
}

TEST_CASE("diff_set examples") {
    FiniteSequence s(ints({1, 2, 4, 8}));
    auto d1 = diff_set(s, 1);
    CHECK(d1.value_set == ints({1, 2, 3, 4, 6, 7}));
    CHECK(d1.values.size() == 6);  // C(4,2) tuples
    auto d2 = diff_set(s, 2);
    CHECK(d2.value_set == ints({3}));
    CHECK(d2.values.size() == 1);
    CHECK_THROWS_AS(diff_set(FiniteSequence(ints({1, 2})), 2), TooShort);
}

TEST_CASE("diff_set positive_only filter") {
    FiniteSequence s(ints({1, 2, 3, 10}));
    auto all = diff_set(s, 2, false);
    CHECK(all.value_set == ints({6}));  // (10-3)-(2-1)
    FiniteSequence t(ints({1, 9, 10, 11}));
    auto all2 = diff_set(t, 2, false);
    CHECK(all2.value_set == ints({-7}));  // (11-10)-(9-1)
    auto pos2 = diff_set(t, 2, true);
    CHECK(pos2.values.empty());
}

TEST_CASE("fs_set examples") {
    CHECK(fs_set(FiniteSequence(ints({1, 2, 4})), 3).value_set == ints({1, 2, 3, 4, 5, 6, 7}));
    CHECK(fs_set(FiniteSequence(ints({10, 100})), 2).value_set == ints({10, 100, 110}));
    CHECK_THROWS_AS(fs_set(FiniteSequence(ints({1, 2})), 3), TooShort);
    // multiset cardinality is 2^r - 1
    auto f = fs_set(FiniteSequence(ints({3, 5, 9, 17})), 4);
    CHECK(f.values.size() == 15);
}

TEST_CASE("sequences must be strictly increasing") {
    CHECK_THROWS_AS(FiniteSequence(ints({1, 1, 2})), MalformedInput);
    CHECK_THROWS_AS(FiniteSequence(ints({3, 2})), MalformedInput);
    CHECK_THROWS_AS(FiniteSequence(std::vector<Int>{}), MalformedInput);
}

TEST_CASE("partial sums examples") {
    auto p = partial_sums(FiniteSequence(ints({1, 2, 4})));
    CHECK(p.elements == ints({1, 3, 7}));
    auto single = partial_sums(FiniteSequence(ints({5})));
    CHECK(single.elements == ints({5}));
    // D_1((1,3,7)) = {2,4,6} inside FS((1,2,4))
    auto d = diff_set(p, 1);
    CHECK(d.value_set == ints({2, 4, 6}));
    auto fs = fs_set(FiniteSequence(ints({1, 2, 4})), 3);
    for (const Int& v : d.value_set)
        CHECK(std::binary_search(fs.value_set.begin(), fs.value_set.end(), v));
}

TEST_CASE("property: D1 of partial sums inside FS") {
    std::mt19937_64 rng(991);
    for (int rep = 0; rep < 60; ++rep) {
        size_t len = 2 + rng() % 11;  // up to 12
        std::vector<Int> elems;
        long cur = 0;
        for (size_t i = 0; i < len; ++i) {
            cur += 1 + long(rng() % 50);
            elems.emplace_back(cur);
        }
        FiniteSequence s(elems);
        auto p = partial_sums(s);
        auto d = diff_set(p, 1);
        auto fs = fs_set(s, unsigned(len));
        for (const Int& v : d.value_set)
            CHECK(std::binary_search(fs.value_set.begin(), fs.value_set.end(), v));
    }
}

TEST_CASE("sequence file round trip") {
    FiniteSequence s(ints({3, 9, 27, 81}), "powers of three");
    std::string path = "tmp_seq_roundtrip.txt";
    save_sequence_file(s, path);
    auto back = load_sequence_file(path);
    CHECK(back.elements == s.elements);
    std::remove(path.c_str());
}

TEST_CASE("index tuple validation") {
    CHECK_THROWS_AS(IndexTuple(1, {2, 1}), MalformedTuple);
    CHECK_THROWS_AS(IndexTuple(2, {1, 2, 3}), MalformedTuple);
    CHECK_THROWS_AS(IndexTuple(1, {0, 1}), MalformedTuple);
    IndexTuple t(1, {1, 3});
    FiniteSequence s(ints({1, 2, 3}));
    CHECK(iterated_diff_at(s, t) == 2);
}
