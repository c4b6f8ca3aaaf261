#include <benchmark/benchmark.h>

#include "delta/cantor.hpp"
#include "delta/dioph_search.hpp"
#include "delta/structure_search.hpp"
#include "delta/witness.hpp"

using namespace delta;

namespace {

std::vector<Int> tuple_of(size_t len) {
    std::vector<Int> t(len);
    long v = 7;
    for (auto& x : t) {
        v = v * 31 % 1000003;
        x = v;
    }
    return t;
}

void BM_IteratedDiff(benchmark::State& state) {
    auto t = tuple_of(size_t(state.range(0)));
    for (auto _ : state) {
        auto d = iterated_diff(t);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_IteratedDiff)->Arg(4)->Arg(8)->Arg(16);

void BM_DiffSetLevel2(benchmark::State& state) {
    std::vector<Int> elems;
    Int p(1);
    for (long k = 0; k < state.range(0); ++k) {
        p = p * 3 + k;
        elems.push_back(p);
    }
    FiniteSequence s(elems);
    for (auto _ : state) {
        auto d = diff_set(s, 2);
        benchmark::DoNotOptimize(d.values.size());
    }
}
BENCHMARK(BM_DiffSetLevel2)->Arg(12)->Arg(20);

void BM_PolyEvalMod1(benchmark::State& state) {
    PolySpec v = PolySpec::monomial(3, RealValue::named(make_sqrt(2)), CoeffTag::Irrational);
    Int n("123456789123456789", 10);
    for (auto _ : state) {
        auto b = poly_eval_mod1(v, n, Rat(1, 10));
        benchmark::DoNotOptimize(b.verdict);
    }
}
BENCHMARK(BM_PolyEvalMod1);

void BM_SimultaneousScan(benchmark::State& state) {
    SimulCondition c{1, RealValue::named(make_sqrt(2)), RealValue::exact(Rat(0)),
                     rat_from_string("0.01")};
    for (auto _ : state) {
        auto r = simultaneous_search({c}, Int(1), Int(state.range(0)));
        benchmark::DoNotOptimize(r.n.has_value());
    }
}
BENCHMARK(BM_SimultaneousScan)->Arg(1000)->Arg(100000);

void BM_FindDeltaWitness(benchmark::State& state) {
    auto s = generate_test_sequence("mixed", 24, 1);
    PolySpec v = PolySpec::monomial(3, RealValue::named(make_sqrt(2)), CoeffTag::Irrational);
    for (auto _ : state) {
        auto rep = find_delta_witness(s, v, Rat(1, 10), 2);
        benchmark::DoNotOptimize(rep.found);
    }
}
BENCHMARK(BM_FindDeltaWitness);

void BM_CharIntegral(benchmark::State& state) {
    Int n2 = cantor_modulus(2);
    Int m = n2 * n2 * n2;
    for (auto _ : state) {
        auto c = char_integral(m, unsigned(state.range(0)), 192);
        benchmark::DoNotOptimize(c.tail_radius);
    }
}
BENCHMARK(BM_CharIntegral)->Arg(2)->Arg(3);

void BM_ContainsDiffStructure(benchmark::State& state) {
    std::set<Int> E;
    for (long e : {2L, 24L, 48L, 720L, 1440L, 2160L}) E.emplace(e);
    for (auto _ : state) {
        auto r = contains_diff_structure(E, 1, 3, Int(5000));
        benchmark::DoNotOptimize(r.found());
    }
}
BENCHMARK(BM_ContainsDiffStructure);

}  // namespace

BENCHMARK_MAIN();
