#include <benchmark/benchmark.h>

#include "klrw/graded.hpp"
#include "klrw/gt.hpp"
#include "klrw/ladder.hpp"
#include "klrw/quiver.hpp"
#include "klrw/relations.hpp"

#include <random>

using namespace klrw;

namespace {

Polynomial random_poly(std::mt19937& rng, int nvars, int terms, int deg) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> var(0, nvars - 1);
    Polynomial p(nvars);
    for (int t = 0; t < terms; ++t) {
        Exponents e(nvars, 0);
        for (int i = 0; i < deg; ++i) e[var(rng)] += 1;
        p.add_term(e, coeff(rng));
    }
    return p;
}

void BM_polynomial_mul(benchmark::State& state) {
    std::mt19937 rng(1);
    Polynomial a = random_poly(rng, 6, 30, 4);
    Polynomial b = random_poly(rng, 6, 30, 4);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_polynomial_mul);

void BM_divided_difference_chain(benchmark::State& state) {
    std::mt19937 rng(2);
    Polynomial p = random_poly(rng, 6, 20, 6);
    for (auto _ : state) {
        Polynomial q = p;
        for (int k = 0; k < 5; ++k) q = q.divided_difference(k % 5) + p;
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_divided_difference_chain);

void BM_nilhecke_idempotent_square(benchmark::State& state) {
    int a = static_cast<int>(state.range(0));
    PermOperator e = nilhecke_idempotent(a, 0, a);
    for (auto _ : state) benchmark::DoNotOptimize(e.compose(e));
}
BENCHMARK(BM_nilhecke_idempotent_square)->Arg(2)->Arg(3)->Arg(4);

void BM_relation_suite_m2(benchmark::State& state) {
    RelationSuiteOptions opts;
    opts.max_m = 2;
    opts.max_strands = 3;
    for (auto _ : state) benchmark::DoNotOptimize(run_relation_suite(opts));
}
BENCHMARK(BM_relation_suite_m2);

void BM_classify(benchmark::State& state) {
    Problem p(3, 2, {2, 2}, {0, 1});
    auto segs = enumerate_segmentations(p);
    std::vector<QuiverRep> reps;
    for (const auto& s : segs) reps.push_back(canonical_rep(s));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(reps[i % reps.size()]));
        ++i;
    }
}
BENCHMARK(BM_classify);

void BM_merge(benchmark::State& state) {
    LadderContext ctx({0, 0, 1, 1}, 0, 2);
    std::mt19937 rng(3);
    Polynomial f = Polynomial::constant(4, 1);
    for (int v = 0; v < 4; ++v)
        f = f * (Polynomial::variable(4, v) + Polynomial::constant(4, v + 1));
    // fully symmetric input
    for (auto _ : state) benchmark::DoNotOptimize(merge(ctx, f));
}
BENCHMARK(BM_merge);

void BM_gt_patterns(benchmark::State& state) {
    CentralCharacter chi = {1, 3, 5, 7};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_gt_patterns(chi));
}
BENCHMARK(BM_gt_patterns);

} // namespace

BENCHMARK_MAIN();
