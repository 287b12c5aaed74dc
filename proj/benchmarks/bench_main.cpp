#include <benchmark/benchmark.h>

#include "rrca/characters.hpp"
#include "rrca/oracle.hpp"
#include "rrca/smoothness.hpp"

using namespace rrca;

static void BM_FieldMul(benchmark::State& state) {
    auto ctx = ctx_create(3, 4);
    auto a = ctx->parse("t^3+2*t+1");
    auto b = ctx->parse("2*t^2+t");
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = a * b);
    }
}
BENCHMARK(BM_FieldMul);

static void BM_TableFieldMul(benchmark::State& state) {
    auto F = make_fq_table(ctx_create(3, 4));
    FqTable::Elt a = 37, b = 55;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = F->mul(a, b));
        a |= 1;
    }
}
BENCHMARK(BM_TableFieldMul);

static void BM_BlockPartition(benchmark::State& state) {
    auto ctx = ctx_create(3, 2);
    auto ps = ParameterSet::create(2, 2, ctx->parse("t"), {ctx->parse("t+1")});
    for (auto _ : state) {
        benchmark::DoNotOptimize(block_partition(ps));
    }
}
BENCHMARK(BM_BlockPartition);

static void BM_SmoothnessSweepPoint(benchmark::State& state) {
    auto ctx = ctx_create(3, 2);
    auto ps = ParameterSet::create(2, 2, ctx->parse("t"), {ctx->parse("1")});
    for (auto _ : state) {
        benchmark::DoNotOptimize(smooth_iff_singleton_blocks(ps));
    }
}
BENCHMARK(BM_SmoothnessSweepPoint);

static void BM_CharacterTable(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(CharacterTable::build(2, 2));
    }
}
BENCHMARK(BM_CharacterTable);

static void BM_FakePolynomials(benchmark::State& state) {
    auto table = CharacterTable::build(2, 3);
    for (auto _ : state) {
        // fakes are cached per table, so rebuild to measure the Molien sums
        auto fresh = CharacterTable::build(2, 3);
        benchmark::DoNotOptimize(fresh->fake_polynomial(0));
    }
}
BENCHMARK(BM_FakePolynomials);

static void BM_OracleRank1Blocks(benchmark::State& state) {
    auto F = make_fq_table(ctx_create(3, 2));
    auto c1 = F->ctx()->parse("t");
    for (auto _ : state) {
        auto alg = OracleAlgebra::build_rank1(F, 2, {c1});
        benchmark::DoNotOptimize(alg->block_decomposition());
    }
}
BENCHMARK(BM_OracleRank1Blocks);

static void BM_OracleS2Build(benchmark::State& state) {
    auto F = make_fq_table(ctx_create(3, 2));
    auto kappa = F->ctx()->parse("t");
    for (auto _ : state) {
        auto alg = OracleAlgebra::build_s2(F, kappa);
        benchmark::DoNotOptimize(alg->verify_identities());
    }
}
BENCHMARK(BM_OracleS2Build);

BENCHMARK_MAIN();
