#include <benchmark/benchmark.h>

#include "hyperlogic/hyperlogic.hpp"

using namespace hyperlogic;

namespace {

// x at position i of trace i, one constant tile everywhere.
TraceSet grid(std::size_t columns) {
    TraceSet t;
    t.alphabet = Alphabet({"t0", "x"});
    for (std::size_t i = 0; i < columns; ++i) {
        std::vector<Letter> stem(i + 1, 1);
        stem[i] |= 2;
        t.add(LassoTrace(stem, {1}));
    }
    return t;
}

TileSet single_tile() { return parse_tiles("colors: c\ntile t0 north=c south=c east=c west=c\nrecurring: t0\n"); }

void BM_CheckTiling(benchmark::State& state) {
    const Sentence phi = gen_tiling(single_tile());
    const TraceSet t = grid(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check(phi, t));
}
BENCHMARK(BM_CheckTiling)->DenseRange(2, 5);

void BM_Expansion(benchmark::State& state) {
    const CoreFormula c =
        CoreFormula::compile(parse_formula("G (a[p] -> F (b[q] & X a[p])) & (a[p] U (b[q] U a[q]))"), {"p", "q"});
    const auto n = static_cast<std::size_t>(state.range(0));
    const LassoTrace u(std::vector<Letter>(n, 1), std::vector<Letter>(n + 1, 2));
    const LassoTrace v(std::vector<Letter>(n / 2, 3), std::vector<Letter>(n, 1));
    const LassoTrace* tr[] = {&u, &v};
    const Alphabet ab({"a", "b"});
    for (auto _ : state) benchmark::DoNotOptimize(build_expansion(c, tr, ab).holds());
}
BENCHMARK(BM_Expansion)->RangeMultiplier(2)->Range(2, 32);

void BM_SatEnumExhaust(benchmark::State& state) {
    const Sentence phi = parse_hyperltl("exists p. exists q. a[p] & !a[q] & G (a[p] <-> X !a[q]) & b[p] & !b[p]");
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sat_enum(phi, SearchBudget{k, 1, 2, std::nullopt}).sets_checked);
}
BENCHMARK(BM_SatEnumExhaust)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CheckBounded(benchmark::State& state) {
    const Formula phi = gen_phiset();
    const KripkeStructure k = gen_kset_truncation(static_cast<std::size_t>(state.range(0)), {{0}, {1}});
    for (auto _ : state) benchmark::DoNotOptimize(check_bounded(phi, k, PathBounds{2, 2}));
}
BENCHMARK(BM_CheckBounded)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_SolveGame(benchmark::State& state) {
    const Formula phi = parse_hyperctl("forall p. G (a[p] -> exists q. X (b[q] U a[q]))");
    const KripkeStructure k = parse_kripke(
        "props: a b\nvertex u {a}\nvertex v {b}\nvertex w {a b}\ninit u\nedge u v\nedge v w\nedge w u\nedge v v\n");
    const auto bound = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const Game g = build_game(phi, k, PathBounds{bound, bound});
        benchmark::DoNotOptimize(solve_game(g).winner);
    }
}
BENCHMARK(BM_SolveGame)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
