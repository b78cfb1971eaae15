// Parallel kernels against their serial and reference counterparts.
#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "sqp/invariants.hpp"
#include "sqp/kernels.hpp"
#include "sqp/tie.hpp"

namespace {

using namespace sqp;

ArtinWord random_band_braid(int strands, int letters, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Band> bands;
    for (int k = 0; k < letters; ++k) {
        const int i = std::uniform_int_distribution<int>(1, strands - 1)(rng);
        bands.push_back({i, std::uniform_int_distribution<int>(i + 1, strands)(rng)});
    }
    return expand_to_artin(BandWord(strands, std::move(bands)));
}

const IntMatrix& pencil_input(int letters) {
    static std::map<int, IntMatrix> cache;
    auto it = cache.find(letters);
    if (it == cache.end()) it = cache.emplace(letters, seifert_matrix(random_band_braid(8, letters, 7)).v).first;
    return it->second;
}

// Trefoil tied once with the bundled annulus: 10 strands, the Jones witness of the Case 2 family.
const ArtinWord& bracket_input() {
    static const ArtinWord w = [] {
        const BandWord trefoil(2, {{1, 2}, {1, 2}, {1, 2}});
        return expand_to_artin(family(trefoil, 1, bundled_alpha())[1].word);
    }();
    return w;
}

void BM_PencilParallel(benchmark::State& state) {
    const IntMatrix& v = pencil_input(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pencil_determinant(v, Execution::parallel));
    state.counters["size"] = static_cast<double>(v.rows());
}

void BM_PencilSerial(benchmark::State& state) {
    const IntMatrix& v = pencil_input(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pencil_determinant(v, Execution::serial));
    state.counters["size"] = static_cast<double>(v.rows());
}

void BM_PencilBareiss(benchmark::State& state) {
    const IntMatrix& v = pencil_input(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pencil_determinant_reference(v));
    state.counters["size"] = static_cast<double>(v.rows());
}

void BM_BracketParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(bracket_input(), Execution::parallel));
}

void BM_BracketSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(bracket_input(), Execution::serial));
}

void BM_BracketScatter(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket_reference(bracket_input()));
}

}  // namespace

BENCHMARK(BM_PencilParallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PencilSerial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PencilBareiss)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketScatter)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
