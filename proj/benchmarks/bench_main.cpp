#include <frobx/adjunction.hpp>
#include <frobx/algebra_io.hpp>
#include <frobx/diagram.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <string>

namespace {

using namespace frobx;

AlgebraFile load(const std::string& name) {
    return load_algebra_file(std::string(FROBX_DATA_DIR) + "/" + name);
}

FrobeniusStructure structure(const std::string& name) {
    AlgebraFile file = load(name);
    return build_frobenius(file.algebra, file.counit);
}

LinearMap random_square(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    LinearMap f(Legs{n}, Legs{n});
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            f.set(r, c, Rational(static_cast<long long>(rng() % 19) - 9,
                                 static_cast<long long>(rng() % 7) + 1));
    return f;
}

void BM_BuildFrobenius(benchmark::State& state, const std::string& name) {
    AlgebraFile file = load(name);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_frobenius(file.algebra, file.counit));
}
BENCHMARK_CAPTURE(BM_BuildFrobenius, dual_numbers, "dual_numbers.json");
BENCHMARK_CAPTURE(BM_BuildFrobenius, group_z2, "group_z2.json");
BENCHMARK_CAPTURE(BM_BuildFrobenius, mat2, "mat2.json");

void BM_BuildAmbijunction(benchmark::State& state, const std::string& name) {
    FrobeniusStructure fs = structure(name);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_ambijunction(fs));
}
BENCHMARK_CAPTURE(BM_BuildAmbijunction, group_z2, "group_z2.json");
BENCHMARK_CAPTURE(BM_BuildAmbijunction, mat2, "mat2.json");

void BM_CheckTriangles(benchmark::State& state, const std::string& name) {
    Ambijunction amb = build_ambijunction(structure(name));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_triangles(amb.fwd));
        benchmark::DoNotOptimize(check_triangles(amb.bwd));
    }
}
BENCHMARK_CAPTURE(BM_CheckTriangles, mat2, "mat2.json");

void BM_SurfaceInvariant(benchmark::State& state) {
    FrobeniusStructure fs = structure("group_z2.json");
    const auto genus = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(surface_invariant(fs, genus));
}
BENCHMARK(BM_SurfaceInvariant)->Arg(1)->Arg(8)->Arg(32);

void BM_EvaluateWord(benchmark::State& state) {
    FrobeniusStructure fs = structure("mat2.json");
    DiagramWord torus = parse_word("u | d | m | c");
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate_word(fs, torus));
}
BENCHMARK(BM_EvaluateWord);

void BM_Compose(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    LinearMap f = random_square(n, 0xBE1);
    LinearMap g = random_square(n, 0xBE2);
    for (auto _ : state)
        benchmark::DoNotOptimize(compose(g, f));
}
BENCHMARK(BM_Compose)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Inverse(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    LinearMap f = random_square(n, 0xBE3);
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(inverse(f));
        } catch (const Singular&) {
            state.SkipWithError("drew a singular matrix");
            break;
        }
    }
}
BENCHMARK(BM_Inverse)->Arg(4)->Arg(8)->Arg(16);

} // namespace

BENCHMARK_MAIN();
