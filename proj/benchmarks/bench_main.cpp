#include "arrmono/charpoly.hpp"
#include "arrmono/connection.hpp"
#include "arrmono/eigen.hpp"
#include "arrmono/fox.hpp"
#include "arrmono/os_complex.hpp"
#include "generators.hpp"
#include "expected.hpp"

#include <benchmark/benchmark.h>

using namespace arrmono;

static void BM_CharPolyRational(benchmark::State& state) {
    gen::Source s(1);
    auto m = gen::rational_matrix(s, static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)), 6);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPolyRational)->Arg(4)->Arg(8)->Arg(12);

static void BM_CharPolyLaurent(benchmark::State& state) {
    auto phi = expected::laurent(expected::kPhi2);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(phi));
}
BENCHMARK(BM_CharPolyLaurent);

static void BM_SolveRightRational(benchmark::State& state) {
    gen::Source s(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    auto a = gen::rational_matrix(s, n, n, 6);
    auto b = gen::rational_matrix(s, n, 2, 6);
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(solve_right(a, b));
        } catch (const NoSolution&) {
        }
    }
}
BENCHMARK(BM_SolveRightRational)->Arg(4)->Arg(8)->Arg(16);

static void BM_SolveRightLaurent(benchmark::State& state) {
    auto d1 = expected::laurent(expected::kDelta1);
    auto rhs = expected::laurent(expected::kPhi1) * d1;
    for (auto _ : state) benchmark::DoNotOptimize(solve_right(d1, rhs));
}
BENCHMARK(BM_SolveRightLaurent);

static void BM_AomotoComplex(benchmark::State& state) {
    gen::Source s(3);
    std::vector<Arrangement> as;
    for (int i = 0; i < 16; ++i) as.push_back(gen::line_arrangement(s));
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(aomoto_complex(as[k++ % as.size()]));
}
BENCHMARK(BM_AomotoComplex);

static void BM_EigenMonomials(benchmark::State& state) {
    auto phi = expected::laurent(expected::kPhi2);
    for (auto _ : state) benchmark::DoNotOptimize(eigen_monomials(phi));
}
BENCHMARK(BM_EigenMonomials);

static void BM_EigenLinearForms(benchmark::State& state) {
    auto omega = expected::poly(expected::kOmega2);
    for (auto _ : state) benchmark::DoNotOptimize(eigen_linear_forms(omega));
}
BENCHMARK(BM_EigenLinearForms);

static void BM_UniversalRepresentation(benchmark::State& state) {
    gen::BraidFamily family;
    for (auto _ : state)
        benchmark::DoNotOptimize(universal_representation(family.presentation(), family.a12().phi, family.a12().cert));
}
BENCHMARK(BM_UniversalRepresentation);
BENCHMARK_MAIN();
