#include <benchmark/benchmark.h>

#include "algdeg/catalog.hpp"
#include "algdeg/degen.hpp"
#include "algdeg/modspan.hpp"

using namespace algdeg;

namespace {

StructureVector dense_vector(std::size_t n, const FieldSpec& fs) {
    StructureVector v(n, fs);
    for (std::size_t m = 1; m <= v.size(); ++m)
        v.set_flat(m, FieldScalar::of(fs, static_cast<long long>(m % 5) - 2));
    return v;
}

BasisChange shear_chain(std::size_t n, const FieldSpec& fs) {
    BasisChange g = BasisChange::transvection(n, fs, 1, 2, FieldScalar::of(fs, 2));
    g = g.then(BasisChange::transvection(n, fs, 2, 3, FieldScalar::of(fs, 3)));
    g = g.then(BasisChange::permutation_matrix(Permutation::cycle(n), fs));
    return g;
}

void BM_ActRationals(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const FieldSpec fs = FieldSpec::rationals();
    const StructureVector v = dense_vector(n, fs);
    const BasisChange g = shear_chain(n, fs);
    for (auto _ : state) benchmark::DoNotOptimize(act(v, g));
}
BENCHMARK(BM_ActRationals)->Arg(3)->Arg(4)->Arg(6);

void BM_ActPrimeField(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const FieldSpec fs = FieldSpec::prime_field(7);
    const StructureVector v = dense_vector(n, fs);
    const BasisChange g = shear_chain(n, fs);
    for (auto _ : state) benchmark::DoNotOptimize(act(v, g));
}
BENCHMARK(BM_ActPrimeField)->Arg(3)->Arg(4)->Arg(6);

void BM_FlattenRank(benchmark::State& state) {
    const StructureVector v = dense_vector(state.range(0), FieldSpec::rationals());
    for (auto _ : state) benchmark::DoNotOptimize(v.flatten_a().rank());
}
BENCHMARK(BM_FlattenRank)->Arg(4)->Arg(6);

void BM_EtaSpan(benchmark::State& state) {
    const FieldSpec fs = FieldSpec::prime_field(5);
    const StructureVector eta = catalog::eta(state.range(0), fs);
    for (auto _ : state) benchmark::DoNotOptimize(fg_span(eta).dim());
}
BENCHMARK(BM_EtaSpan)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
    const FieldSpec fs = FieldSpec::rationals();
    const StructureVector scrambled =
        act(catalog::epsilon(4, fs, FieldScalar::of(fs, 1, 2)), shear_chain(4, fs));
    for (auto _ : state) benchmark::DoNotOptimize(classify(scrambled).kind);
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMicrosecond);

void BM_OrbitEnumeration(benchmark::State& state) {
    const FieldSpec fs = FieldSpec::prime_field(3);
    const StructureVector eta = catalog::eta(3, fs);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_orbit(eta).size());
}
BENCHMARK(BM_OrbitEnumeration)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
