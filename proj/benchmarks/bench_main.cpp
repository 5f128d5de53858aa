// Micro-benchmarks for the hot paths: brace insertion, the section onto
// twisted complexes, cohomology by exact rank computation, the obstruction
// solver and the underlying row reduction.

#include "embrace/brace.hpp"
#include "embrace/corpus.hpp"
#include "embrace/hochschild.hpp"
#include "embrace/sparse.hpp"
#include "embrace/twisted.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace embrace;

void bench_brace_insertion(benchmark::State& state) {
    StructuredCategory dual = dual_numbers_category(FieldSpec::prime(7));
    Cochain sphi = suspend(phi_one(dual));
    Cochain smu = suspend(*dual.mu.part(2));
    for (auto _ : state) {
        Cochain out = brace(smu, {sphi, sphi});
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(bench_brace_insertion);

void bench_differential(benchmark::State& state) {
    Corpus c = make_corpus(FieldSpec::rational());
    MixedCochain phi(c.dual.quiver, Level::Base, 2);
    phi.add_part(c.phi);
    for (auto _ : state) {
        MixedCochain d = hochschild_differential(c.dual.b, phi);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bench_differential);

void bench_embr_section(benchmark::State& state) {
    Corpus c = make_corpus(FieldSpec::prime(7));
    std::vector<TwistedObject> objs;
    objs.push_back(base_copy(*c.dual.quiver, 0, "base:e"));
    for (const auto& w : c.x_windows) objs.push_back(window_object(*c.dual.quiver, w));
    WindowCategory wc = build_pcom(c.dual, objs);
    for (auto _ : state) {
        MixedCochain lifted = embr_delta(wc.collection, c.phi);
        benchmark::DoNotOptimize(lifted);
    }
}
BENCHMARK(bench_embr_section);

void bench_cohomology_degree2(benchmark::State& state) {
    StructuredCategory dual = dual_numbers_category(FieldSpec::rational());
    for (auto _ : state) {
        CohomologyResult res = hochschild_cohomology(dual, 2, 4);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(bench_cohomology_degree2);

void bench_obstruction(benchmark::State& state) {
    Corpus c = make_corpus(FieldSpec::rational());
    std::vector<TwistedObject> objs;
    objs.push_back(base_copy(*c.dual.quiver, 0, "base:e"));
    for (const auto& w : c.x_windows) objs.push_back(window_object(*c.dual.quiver, w));
    WindowCategory wc = build_pcom(c.dual, objs);
    FirstOrderDeformation def = make_deformation(c.dual, c.phi);
    ObjId x3 = *wc.category.quiver->find_object("x3");
    for (auto _ : state) {
        ObstructionReport rep = obstruction_and_lift(wc, def, x3);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(bench_obstruction);

void bench_rref(benchmark::State& state) {
    FieldSpec f = FieldSpec::rational();
    const int n = 24;
    std::vector<SparseMatrix::Entry> entries;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if ((i * 7 + j * 3) % 5 == 0) continue;
            entries.push_back({i, j, Scalar::from_int(f, (i * j + i + 1) % 9 - 4)});
        }
    SparseMatrix m = SparseMatrix::from_triplets(f, n, n, std::move(entries));
    for (auto _ : state) {
        RrefResult r = rref(m);
        benchmark::DoNotOptimize(r.rank);
    }
}
BENCHMARK(bench_rref);

}  // namespace

BENCHMARK_MAIN();
