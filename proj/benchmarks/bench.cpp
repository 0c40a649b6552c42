#include "esub/orbits.hpp"
#include "esub/springer.hpp"

#include <benchmark/benchmark.h>

using namespace esub;

namespace {

const FieldCtx& f25() {
    static FieldCtx F(5, 2);
    return F;
}

const FieldCtx& f5() {
    static FieldCtx F(5, 1);
    return F;
}

void bm_field_mul(benchmark::State& state) {
    const FieldCtx& F = f25();
    Fe acc = 1;
    for (auto _ : state) {
        for (Fe b = 1; b < 25; ++b) acc = F.mul(acc, b);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(bm_field_mul);

void bm_matmul(benchmark::State& state) {
    const FieldCtx& F = f25();
    Rng rng(1);
    int n = int(state.range(0));
    MatrixFq a = random_matrix(F, n, rng), b = random_matrix(F, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_matmul)->Arg(3)->Arg(4)->Arg(6);

void bm_rref(benchmark::State& state) {
    const FieldCtx& F = f5();
    Rng rng(2);
    MatrixFq m(F, 3, 16);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 16; ++j) m(i, j) = rng.elem(F);
    for (auto _ : state) benchmark::DoNotOptimize(mat_rref(m));
}
BENCHMARK(bm_rref);

void bm_exp_log(benchmark::State& state) {
    const FieldCtx& F = f5();
    Rng rng(3);
    MatrixFq X = random_nilpotent(F, 4, rng);
    for (auto _ : state) benchmark::DoNotOptimize(log_unipotent(exp_nilpotent(X)));
}
BENCHMARK(bm_exp_log);

void bm_act(benchmark::State& state) {
    const FieldCtx& F = f5();
    AmbientAlgebra gl3(Family::gl, 3, F);
    GroupGenerators gens = gl_generators(3, F);
    PointSet ps = enumerate_seeded(gl3, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(act(gens.generators[i % gens.generators.size()],
                                     gens.inverses[i % gens.inverses.size()], gl3,
                                     ps.points[i % ps.points.size()]));
        ++i;
    }
}
BENCHMARK(bm_act);

void bm_orbit_partition(benchmark::State& state) {
    const FieldCtx& F = f5();
    AmbientAlgebra gl3(Family::gl, 3, F);
    GroupGenerators gens = gl_generators(3, F);
    PointSet ps = enumerate_seeded(gl3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(orbit_partition(ps, gens));
}
BENCHMARK(bm_orbit_partition);

} // namespace

BENCHMARK_MAIN();
