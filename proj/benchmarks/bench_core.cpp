#include "pacert/curvesys.hpp"
#include "pacert/factor.hpp"
#include "pacert/penner.hpp"
#include "pacert/symmetry.hpp"

#include <benchmark/benchmark.h>

using namespace pacert;

namespace {

const CurveModel& model() {
    static const CurveModel M = build_curve_model(build_chain(2, 4, 1));
    return M;
}

IntMatrix family_matrix(int r, long m) {
    ChainConfig c = build_chain(r, r + 2, 1);
    return transition_matrix(family_word(c, m), c).matrix;
}

} // namespace

static void BM_CharPoly(benchmark::State& st) {
    IntMatrix M = family_matrix(static_cast<int>(st.range(0)), 40);
    for (auto _ : st) benchmark::DoNotOptimize(char_poly(M));
}
BENCHMARK(BM_CharPoly)->DenseRange(2, 6);

static void BM_Factor(benchmark::State& st) {
    IntPoly p = char_poly(family_matrix(static_cast<int>(st.range(0)), 40));
    for (auto _ : st) benchmark::DoNotOptimize(factor_over_z(p));
}
BENCHMARK(BM_Factor)->DenseRange(2, 6);

static void BM_StretchReport(benchmark::State& st) {
    ChainConfig c = build_chain(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)) + 2, 1);
    TwistWord w = family_word(c, 40);
    for (auto _ : st) benchmark::DoNotOptimize(stretch_report(w, c));
}
BENCHMARK(BM_StretchReport)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Twist(benchmark::State& st) {
    const CurveModel& M = model();
    const long k = st.range(0);
    for (auto _ : st) benchmark::DoNotOptimize(twist(M.complex, M.curves.at("b1"), M.curves.at("a1"), k));
    st.SetComplexityN(k);
}
BENCHMARK(BM_Twist)->RangeMultiplier(4)->Range(1, 1024)->Complexity();

static void BM_IntersectionGamma(benchmark::State& st) {
    const CurveModel& M = model();
    TwistWord w = family_word(build_chain(2, 4, 1), st.range(0));
    NormalPath p = gamma_curve(M, w, 4), q = gamma_curve(M, w, 5);
    for (auto _ : st) benchmark::DoNotOptimize(intersection_number(M.complex, p, q));
    st.counters["length"] = static_cast<double>(p.length() + q.length());
}
BENCHMARK(BM_IntersectionGamma)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Linking(benchmark::State& st) {
    const CurveModel& M = model();
    TwistWord w = family_word(build_chain(2, 4, 1), st.range(0));
    NormalPath p = gamma_curve(M, w, 3), q = gamma_curve(M, w, 4);
    for (auto _ : st) benchmark::DoNotOptimize(intersection_by_linking(M.complex, p, q));
}
BENCHMARK(BM_Linking)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_FillFrame(benchmark::State& st) {
    const CurveModel& M = model();
    TwistWord w = family_word(build_chain(2, 4, 1), st.range(0));
    GammaCache G(M, w);
    std::vector<NormalPath> cs;
    for (long j = 1; j <= 6; ++j) cs.push_back(G.curve(j, 3));
    for (auto _ : st) benchmark::DoNotOptimize(fills(M.complex, cs));
}
BENCHMARK(BM_FillFrame)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_LemmaTriple(benchmark::State& st) {
    const CurveModel& M = model();
    TwistWord w = family_word(build_chain(2, 4, 1), st.range(0));
    GammaCache G(M, w);
    (void)lemma_twisting(G, -2, 3, 8);
    for (auto _ : st) benchmark::DoNotOptimize(lemma_twisting(G, -2, 3, 8));
}
BENCHMARK(BM_LemmaTriple)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_ObstructionCheck(benchmark::State& st) {
    ChainConfig c = build_chain(2, 4, 1);
    for (auto _ : st) benchmark::DoNotOptimize(obstruction_check(c));
}
BENCHMARK(BM_ObstructionCheck);

BENCHMARK_MAIN();
