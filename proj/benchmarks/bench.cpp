#include <benchmark/benchmark.h>

#include "qrmat/pbw.hpp"
#include "qrmat/raffine.hpp"
#include "qrmat/rfinite.hpp"

using namespace qrmat;

namespace {

const SuperData& big_instance() {
    static SuperData sd = SuperData::build(Family::Osp, 5, 2, {1, 0, 0});
    return sd;
}

const SuperData& mid_instance() {
    static SuperData sd = SuperData::build(Family::Osp, 3, 2, {1, 0});
    return sd;
}

void BM_BuildR0(benchmark::State& state) {
    const SuperData& sd = big_instance();
    for (auto _ : state) benchmark::DoNotOptimize(build_R0(sd));
}
BENCHMARK(BM_BuildR0);

void BM_ConstantYbeTriple(benchmark::State& state) {
    const SuperData& sd = mid_instance();
    QMat r = build_R0(sd);
    QMat r12 = leg_embed(r, Legs::L12);
    QMat r13 = leg_embed(r, Legs::L13);
    QMat r23 = leg_embed(r, Legs::L23);
    for (auto _ : state) benchmark::DoNotOptimize(r12 * r13 * r23);
}
BENCHMARK(BM_ConstantYbeTriple);

void BM_ThetaFactorized(benchmark::State& state) {
    const SuperData& sd = mid_instance();
    FinRep rep = build_finrep(sd);
    for (auto _ : state) benchmark::DoNotOptimize(theta_factorized(sd, rep));
}
BENCHMARK(BM_ThetaFactorized);

void BM_TwistedPairing(benchmark::State& state) {
    const SuperData& sd = big_instance();
    auto words = dominant_lyndon(sd);
    const DominantWord* longest = &words.front();
    for (const auto& w : words)
        if (w.word.size() > longest->word.size()) longest = &w;
    FreeElem r = concat_bracket(sd, longest->word);
    for (auto _ : state) benchmark::DoNotOptimize(pair_tw(sd, r, r));
}
BENCHMARK(BM_TwistedPairing);

void BM_SpectralYbeSpecialized(benchmark::State& state) {
    const SuperData& sd = big_instance();
    std::vector<std::array<Rational, 3>> pts = {{Rational(2), Rational(3), Rational(5)}};
    for (auto _ : state)
        benchmark::DoNotOptimize(check_spectral_ybe_specialized(sd, pts));
}
BENCHMARK(BM_SpectralYbeSpecialized);

}  // namespace

BENCHMARK_MAIN();
