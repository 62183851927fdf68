#include <benchmark/benchmark.h>

#include <vector>

#include "debyedec/decomposer.hpp"
#include "debyedec/diagnostics.hpp"
#include "debyedec/model.hpp"
#include "debyedec/optimizer.hpp"
#include "debyedec/random.hpp"
#include "debyedec/synth.hpp"

using namespace debyedec;

namespace {

SyntheticSpectrum three_peak(double noise_sd) {
    SynthSpec spec;
    spec.components = {make_component(1.0, 450.0, 1.0),
                       make_component(1.0, 550.0, 1.0),
                       make_component(1.0, 650.0, 1.0)};
    spec.t_min = 350.0;
    spec.t_max = 750.0;
    spec.n_points = 400;
    spec.noise_sd = noise_sd;
    spec.f = 1.0;
    spec.seed = 7;
    return generate(spec);
}

const ParameterVector kThreePeakParams = {1.0, 1.0, 1.0,
                                          450.0, 550.0, 650.0};

void bm_spectrum_model(benchmark::State& state) {
    const SyntheticSpectrum s = three_peak(0.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            spectrum_model(s.spectrum.temperatures, kThreePeakParams, 1.0));
}
BENCHMARK(bm_spectrum_model);

void bm_model_jacobian(benchmark::State& state) {
    const SyntheticSpectrum s = three_peak(0.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            model_jacobian(s.spectrum.temperatures, kThreePeakParams, 1.0));
}
BENCHMARK(bm_model_jacobian);

void bm_fit_three_peaks(benchmark::State& state) {
    const SyntheticSpectrum s = three_peak(0.01);
    const ParameterVector start = {1.2, 0.8, 1.1, 460.0, 540.0, 655.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(fit(s.spectrum, start, LMOptions{}, 1.0));
}
BENCHMARK(bm_fit_three_peaks);

void bm_anderson_darling(benchmark::State& state) {
    NormalSampler normal(5);
    std::vector<double> sample(400);
    for (double& v : sample) v = normal();
    for (auto _ : state)
        benchmark::DoNotOptimize(anderson_darling_test(sample, 0.05));
}
BENCHMARK(bm_anderson_darling);

void bm_durbin_watson(benchmark::State& state) {
    const SyntheticSpectrum s = three_peak(0.01);
    NormalSampler normal(5);
    std::vector<double> residuals(400);
    for (double& v : residuals) v = normal();
    for (auto _ : state)
        benchmark::DoNotOptimize(durbin_watson_test(
            residuals, s.spectrum.temperatures, 5, 0.05, 100, 42));
}
BENCHMARK(bm_durbin_watson);

void bm_decompose_three_peaks(benchmark::State& state) {
    const SyntheticSpectrum s = three_peak(0.01);
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose(s.spectrum, {}));
}
BENCHMARK(bm_decompose_three_peaks);

} // namespace

BENCHMARK_MAIN();
