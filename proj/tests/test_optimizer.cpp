#include "doctest.h"

#include <cmath>
#include <vector>

#include "debyedec/model.hpp"
#include "debyedec/optimizer.hpp"
#include "debyedec/synth.hpp"

using namespace debyedec;

namespace {

Spectrum single_peak_spectrum() {
    SynthSpec spec;
    spec.components = {make_component(1.0, 550.0, 1.0)};
    spec.t_min = 350.0;
    spec.t_max = 750.0;
    spec.n_points = 101;
    spec.noise_sd = 0.0;
    spec.f = 1.0;
    return generate(spec).spectrum;
}

SyntheticSpectrum canonical_noisy(std::uint64_t seed) {
    SynthSpec spec;
    spec.components = {make_component(1.0, 450.0, 1.0),
                       make_component(1.0, 550.0, 1.0),
                       make_component(1.0, 650.0, 1.0)};
    spec.t_min = 350.0;
    spec.t_max = 750.0;
    spec.n_points = 400;
    spec.noise_sd = 0.01;
    spec.f = 1.0;
    spec.seed = seed;
    return generate(spec);
}

} // namespace

TEST_CASE("noise-free single peak is recovered to 1e-8") {
    const Spectrum spectrum = single_peak_spectrum();
    const FitResult result = fit(spectrum, {0.8, 500.0}, LMOptions{}, 1.0);
    CHECK(result.converged);
    CHECK(std::abs(result.params[0] - 1.0) < 1e-8);
    CHECK(std::abs(result.params[1] - 550.0) / 550.0 < 1e-8);
    CHECK(result.sse < 1e-16 * static_cast<double>(spectrum.size()));
}

TEST_CASE("starting at the exact minimum terminates immediately") {
    const Spectrum spectrum = single_peak_spectrum();
    const FitResult result = fit(spectrum, {1.0, 550.0}, LMOptions{}, 1.0);
    CHECK(result.converged);
    CHECK(result.iterations <= 2);
    CHECK((result.termination_reason == TerminationReason::gradient ||
           result.termination_reason == TerminationReason::sse));
    CHECK(result.sse == 0.0);
}

TEST_CASE("canonical noisy spectrum: T0 recovered within 2 K from coarse guesses") {
    const SyntheticSpectrum synthetic = canonical_noisy(11);
    const ParameterVector guess = {1.25, 0.75, 1.2, 475.0, 522.0, 668.0};
    const FitResult result = fit(synthetic.spectrum, guess, LMOptions{}, 1.0);
    CHECK(result.converged);
    std::vector<double> t0 = {result.params[3], result.params[4],
                              result.params[5]};
    std::sort(t0.begin(), t0.end());
    CHECK(std::abs(t0[0] - 450.0) <= 2.0);
    CHECK(std::abs(t0[1] - 550.0) <= 2.0);
    CHECK(std::abs(t0[2] - 650.0) <= 2.0);
}

TEST_CASE("sum_squared_residuals anchors") {
    const Spectrum spectrum = single_peak_spectrum();
    SUBCASE("generating parameters give zero") {
        double q_sq = 0.0;
        for (double q : spectrum.intensities) q_sq += q * q;
        CHECK(sum_squared_residuals(spectrum, {1.0, 550.0}, 1.0) <=
              1e-20 * q_sq);
    }
    SUBCASE("zero amplitudes give the intensity sum of squares") {
        double q_sq = 0.0;
        for (double q : spectrum.intensities) q_sq += q * q;
        CHECK(sum_squared_residuals(spectrum, {0.0, 550.0}, 1.0) == q_sq);
    }
    SUBCASE("pinned five-point fixture") {
        Spectrum five;
        five.temperatures = {380.0, 450.0, 520.0, 590.0, 660.0};
        five.intensities = {0.9, 1.4, 0.3, 0.55, 0.25};
        const ParameterVector params = {1.5, 0.5, 430.0, 610.0};
        CHECK(sum_squared_residuals(five, params, 1.0) ==
              doctest::Approx(1.2890002104056075).epsilon(1e-14));
    }
}

TEST_CASE("accepted sse trace is non-increasing and bounded by the start") {
    const SyntheticSpectrum synthetic = canonical_noisy(3);
    const ParameterVector guess = {0.8, 1.3, 0.9, 470.0, 540.0, 660.0};
    const FitResult result = fit(synthetic.spectrum, guess, LMOptions{}, 1.0);
    REQUIRE(!result.sse_trace.empty());
    for (std::size_t i = 1; i < result.sse_trace.size(); ++i)
        CHECK(result.sse_trace[i] <= result.sse_trace[i - 1]);
    CHECK(result.sse <= result.sse_trace.front());
    CHECK(result.sse == result.sse_trace.back());
}

TEST_CASE("fit is equivariant under component relabeling") {
    const SyntheticSpectrum synthetic = canonical_noisy(5);
    const FitResult ab = fit(synthetic.spectrum,
                             {0.9, 1.1, 0.95, 460.0, 545.0, 655.0},
                             LMOptions{}, 1.0);
    const FitResult ba = fit(synthetic.spectrum,
                             {0.95, 1.1, 0.9, 655.0, 545.0, 460.0},
                             LMOptions{}, 1.0);
    CHECK(ab.params[0] == doctest::Approx(ba.params[2]).epsilon(1e-9));
    CHECK(ab.params[1] == doctest::Approx(ba.params[1]).epsilon(1e-9));
    CHECK(ab.params[2] == doctest::Approx(ba.params[0]).epsilon(1e-9));
    CHECK(ab.params[3] == doctest::Approx(ba.params[5]).epsilon(1e-9));
    CHECK(ab.params[4] == doctest::Approx(ba.params[4]).epsilon(1e-9));
    CHECK(ab.params[5] == doctest::Approx(ba.params[3]).epsilon(1e-9));
}

TEST_CASE("fit is bitwise deterministic") {
    const SyntheticSpectrum synthetic = canonical_noisy(9);
    const ParameterVector guess = {1.1, 0.9, 1.0, 445.0, 556.0, 652.0};
    const FitResult a = fit(synthetic.spectrum, guess, LMOptions{}, 1.0);
    const FitResult b = fit(synthetic.spectrum, guess, LMOptions{}, 1.0);
    CHECK(a.params == b.params);
    CHECK(a.sse == b.sse);
    CHECK(a.iterations == b.iterations);
    CHECK(a.residuals == b.residuals);
}

TEST_CASE("trial T0 values stay inside the clamp region") {
    const Spectrum spectrum = single_peak_spectrum();
    const double lo = spectrum.temperatures.front() / 2.0;
    const double hi = 2.0 * spectrum.temperatures.back();
    const FitResult result = fit(spectrum, {0.5, 5000.0}, LMOptions{}, 1.0);
    CHECK(result.params[1] >= lo);
    CHECK(result.params[1] <= hi);
}

TEST_CASE("fit input validation") {
    const Spectrum spectrum = single_peak_spectrum();
    SUBCASE("odd parameter layout") {
        CHECK_THROWS_AS(fit(spectrum, {1.0, 2.0, 3.0}, LMOptions{}, 1.0),
                        std::invalid_argument);
    }
    SUBCASE("too few points for the parameter count") {
        Spectrum tiny;
        tiny.temperatures = {400.0, 500.0, 600.0, 700.0};
        tiny.intensities = {0.1, 0.2, 0.3, 0.1};
        CHECK_THROWS_AS(
            fit(tiny, {1.0, 1.0, 450.0, 650.0}, LMOptions{}, 1.0),
            std::invalid_argument);
    }
    SUBCASE("all tolerances zero") {
        LMOptions opts;
        opts.gradient_tolerance = 0.0;
        opts.step_tolerance = 0.0;
        opts.sse_tolerance = 0.0;
        CHECK_THROWS_AS(fit(spectrum, {1.0, 550.0}, opts, 1.0),
                        std::invalid_argument);
    }
    SUBCASE("bad damping configuration") {
        LMOptions opts;
        opts.initial_damping = 0.0;
        CHECK_THROWS_AS(fit(spectrum, {1.0, 550.0}, opts, 1.0),
                        std::invalid_argument);
        opts = LMOptions{};
        opts.damping_increase = 0.5;
        CHECK_THROWS_AS(fit(spectrum, {1.0, 550.0}, opts, 1.0),
                        std::invalid_argument);
        opts = LMOptions{};
        opts.max_iterations = 0;
        CHECK_THROWS_AS(fit(spectrum, {1.0, 550.0}, opts, 1.0),
                        std::invalid_argument);
    }
}
