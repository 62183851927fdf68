#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "debyedec/decomposer.hpp"
#include "debyedec/synth.hpp"

using namespace debyedec;

namespace {

SyntheticSpectrum canonical_synthetic(std::uint64_t seed = 7) {
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

std::vector<double> sorted_t0(const FitResult& fit) {
    const std::size_t n = fit.params.size() / 2;
    std::vector<double> t0(fit.params.begin() +
                               static_cast<std::ptrdiff_t>(n),
                           fit.params.end());
    std::sort(t0.begin(), t0.end());
    return t0;
}

} // namespace

TEST_CASE("decompose stops at one component for single-peak data") {
    SynthSpec spec;
    spec.components = {make_component(1.0, 550.0, 1.0)};
    spec.t_min = 350.0;
    spec.t_max = 750.0;
    spec.n_points = 400;
    spec.noise_sd = 0.01;
    spec.f = 1.0;
    spec.seed = 3;
    const SyntheticSpectrum s = generate(spec);

    const DecompositionResult result = decompose(s.spectrum, {});
    CHECK(result.status == DecompositionStatus::adequate);
    REQUIRE(result.accepted.has_value());
    CHECK(*result.accepted == 0);
    REQUIRE(result.accepted_attempt() != nullptr);
    CHECK(result.accepted_attempt()->n_components == 1);
    const FitResult& fit = *result.accepted_attempt()->fit;
    CHECK(fit.params[0] == doctest::Approx(1.0).epsilon(0.03));
    CHECK(fit.params[1] == doctest::Approx(550.0).epsilon(0.004));
}

TEST_CASE("decompose recovers the canonical three-peak spectrum") {
    const SyntheticSpectrum s = canonical_synthetic();
    const DecompositionResult result = decompose(s.spectrum, {});

    CHECK(result.status == DecompositionStatus::adequate);
    REQUIRE(result.accepted.has_value());
    const Attempt& accepted = *result.accepted_attempt();
    CHECK(accepted.n_components == 3);

    const std::vector<double> t0 = sorted_t0(*accepted.fit);
    REQUIRE(t0.size() == 3);
    CHECK(std::abs(t0[0] - 450.0) < 2.0);
    CHECK(std::abs(t0[1] - 550.0) < 2.0);
    CHECK(std::abs(t0[2] - 650.0) < 2.0);

    // the two-component attempt exists and was judged inadequate
    REQUIRE(result.attempts.size() == 3);
    CHECK(result.attempts[1].n_components == 2);
    REQUIRE(result.attempts[1].report.has_value());
    CHECK(!result.attempts[1].report->adequate);
}

TEST_CASE("decompose reports cap_reached without inventing an acceptance") {
    const SyntheticSpectrum s = canonical_synthetic();
    DecompositionConfig config;
    config.max_components = 1;
    const DecompositionResult result = decompose(s.spectrum, config);
    CHECK(result.status == DecompositionStatus::cap_reached);
    CHECK(!result.accepted.has_value());
    CHECK(result.accepted_attempt() == nullptr);
    REQUIRE(result.attempts.size() == 1);
    REQUIRE(result.attempts[0].report.has_value());
    CHECK(!result.attempts[0].report->adequate);
}

TEST_CASE("initial_guess places the first component on the data maximum") {
    SynthSpec spec;
    spec.components = {make_component(0.8, 520.0, 1.0)};
    spec.t_min = 350.0;
    spec.t_max = 750.0;
    spec.n_points = 201;
    spec.noise_sd = 0.0;
    spec.f = 1.0;
    const SyntheticSpectrum s = generate(spec);

    const ParameterVector guess = initial_guess(s.spectrum, 1, {}, {});
    REQUIRE(guess.size() == 2);
    const auto it = std::max_element(s.spectrum.intensities.begin(),
                                     s.spectrum.intensities.end());
    const std::size_t at = static_cast<std::size_t>(
        it - s.spectrum.intensities.begin());
    CHECK(guess[0] == s.spectrum.intensities[at]);
    CHECK(guess[1] == s.spectrum.temperatures[at]);
}

TEST_CASE("initial_guess appends at the largest absolute residual") {
    // baseline model that overshoots everywhere except near 650 K
    const SyntheticSpectrum s = canonical_synthetic();
    const ParameterVector base = {1.0, 1.0, 450.0, 550.0};
    const ParameterVector guess = initial_guess(s.spectrum, 3, base, {});
    REQUIRE(guess.size() == 6);
    // base survives in place: [q1 q2 q3 t1 t2 t3]
    CHECK(guess[0] == 1.0);
    CHECK(guess[1] == 1.0);
    CHECK(guess[3] == 450.0);
    CHECK(guess[4] == 550.0);
    // the appended component sits near the unexplained 650 K peak
    CHECK(std::abs(guess[5] - 650.0) < 20.0);
    CHECK(guess[2] > 0.5);
}

TEST_CASE("decompose attempt history is ordered and monotone in sse") {
    const SyntheticSpectrum s = canonical_synthetic();
    const DecompositionResult result = decompose(s.spectrum, {});
    REQUIRE(result.attempts.size() >= 2);
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < result.attempts.size(); ++i) {
        const Attempt& a = result.attempts[i];
        CHECK(a.n_components == static_cast<int>(i) + 1);
        REQUIRE(a.fit.has_value());
        const bool improved = a.fit->sse <= prev;
        const bool warned = !a.warnings.empty();
        CHECK((improved || warned));
        prev = a.fit->sse;
    }
}

TEST_CASE("decompose is deterministic") {
    const SyntheticSpectrum s = canonical_synthetic();
    const DecompositionResult a = decompose(s.spectrum, {});
    const DecompositionResult b = decompose(s.spectrum, {});
    REQUIRE(a.attempts.size() == b.attempts.size());
    CHECK(a.status == b.status);
    CHECK(a.accepted == b.accepted);
    for (std::size_t i = 0; i < a.attempts.size(); ++i) {
        REQUIRE(a.attempts[i].fit.has_value());
        REQUIRE(b.attempts[i].fit.has_value());
        CHECK(a.attempts[i].fit->sse == b.attempts[i].fit->sse);
        CHECK(a.attempts[i].fit->params == b.attempts[i].fit->params);
    }
}

TEST_CASE("decompose never accepts fewer components than the truth") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const SyntheticSpectrum s = canonical_synthetic(seed);
        const DecompositionResult result = decompose(s.spectrum, {});
        if (result.accepted)
            CHECK(result.accepted_attempt()->n_components >= 3);
    }
}

TEST_CASE("decompose validates configuration and data") {
    const SyntheticSpectrum s = canonical_synthetic();

    SUBCASE("non-positive frequency") {
        DecompositionConfig config;
        config.f = 0.0;
        CHECK_THROWS_AS(decompose(s.spectrum, config), std::invalid_argument);
    }
    SUBCASE("alpha outside (0, 1)") {
        DecompositionConfig config;
        config.alpha = 1.0;
        CHECK_THROWS_AS(decompose(s.spectrum, config), std::invalid_argument);
    }
    SUBCASE("component cap must be positive") {
        DecompositionConfig config;
        config.max_components = 0;
        CHECK_THROWS_AS(decompose(s.spectrum, config), std::invalid_argument);
    }
    SUBCASE("bootstrap replicates must be positive") {
        DecompositionConfig config;
        config.dw_reps = 0;
        CHECK_THROWS_AS(decompose(s.spectrum, config), std::invalid_argument);
    }
    SUBCASE("too few points for the cap") {
        Spectrum tiny;
        for (int i = 0; i < 16; ++i) {
            tiny.temperatures.push_back(400.0 + 10.0 * i);
            tiny.intensities.push_back(0.1);
        }
        DecompositionConfig config;
        config.max_components = 8;  // needs > 16 points
        CHECK_THROWS_AS(decompose(tiny, config), std::invalid_argument);
    }
}

TEST_CASE("dof_mode changes only the variance test accounting") {
    const SyntheticSpectrum s = canonical_synthetic();
    DecompositionConfig corrected;
    DecompositionConfig paper;
    paper.dof_mode = DofMode::paper;

    const DecompositionResult a = decompose(s.spectrum, corrected);
    const DecompositionResult b = decompose(s.spectrum, paper);
    REQUIRE(a.accepted.has_value());
    REQUIRE(b.accepted.has_value());
    // same model path on this clean example; F statistics differ slightly
    CHECK(a.accepted_attempt()->n_components ==
          b.accepted_attempt()->n_components);
    const AdequacyReport& ra = *a.accepted_attempt()->report;
    const AdequacyReport& rb = *b.accepted_attempt()->report;
    REQUIRE(ra.variance.has_value());
    REQUIRE(rb.variance.has_value());
    CHECK(ra.variance->statistic != rb.variance->statistic);
    CHECK(ra.normality.statistic == rb.normality.statistic);
}
