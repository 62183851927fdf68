#include "debyedec/decomposer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace debyedec {

namespace {

void check_config(const DecompositionConfig& config) {
    if (!(config.f > 0.0))
        throw std::invalid_argument("decompose: f must be positive");
    if (!(config.alpha > 0.0) || !(config.alpha < 1.0))
        throw std::invalid_argument("decompose: alpha must lie in (0, 1)");
    if (config.max_components < 1)
        throw std::invalid_argument("decompose: max_components must be >= 1");
    if (config.dw_reps < 1)
        throw std::invalid_argument("decompose: dw_reps must be >= 1");
}

double max_abs_intensity(const Spectrum& spectrum) {
    double m = 0.0;
    for (double q : spectrum.intensities) m = std::max(m, std::abs(q));
    return m;
}

std::string format_sse_warning(double before, double after) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "adding a component did not reduce the squared error "
                  "(%.6g -> %.6g)",
                  before, after);
    return buf;
}

} // namespace

const char* to_string(DecompositionStatus status) {
    switch (status) {
    case DecompositionStatus::adequate: return "adequate";
    case DecompositionStatus::cap_reached: return "cap_reached";
    }
    return "unknown";
}

ParameterVector initial_guess(const Spectrum& spectrum, int n_components,
                              const ParameterVector& base,
                              const DecompositionConfig& config) {
    if (n_components < 1)
        throw std::invalid_argument("initial_guess: n_components must be >= 1");
    const int n_base = base.empty() ? 0 : component_count(base);
    if (n_base >= n_components)
        throw std::invalid_argument(
            "initial_guess: base model already has that many components");

    std::vector<double> q0(base.begin(), base.begin() + n_base);
    std::vector<double> t0(base.begin() + n_base, base.end());

    std::vector<double> residual(spectrum.size());
    for (int k = n_base; k < n_components; ++k) {
        ParameterVector current;
        current.reserve(2 * static_cast<std::size_t>(k));
        current.insert(current.end(), q0.begin(), q0.end());
        current.insert(current.end(), t0.begin(), t0.end());
        const std::vector<double> predicted =
            current.empty()
                ? std::vector<double>(spectrum.size(), 0.0)
                : spectrum_model(spectrum.temperatures, current, config.f,
                                 config.constants);
        for (std::size_t i = 0; i < spectrum.size(); ++i)
            residual[i] = spectrum.intensities[i] - predicted[i];
        std::size_t best = 0;
        for (std::size_t i = 1; i < residual.size(); ++i)
            if (std::abs(residual[i]) > std::abs(residual[best])) best = i;
        q0.push_back(residual[best]);
        t0.push_back(spectrum.temperatures[best]);
    }

    ParameterVector guess;
    guess.reserve(2 * static_cast<std::size_t>(n_components));
    guess.insert(guess.end(), q0.begin(), q0.end());
    guess.insert(guess.end(), t0.begin(), t0.end());
    return guess;
}

DecompositionResult decompose(const Spectrum& spectrum,
                              const DecompositionConfig& config) {
    check_config(config);
    validate(spectrum);
    if (spectrum.size() <= 2 * static_cast<std::size_t>(config.max_components))
        throw std::invalid_argument(
            "decompose: need more than 2*max_components data points");

    DecompositionResult result;
    result.config = config;

    DiagnosticsConfig diag;
    diag.alpha = config.alpha;
    diag.dw_reps = config.dw_reps;
    diag.dw_seed = config.seed;

    const double spurious_floor = 1e-3 * max_abs_intensity(spectrum);

    ParameterVector last_good;       // parameters of the last finished fit
    std::optional<double> last_sse;  // its squared error
    for (int n = 1; n <= config.max_components; ++n) {
        Attempt attempt;
        attempt.n_components = n;
        try {
            ParameterVector guess =
                initial_guess(spectrum, n, last_good, config);
            FitResult fitted = fit(spectrum, guess, config.lm, config.f,
                                   config.constants);
            if (last_sse && fitted.sse > *last_sse) {
                // A fresh peak placed on the largest residual can overshoot;
                // retry once with the added amplitudes halved.
                const int n_prev = static_cast<int>(last_good.size()) / 2;
                ParameterVector damped = guess;
                for (int j = n_prev; j < n; ++j)
                    damped[static_cast<std::size_t>(j)] *= 0.5;
                FitResult retry = fit(spectrum, damped, config.lm, config.f,
                                      config.constants);
                if (retry.sse < fitted.sse) fitted = std::move(retry);
                if (fitted.sse > *last_sse)
                    attempt.warnings.push_back(
                        format_sse_warning(*last_sse, fitted.sse));
            }

            const int n_free =
                config.dof_mode == DofMode::corrected ? 2 * n : n;
            AdequacyReport report =
                assess_adequacy(fitted, spectrum, n_free, diag);

            for (int j = 0; j < n; ++j) {
                const double q0 = fitted.params[static_cast<std::size_t>(j)];
                if (q0 < 0.0 || std::abs(q0) < spurious_floor) {
                    report.adequate = false;
                    report.notes.push_back(
                        "component " + std::to_string(j + 1) +
                        " has a spurious amplitude; model rejected");
                    break;
                }
            }

            last_good = fitted.params;
            last_sse = fitted.sse;
            attempt.fit = std::move(fitted);
            attempt.report = std::move(report);
        } catch (const std::exception& err) {
            attempt.error = err.what();
            result.attempts.push_back(std::move(attempt));
            continue;
        }

        const bool adequate = attempt.report->adequate;
        result.attempts.push_back(std::move(attempt));
        if (adequate) {
            result.status = DecompositionStatus::adequate;
            result.accepted = result.attempts.size() - 1;
            return result;
        }
    }

    result.status = DecompositionStatus::cap_reached;
    return result;
}

} // namespace debyedec
