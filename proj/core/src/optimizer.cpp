#include "debyedec/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Cholesky>

namespace debyedec {

namespace {

constexpr double kT0Scale = 1e-2;
constexpr double kDampingFloor = 1e-14;
constexpr double kDampingCeiling = 1e120;

void check_options(const LMOptions& opts) {
    if (opts.max_iterations < 1)
        throw std::invalid_argument("LMOptions: max_iterations must be >= 1");
    if (!(opts.initial_damping > 0.0))
        throw std::invalid_argument("LMOptions: initial_damping must be positive");
    if (!(opts.damping_increase > 1.0))
        throw std::invalid_argument("LMOptions: damping_increase must exceed 1");
    if (!(opts.damping_decrease > 0.0 && opts.damping_decrease < 1.0))
        throw std::invalid_argument("LMOptions: damping_decrease must lie in (0,1)");
    if (opts.gradient_tolerance < 0.0 || opts.step_tolerance < 0.0 ||
        opts.sse_tolerance < 0.0)
        throw std::invalid_argument("LMOptions: tolerances must be >= 0");
    if (opts.gradient_tolerance == 0.0 && opts.step_tolerance == 0.0 &&
        opts.sse_tolerance == 0.0)
        throw std::invalid_argument("LMOptions: at least one tolerance must be positive");
}

std::vector<double> residuals_at(const Spectrum& spectrum,
                                 const ParameterVector& params, double f,
                                 const PhysicalConstants& c) {
    const auto model = spectrum_model(spectrum.temperatures, params, f, c);
    std::vector<double> r(model.size());
    for (std::size_t i = 0; i < model.size(); ++i)
        r[i] = spectrum.intensities[i] - model[i];
    return r;
}

double sum_squares(const std::vector<double>& r) {
    double s = 0.0;
    for (double v : r) s += v * v;
    return s;
}

} // namespace

const char* to_string(TerminationReason reason) {
    switch (reason) {
        case TerminationReason::gradient: return "gradient";
        case TerminationReason::step: return "step";
        case TerminationReason::sse: return "sse";
        case TerminationReason::max_iterations: return "max_iterations";
    }
    return "unknown";
}

double sum_squared_residuals(const Spectrum& spectrum,
                             const ParameterVector& params, double f,
                             const PhysicalConstants& c) {
    if (spectrum.intensities.size() != spectrum.temperatures.size())
        throw std::invalid_argument("sum_squared_residuals: spectrum length mismatch");
    return sum_squares(residuals_at(spectrum, params, f, c));
}

FitResult fit(const Spectrum& spectrum, const ParameterVector& initial,
              const LMOptions& opts, double f, const PhysicalConstants& c) {
    check_options(opts);
    validate(spectrum);
    const std::size_t n_comp = component_count(initial);
    const std::size_t dim = 2 * n_comp;
    const std::size_t m = spectrum.size();
    if (m < dim + 1)
        throw std::invalid_argument(
            "fit: spectrum must have at least 2n+1 points for n components");

    const double t0_lo = spectrum.temperatures.front() / 2.0;
    const double t0_hi = 2.0 * spectrum.temperatures.back();
    const auto clamp_t0 = [&](ParameterVector& p) {
        for (std::size_t j = n_comp; j < dim; ++j)
            p[j] = std::clamp(p[j], t0_lo, t0_hi);
    };

    ParameterVector params = initial;
    clamp_t0(params);

    std::vector<double> residuals = residuals_at(spectrum, params, f, c);
    double sse = sum_squares(residuals);

    FitResult result;
    result.sse_trace.push_back(sse);

    // scaled parameter vector: Q0 block unchanged, T0 block * 1e-2
    const auto scaled_norm = [&](const ParameterVector& p) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_comp; ++j) s += p[j] * p[j];
        for (std::size_t j = n_comp; j < dim; ++j)
            s += (p[j] * kT0Scale) * (p[j] * kT0Scale);
        return std::sqrt(s);
    };

    double damping = opts.initial_damping;
    int iterations = 0;
    bool converged = false;
    auto reason = TerminationReason::max_iterations;

    const auto ei_dim = static_cast<Eigen::Index>(dim);
    const auto ei_m = static_cast<Eigen::Index>(m);

    while (iterations < opts.max_iterations) {
        ++iterations;

        Eigen::MatrixXd jac = model_jacobian(spectrum.temperatures, params, f, c);
        // scale T0 columns onto the internal parameterization
        for (std::size_t j = n_comp; j < dim; ++j)
            jac.col(static_cast<Eigen::Index>(j)) /= kT0Scale;

        Eigen::VectorXd r(ei_m);
        for (std::size_t i = 0; i < m; ++i)
            r(static_cast<Eigen::Index>(i)) = residuals[i];

        const Eigen::VectorXd gradient = jac.transpose() * r;
        if (gradient.lpNorm<Eigen::Infinity>() <= opts.gradient_tolerance) {
            converged = true;
            reason = TerminationReason::gradient;
            break;
        }
        const Eigen::MatrixXd normal = jac.transpose() * jac;

        bool step_taken = false;
        while (damping <= kDampingCeiling) {
            Eigen::MatrixXd damped = normal;
            damped.diagonal().array() += damping;
            const Eigen::VectorXd h = damped.ldlt().solve(gradient);

            if (!h.allFinite()) {
                damping *= opts.damping_increase;
                continue;
            }

            const double param_norm = scaled_norm(params);
            const bool tiny_step =
                h.norm() <= opts.step_tolerance * (param_norm + opts.step_tolerance);

            ParameterVector trial = params;
            for (std::size_t j = 0; j < n_comp; ++j)
                trial[j] += h(static_cast<Eigen::Index>(j));
            for (std::size_t j = n_comp; j < dim; ++j)
                trial[j] += h(static_cast<Eigen::Index>(j)) / kT0Scale;
            clamp_t0(trial);

            const std::vector<double> trial_residuals =
                residuals_at(spectrum, trial, f, c);
            const double trial_sse = sum_squares(trial_residuals);

            if (std::isfinite(trial_sse) && trial_sse < sse) {
                const double improvement = sse - trial_sse;
                params = std::move(trial);
                residuals = trial_residuals;
                sse = trial_sse;
                result.sse_trace.push_back(sse);
                damping = std::max(damping * opts.damping_decrease, kDampingFloor);
                step_taken = true;
                if (improvement <= opts.sse_tolerance * std::max(sse, 1e-300)) {
                    converged = true;
                    reason = TerminationReason::sse;
                } else if (tiny_step) {
                    converged = true;
                    reason = TerminationReason::step;
                }
                break;
            }
            if (tiny_step) {
                // no improving direction and the proposed move is negligible
                converged = true;
                reason = TerminationReason::step;
                break;
            }
            damping *= opts.damping_increase;
        }
        if (converged || !step_taken)
            break;
    }

    result.params = std::move(params);
    result.residuals = std::move(residuals);
    result.sse = sse;
    result.iterations = iterations;
    result.converged = converged;
    result.termination_reason =
        converged ? reason : TerminationReason::max_iterations;
    return result;
}

} // namespace debyedec
