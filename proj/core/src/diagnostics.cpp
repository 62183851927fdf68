#include "debyedec/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "debyedec/random.hpp"
#include "debyedec/special_functions.hpp"

namespace debyedec {

namespace {

double mean_of(std::span<const double> x) {
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

// unbiased sample variance
double variance_of(std::span<const double> x, double mean) {
    double s = 0.0;
    for (double v : x) s += (v - mean) * (v - mean);
    return s / static_cast<double>(x.size() - 1);
}

// Stephens' piecewise-exponential map from the corrected A*^2 to a p-value
// (D'Agostino & Stephens 1986, Table 4.9), with the customary saturation
// beyond A*^2 = 10.
double ad_p_value(double aa) {
    if (aa < 0.2)
        return 1.0 - std::exp(-13.436 + 101.14 * aa - 223.73 * aa * aa);
    if (aa < 0.34)
        return 1.0 - std::exp(-8.318 + 42.796 * aa - 59.938 * aa * aa);
    if (aa < 0.6)
        return std::exp(0.9177 - 4.279 * aa - 1.38 * aa * aa);
    if (aa < 10.0)
        return std::exp(1.2937 - 5.709 * aa + 0.0186 * aa * aa);
    return 3.7e-24;
}

struct Ols {
    double intercept = 0.0;
    double slope = 0.0;
};

Ols ols_fit(std::span<const double> y, std::span<const double> x) {
    const double xbar = mean_of(x);
    const double ybar = mean_of(y);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - xbar;
        sxx += dx * dx;
        sxy += dx * (y[i] - ybar);
    }
    Ols ols;
    ols.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    ols.intercept = ybar - ols.slope * xbar;
    return ols;
}

void ols_residuals(std::span<const double> y, std::span<const double> x,
                   std::vector<double>& e) {
    const Ols ols = ols_fit(y, x);
    e.resize(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        e[i] = y[i] - ols.intercept - ols.slope * x[i];
}

// d_L = sum_{i>=L} (e_i - e_{i-L})^2 / sum e_i^2
double dw_statistic(const std::vector<double>& e, int lag, double denom) {
    double num = 0.0;
    for (std::size_t i = static_cast<std::size_t>(lag); i < e.size(); ++i) {
        const double d = e[i] - e[i - static_cast<std::size_t>(lag)];
        num += d * d;
    }
    return num / denom;
}

} // namespace

TestResult anderson_darling_test(std::span<const double> sample, double alpha) {
    const std::size_t n = sample.size();
    if (n < 8)
        throw std::invalid_argument(
            "anderson_darling_test: sample must hold at least 8 values");
    const double mean = mean_of(sample);
    const double var = variance_of(sample, mean);
    if (!(var > 0.0))
        throw std::invalid_argument("anderson_darling_test: constant sample");
    const double sd = std::sqrt(var);

    std::vector<double> y(sample.begin(), sample.end());
    std::sort(y.begin(), y.end());
    for (double& v : y) v = (v - mean) / sd;

    const double dn = static_cast<double>(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = 2.0 * static_cast<double>(i + 1) - 1.0;
        sum += w * (log_normal_cdf(y[i]) + log_normal_cdf(-y[n - 1 - i]));
    }
    const double a2 = -dn - sum / dn;
    const double corrected = a2 * (1.0 + 0.75 / dn + 2.25 / (dn * dn));
    const double p = std::clamp(ad_p_value(corrected), 0.0, 1.0);
    return TestResult{a2, p, p >= alpha, alpha};
}

TestResult one_sample_t_test(std::span<const double> sample, double alpha) {
    const std::size_t n = sample.size();
    if (n < 2)
        throw std::invalid_argument("one_sample_t_test: sample must hold at least 2 values");
    const double mean = mean_of(sample);
    const double var = variance_of(sample, mean);
    if (!(var > 0.0))
        throw std::invalid_argument("one_sample_t_test: constant sample");
    const double t = mean / std::sqrt(var / static_cast<double>(n));
    const double p = std::clamp(
        2.0 * (1.0 - t_cdf(std::abs(t), static_cast<int>(n) - 1)), 0.0, 1.0);
    return TestResult{t, p, p >= alpha, alpha};
}

DurbinWatsonResult durbin_watson_test(std::span<const double> residuals,
                                      std::span<const double> regressor,
                                      int max_lag, double alpha, int reps,
                                      std::uint64_t seed) {
    const std::size_t n = residuals.size();
    if (max_lag < 1)
        throw std::invalid_argument("durbin_watson_test: max_lag must be >= 1");
    if (regressor.size() != n)
        throw std::invalid_argument(
            "durbin_watson_test: residuals and regressor differ in length");
    if (n < static_cast<std::size_t>(max_lag) + 2)
        throw std::invalid_argument("durbin_watson_test: series too short for max_lag");
    if (reps < 1)
        throw std::invalid_argument("durbin_watson_test: reps must be >= 1");

    std::vector<double> e;
    ols_residuals(residuals, regressor, e);
    double denom = 0.0;
    for (double v : e) denom += v * v;
    if (!(denom > 0.0))
        throw std::invalid_argument("durbin_watson_test: degenerate inner residuals");

    std::vector<double> observed(static_cast<std::size_t>(max_lag));
    for (int lag = 1; lag <= max_lag; ++lag)
        observed[static_cast<std::size_t>(lag - 1)] = dw_statistic(e, lag, denom);

    std::vector<int> count_le(static_cast<std::size_t>(max_lag), 0);
    std::vector<int> count_ge(static_cast<std::size_t>(max_lag), 0);

    NormalSampler normal(seed);
    std::vector<double> z(n);
    std::vector<double> eb;
    for (int b = 0; b < reps; ++b) {
        for (double& v : z) v = normal();
        ols_residuals(z, regressor, eb);
        double den_b = 0.0;
        for (double v : eb) den_b += v * v;
        if (!(den_b > 0.0))
            continue;  // cannot happen with continuous draws
        for (int lag = 1; lag <= max_lag; ++lag) {
            const double d = dw_statistic(eb, lag, den_b);
            const auto k = static_cast<std::size_t>(lag - 1);
            if (d <= observed[k]) ++count_le[k];
            if (d >= observed[k]) ++count_ge[k];
        }
    }

    DurbinWatsonResult result;
    result.alpha = alpha;
    result.passed = true;
    for (int lag = 1; lag <= max_lag; ++lag) {
        const auto k = static_cast<std::size_t>(lag - 1);
        const double frac = 2.0 *
            static_cast<double>(std::min(count_le[k], count_ge[k])) /
            static_cast<double>(reps);
        const double p = std::clamp(frac, 0.0, 1.0);
        result.lags.push_back(DurbinWatsonLag{lag, observed[k], p});
        if (p < alpha) result.passed = false;
    }
    return result;
}

TestResult variance_f_test(std::span<const double> residuals, double var_eps,
                           int n_free_params, double alpha) {
    const auto n = static_cast<int>(residuals.size());
    if (!(var_eps > 0.0))
        throw std::invalid_argument("variance_f_test: var_eps must be positive");
    if (n <= n_free_params)
        throw std::invalid_argument(
            "variance_f_test: need more points than free parameters");

    const double mean = mean_of(residuals);
    double ss = 0.0;
    for (double v : residuals) ss += (v - mean) * (v - mean);
    const int dof = n - n_free_params;
    const double var_res = ss / static_cast<double>(dof);

    if (!(var_res > 0.0)) {
        // residuals fit better than the declared noise allows
        return TestResult{std::numeric_limits<double>::infinity(), 0.0, false, alpha};
    }
    const double f_stat =
        std::max(var_eps, var_res) / std::min(var_eps, var_res);
    const double p = std::clamp(1.0 - f_cdf(f_stat, dof, dof), 0.0, 1.0);
    return TestResult{f_stat, p, p >= alpha, alpha};
}

AdequacyReport assess_adequacy(const FitResult& fit, const Spectrum& spectrum,
                               int n_free_params,
                               const DiagnosticsConfig& config) {
    AdequacyReport report;
    bool all_passed = true;
    const auto failed = [&](const char* which, const std::exception& err) {
        report.notes.push_back(std::string(which) + ": " + err.what());
        all_passed = false;
        return TestResult{std::numeric_limits<double>::quiet_NaN(), 0.0, false,
                          config.alpha};
    };

    try {
        report.normality = anderson_darling_test(fit.residuals, config.alpha);
        all_passed = all_passed && report.normality.passed;
    } catch (const std::invalid_argument& err) {
        report.normality = failed("normality", err);
    }
    try {
        report.zero_mean = one_sample_t_test(fit.residuals, config.alpha);
        all_passed = all_passed && report.zero_mean.passed;
    } catch (const std::invalid_argument& err) {
        report.zero_mean = failed("zero_mean", err);
    }
    try {
        report.autocorrelation =
            durbin_watson_test(fit.residuals, spectrum.temperatures,
                               config.dw_max_lag, config.alpha, config.dw_reps,
                               config.dw_seed);
        all_passed = all_passed && report.autocorrelation.passed;
    } catch (const std::invalid_argument& err) {
        report.notes.push_back(std::string("autocorrelation: ") + err.what());
        report.autocorrelation = DurbinWatsonResult{{}, false, config.alpha};
        all_passed = false;
    }
    if (spectrum.var_eps.has_value()) {
        try {
            report.variance = variance_f_test(fit.residuals, *spectrum.var_eps,
                                              n_free_params, config.alpha);
            all_passed = all_passed && report.variance->passed;
        } catch (const std::invalid_argument& err) {
            report.variance = failed("variance", err);
        }
    } else {
        report.notes.emplace_back(
            "variance: var_eps not provided, F test skipped");
    }

    report.adequate = all_passed;
    return report;
}

} // namespace debyedec
