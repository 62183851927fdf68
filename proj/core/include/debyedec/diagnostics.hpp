#ifndef DEBYEDEC_DIAGNOSTICS_HPP
#define DEBYEDEC_DIAGNOSTICS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "debyedec/optimizer.hpp"
#include "debyedec/spectrum.hpp"

namespace debyedec {

struct TestResult {
    double statistic = 0.0;
    double p_value = 0.0;  // in [0, 1]
    bool passed = false;   // p_value >= alpha
    double alpha = 0.05;
};

struct DurbinWatsonLag {
    int lag = 0;
    double statistic = 0.0;  // in [0, 4]
    double p_value = 0.0;
};

struct DurbinWatsonResult {
    std::vector<DurbinWatsonLag> lags;  // lag = 1..max_lag
    bool passed = false;                // every lag has p_value >= alpha
    double alpha = 0.05;
};

struct AdequacyReport {
    TestResult normality;
    TestResult zero_mean;
    DurbinWatsonResult autocorrelation;
    std::optional<TestResult> variance;  // absent when var_eps is unknown
    bool adequate = false;
    std::vector<std::string> notes;
};

/// Anderson-Darling composite normality test (mean and variance estimated,
/// unbiased variance). The statistic is the uncorrected A^2; the p-value maps
/// the small-sample corrected A*^2 = A^2 (1 + 0.75/n + 2.25/n^2) through the
/// Stephens piecewise-exponential approximation (D'Agostino & Stephens 1986,
/// branch boundaries 0.2 / 0.34 / 0.6). Requires n >= 8 and a non-constant
/// sample.
TestResult anderson_darling_test(std::span<const double> sample, double alpha);

/// Two-sided one-sample t test of mean zero, unbiased standard deviation.
/// Requires n >= 2 and a non-constant sample.
TestResult one_sample_t_test(std::span<const double> sample, double alpha);

/// Durbin-Watson statistics of lag 1..max_lag for the residuals of the OLS
/// regression of `residuals` on `regressor` (with intercept). Two-sided
/// p-values by parametric bootstrap: `reps` standard-normal error vectors are
/// pushed through the same regression and p = 2*min(frac <=, frac >=),
/// clipped to [0, 1]. Deterministic for a fixed seed.
DurbinWatsonResult durbin_watson_test(std::span<const double> residuals,
                                      std::span<const double> regressor,
                                      int max_lag, double alpha, int reps,
                                      std::uint64_t seed);

/// Fisher test of the residual variance against the known measurement-error
/// variance. var_res = sum((e - mean)^2)/(n - p) with p = n_free_params;
/// F = max(var_eps, var_res)/min(var_eps, var_res) and
/// p_value = 1 - f_cdf(F, n - p, n - p). Requires n > p and var_eps > 0.
TestResult variance_f_test(std::span<const double> residuals, double var_eps,
                           int n_free_params, double alpha);

struct DiagnosticsConfig {
    double alpha = 0.05;
    int dw_max_lag = 5;
    int dw_reps = 1000;
    std::uint64_t dw_seed = 42;
};

/// Runs the full battery on the fit residuals. A sub-test precondition
/// failure marks the report inadequate with a note instead of throwing; the
/// variance test is skipped (with a note) when the spectrum carries no
/// var_eps.
AdequacyReport assess_adequacy(const FitResult& fit, const Spectrum& spectrum,
                               int n_free_params,
                               const DiagnosticsConfig& config);

} // namespace debyedec

#endif
