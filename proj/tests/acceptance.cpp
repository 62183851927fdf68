// Acceptance checks for the spectrum decomposition toolkit. Prints exactly
// one PASS/FAIL line per criterion and exits nonzero if any fail. argv[1]
// is the path to the debyedec command-line binary (used by criterion 7).
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "debyedec/decomposer.hpp"
#include "debyedec/diagnostics.hpp"
#include "debyedec/model.hpp"
#include "debyedec/optimizer.hpp"
#include "debyedec/selftest.hpp"
#include "debyedec/synth.hpp"

using namespace debyedec;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(bool passed, const char* criterion) {
    std::printf("%s — %s\n", passed ? "PASS" : "FAIL", criterion);
    if (!passed) ++g_failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<double> grid_300_800(std::size_t n) {
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i)
        t[i] = 300.0 + 500.0 * static_cast<double>(i) /
                           static_cast<double>(n - 1);
    return t;
}

// analytic Jacobian against central finite differences, column-scaled
bool jacobian_matches_fd() {
    const std::vector<double> t = grid_300_800(200);
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> q0_dist(0.1, 2.0);
    std::uniform_real_distribution<double> t0_dist(350.0, 750.0);

    for (int trial = 0; trial < 100; ++trial) {
        const int n_comp = 1 + trial % 5;
        ParameterVector params;
        for (int j = 0; j < n_comp; ++j) params.push_back(q0_dist(rng));
        for (int j = 0; j < n_comp; ++j) params.push_back(t0_dist(rng));

        const Eigen::MatrixXd jac = model_jacobian(t, params, 1.0);
        for (std::size_t col = 0; col < params.size(); ++col) {
            const auto c = static_cast<Eigen::Index>(col);
            const double h = 1e-6 * std::abs(params[col]);
            ParameterVector lo = params, hi = params;
            lo[col] -= h;
            hi[col] += h;
            const std::vector<double> f_lo = spectrum_model(t, lo, 1.0);
            const std::vector<double> f_hi = spectrum_model(t, hi, 1.0);
            double col_scale = 1.0, worst = 0.0;
            for (std::size_t i = 0; i < t.size(); ++i)
                col_scale = std::max(
                    col_scale, std::abs(jac(static_cast<Eigen::Index>(i), c)));
            for (std::size_t i = 0; i < t.size(); ++i) {
                const double fd = (f_hi[i] - f_lo[i]) / (2.0 * h);
                worst = std::max(
                    worst,
                    std::abs(fd - jac(static_cast<Eigen::Index>(i), c)));
            }
            if (worst / col_scale >= 1e-6) return false;
        }
    }
    return true;
}

// noise-free single peak recovered from perturbed starts
bool single_peak_recovery() {
    SynthSpec spec;
    spec.components = {make_component(1.0, 550.0, 1.0)};
    spec.t_min = 350.0;
    spec.t_max = 750.0;
    spec.n_points = 101;
    spec.noise_sd = 0.0;
    spec.f = 1.0;
    const Spectrum spectrum = generate(spec).spectrum;

    for (double dq : {-0.2, 0.2})
        for (double dt : {-0.2, 0.2}) {
            const ParameterVector start = {1.0 * (1.0 + dq),
                                           550.0 * (1.0 + dt)};
            const FitResult fit_result =
                fit(spectrum, start, LMOptions{}, 1.0);
            if (std::abs(fit_result.params[0] - 1.0) >= 1e-8)
                return false;
            if (std::abs(fit_result.params[1] - 550.0) / 550.0 >= 1e-8)
                return false;
        }
    return true;
}

SyntheticSpectrum canonical(std::uint64_t seed) {
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

// automatic component-count selection on the canonical three-peak example
bool canonical_decomposition() {
    const SyntheticSpectrum s = canonical(7);
    const DecompositionResult result = decompose(s.spectrum, {});
    if (result.status != DecompositionStatus::adequate) return false;
    const Attempt* accepted = result.accepted_attempt();
    if (accepted == nullptr || accepted->n_components != 3) return false;

    const ParameterVector& p = accepted->fit->params;
    std::vector<std::pair<double, double>> peaks = {
        {p[3], p[0]}, {p[4], p[1]}, {p[5], p[2]}};
    std::sort(peaks.begin(), peaks.end());
    const double truth_t[3] = {450.0, 550.0, 650.0};
    for (int j = 0; j < 3; ++j) {
        if (std::abs(peaks[j].first - truth_t[j]) > 2.0) return false;
        if (std::abs(peaks[j].second - 1.0) > 0.03) return false;
    }
    // the two-component attempt must have been tried and rejected
    if (result.attempts.size() < 3) return false;
    const Attempt& two = result.attempts[1];
    if (two.n_components != 2 || !two.report || two.report->adequate)
        return false;
    return true;
}

bool selftest_groups(std::initializer_list<const char*> names) {
    const std::vector<SelftestCheck> checks = run_selftest();
    for (const char* name : names) {
        bool found = false;
        for (const SelftestCheck& check : checks)
            if (check.name == name) {
                found = true;
                if (!check.passed) return false;
            }
        if (!found) return false;
    }
    return true;
}

// adequacy rate of correctly sized fits across seeds
bool adequacy_rate(double* rate_out) {
    int adequate = 0;
    const ParameterVector truth_start = {1.0, 1.0, 1.0,
                                         450.0, 550.0, 650.0};
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const SyntheticSpectrum s = canonical(seed);
        const FitResult fit_result =
            fit(s.spectrum, truth_start, LMOptions{}, 1.0);
        const AdequacyReport report = assess_adequacy(
            fit_result, s.spectrum, 6, DiagnosticsConfig{});
        if (report.adequate) ++adequate;
    }
    *rate_out = adequate / 100.0;
    return adequate >= 60;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// two identical CLI invocations produce byte-identical JSON
bool cli_determinism(const std::string& cli) {
    const fs::path dir("acceptance_tmp");
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string csv = (dir / "spectrum.csv").string();
    {
        const SyntheticSpectrum s = canonical(7);
        std::ofstream out(csv, std::ios::binary);
        out << "T,Q,var_eps\n";
        char buf[128];
        for (std::size_t i = 0; i < s.spectrum.temperatures.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n",
                          s.spectrum.temperatures[i],
                          s.spectrum.intensities[i], *s.spectrum.var_eps);
            out << buf;
        }
    }
    const std::string a = (dir / "a.json").string();
    const std::string b = (dir / "b.json").string();
    const std::string base =
        cli + " fit " + csv + " --freq 1 --seed 42 --out ";
    if (std::system((base + a + " > /dev/null").c_str()) != 0) return false;
    if (std::system((base + b + " > /dev/null").c_str()) != 0) return false;
    const std::string ja = slurp(a);
    const bool ok = !ja.empty() && ja == slurp(b);
    if (ok) fs::remove_all(dir);
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <debyedec-binary>\n");
        return 2;
    }

    {
        const auto start = Clock::now();
        const bool ok = jacobian_matches_fd();
        report(ok && seconds_since(start) < 1.0,
               "analytic Jacobian matches central finite differences "
               "(100 parameter sets, 1-5 components, rel err < 1e-6, < 1 s)");
    }
    {
        const auto start = Clock::now();
        const bool ok = single_peak_recovery();
        report(ok && seconds_since(start) < 1.0,
               "noise-free single peak recovered from 20% perturbed starts "
               "(rel err < 1e-8, < 1 s)");
    }
    {
        const auto start = Clock::now();
        const bool ok = canonical_decomposition();
        report(ok && seconds_since(start) < 10.0,
               "canonical three-peak spectrum: n = 3 selected, T0 within "
               "2 K, Q0 within 3%, n = 2 rejected (< 10 s)");
    }
    report(selftest_groups({"anderson_darling_statistic",
                            "anderson_darling_p_value", "t_test_statistic",
                            "t_test_p_value", "durbin_watson_statistics",
                            "variance_f_statistic", "variance_f_p_value"}),
           "residual diagnostics reproduce frozen reference values");
    {
        const auto start = Clock::now();
        double rate = 0.0;
        const bool ok = adequacy_rate(&rate);
        std::string label =
            "correctly sized fits judged adequate for " +
            std::to_string(static_cast<int>(rate * 100.0 + 0.5)) +
            "% of 100 seeds (need >= 60%, < 60 s)";
        report(ok && seconds_since(start) < 60.0, label.c_str());
    }
    report(selftest_groups({"normal_cdf", "t_cdf", "f_cdf"}),
           "distribution CDFs reproduce frozen reference values");
    report(cli_determinism(argv[1]),
           "identical CLI invocations produce byte-identical JSON");

    return g_failures == 0 ? 0 : 1;
}
