#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "debyedec/decomposer.hpp"
#include "debyedec/io.hpp"
#include "debyedec/model.hpp"
#include "debyedec/selftest.hpp"
#include "debyedec/synth.hpp"

namespace {

struct FitArgs {
    std::string input;
    double freq = 0.0;
    double alpha = 0.05;
    int max_components = 8;
    std::optional<double> var_eps;
    std::uint64_t seed = 42;
    int dw_reps = 1000;
    std::string dof_mode = "corrected";
    std::string out = "result.json";
    std::string plot;
};

struct SynthArgs {
    std::vector<double> q0;
    std::vector<double> t0;
    double freq = 1.0;
    double t_min = 300.0;
    double t_max = 800.0;
    int n_points = 400;
    double noise_sd = 0.0;
    std::uint64_t seed = 0;
    std::string out = "spectrum.csv";
};

double min_dw_p(const debyedec::DurbinWatsonResult& dw) {
    double p = 1.0;
    for (const auto& lag : dw.lags) p = std::min(p, lag.p_value);
    return p;
}

void print_summary(const debyedec::DecompositionResult& result) {
    std::printf("  n          sse     AD p      t p   DW min p      F p  verdict\n");
    for (const debyedec::Attempt& attempt : result.attempts) {
        if (attempt.error) {
            std::printf("%3d  %43s  error: %s\n", attempt.n_components, "",
                        attempt.error->c_str());
            continue;
        }
        const debyedec::AdequacyReport& report = *attempt.report;
        char f_col[16];
        if (report.variance)
            std::snprintf(f_col, sizeof(f_col), "%8.4f",
                          report.variance->p_value);
        else
            std::snprintf(f_col, sizeof(f_col), "%8s", "-");
        std::printf("%3d  %11.5g  %7.4f  %7.4f  %9.4f  %s  %s\n",
                    attempt.n_components, attempt.fit->sse,
                    report.normality.p_value, report.zero_mean.p_value,
                    min_dw_p(report.autocorrelation), f_col,
                    report.adequate ? "adequate" : "inadequate");
        for (const std::string& warning : attempt.warnings)
            std::printf("     warning: %s\n", warning.c_str());
        for (const std::string& note : report.notes)
            std::printf("     note: %s\n", note.c_str());
    }
    std::printf("status: %s\n", debyedec::to_string(result.status));
    if (const debyedec::Attempt* accepted = result.accepted_attempt()) {
        const debyedec::ParameterVector& params = accepted->fit->params;
        const std::size_t n = debyedec::component_count(params);
        std::printf("accepted model: %zu component%s\n", n, n == 1 ? "" : "s");
        std::printf("  j           Q0        T0 (K)      E (J/mol)\n");
        for (std::size_t j = 0; j < n; ++j) {
            double e = 0.0;
            try {
                e = debyedec::activation_energy(params[n + j],
                                                result.config.f,
                                                result.config.constants);
            } catch (const std::exception&) {
                e = std::numeric_limits<double>::quiet_NaN();
            }
            std::printf("%3zu  %11.6g  %12.6g  %13.6g\n", j + 1, params[j],
                        params[n + j], e);
        }
    }
}

int run_fit(const FitArgs& args) {
    std::vector<std::string> warnings;
    debyedec::Spectrum spectrum;
    try {
        spectrum = debyedec::read_spectrum_csv(args.input, &warnings);
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
    for (const std::string& warning : warnings)
        std::fprintf(stderr, "warning: %s\n", warning.c_str());
    if (args.var_eps) {
        if (spectrum.var_eps && *spectrum.var_eps != *args.var_eps)
            std::fprintf(stderr,
                         "warning: input file carries var_eps=%g; "
                         "--var-eps %g takes precedence\n",
                         *spectrum.var_eps, *args.var_eps);
        spectrum.var_eps = *args.var_eps;
    }

    debyedec::DecompositionConfig config;
    config.f = args.freq;
    config.alpha = args.alpha;
    config.max_components = args.max_components;
    config.dw_reps = args.dw_reps;
    config.seed = args.seed;
    config.dof_mode = args.dof_mode == "paper" ? debyedec::DofMode::paper
                                               : debyedec::DofMode::corrected;

    debyedec::DecompositionResult result;
    try {
        result = debyedec::decompose(spectrum, config);
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }

    print_summary(result);
    try {
        debyedec::write_result_json(result, args.out);
        std::printf("wrote %s\n", args.out.c_str());
        if (!args.plot.empty()) {
            debyedec::emit_plot_svg(spectrum, result, args.plot);
            std::printf("wrote %s\n", args.plot.c_str());
        }
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
    return result.status == debyedec::DecompositionStatus::adequate ? 0 : 2;
}

int run_synth(const SynthArgs& args) {
    if (args.q0.size() != args.t0.size() || args.q0.empty()) {
        std::fprintf(stderr,
                     "error: --q0 and --t0 must list the same nonzero "
                     "number of values\n");
        return 1;
    }
    debyedec::SynthSpec spec;
    try {
        for (std::size_t j = 0; j < args.q0.size(); ++j)
            spec.components.push_back(
                debyedec::make_component(args.q0[j], args.t0[j], args.freq));
        spec.t_min = args.t_min;
        spec.t_max = args.t_max;
        spec.n_points = args.n_points;
        spec.noise_sd = args.noise_sd;
        spec.f = args.freq;
        spec.seed = args.seed;
        const debyedec::SyntheticSpectrum synthetic = debyedec::generate(spec);
        debyedec::write_spectrum_csv(synthetic.spectrum, args.out);
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
    std::printf("wrote %s (%d points, %zu components, noise sd %g)\n",
                args.out.c_str(), args.n_points, args.q0.size(),
                args.noise_sd);
    return 0;
}

int run_selftest_command() {
    const std::vector<debyedec::SelftestCheck> checks =
        debyedec::run_selftest();
    bool all_passed = true;
    std::printf("%-30s %6s  %12s  %9s  %s\n", "check", "cases", "max error",
                "tolerance", "result");
    for (const debyedec::SelftestCheck& check : checks) {
        std::printf("%-30s %6d  %12.4e  %9.1e  %s\n", check.name.c_str(),
                    check.cases, check.max_error, check.tolerance,
                    check.passed ? "pass" : "FAIL");
        all_passed = all_passed && check.passed;
    }
    std::printf("selftest: %s\n", all_passed ? "pass" : "FAIL");
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decomposition of relaxation spectra into Debye components"};
    app.require_subcommand(1);

    FitArgs fit_args;
    CLI::App* fit = app.add_subcommand(
        "fit", "Decompose a measured spectrum from a CSV file");
    fit->add_option("input", fit_args.input, "input CSV (header T,Q[,var_eps])")
        ->required();
    fit->add_option("--freq", fit_args.freq, "measurement frequency in Hz")
        ->required()
        ->check(CLI::PositiveNumber);
    fit->add_option("--alpha", fit_args.alpha,
                    "significance level for all adequacy tests")
        ->capture_default_str()
        ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
    fit->add_option("--max-components", fit_args.max_components,
                    "largest model size to try")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    fit->add_option("--var-eps", fit_args.var_eps,
                    "known measurement-error variance (overrides the CSV)")
        ->check(CLI::NonNegativeNumber);
    fit->add_option("--seed", fit_args.seed,
                    "seed for the bootstrap sampler")
        ->capture_default_str();
    fit->add_option("--dw-reps", fit_args.dw_reps,
                    "Durbin-Watson bootstrap replicates")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    fit->add_option("--dof-mode", fit_args.dof_mode,
                    "degrees-of-freedom convention for the variance test")
        ->capture_default_str()
        ->check(CLI::IsMember({"corrected", "paper"}));
    fit->add_option("--out", fit_args.out, "result JSON path")
        ->capture_default_str();
    fit->add_option("--plot", fit_args.plot, "also write an SVG plot here");

    SynthArgs synth_args;
    CLI::App* synth = app.add_subcommand(
        "synth", "Generate a synthetic fixture CSV with known components");
    synth->add_option("--q0", synth_args.q0, "component amplitudes")
        ->required();
    synth->add_option("--t0", synth_args.t0, "component peak temperatures (K)")
        ->required();
    synth->add_option("--freq", synth_args.freq, "measurement frequency in Hz")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    synth->add_option("--t-min", synth_args.t_min, "grid start (K)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    synth->add_option("--t-max", synth_args.t_max, "grid end (K)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    synth->add_option("--n-points", synth_args.n_points, "grid size")
        ->capture_default_str()
        ->check(CLI::Range(2, 1000000));
    synth->add_option("--noise-sd", synth_args.noise_sd,
                      "Gaussian noise standard deviation")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    synth->add_option("--seed", synth_args.seed, "noise generator seed")
        ->capture_default_str();
    synth->add_option("--out", synth_args.out, "output CSV path")
        ->capture_default_str();

    CLI::App* selftest = app.add_subcommand(
        "selftest", "Check the statistical machinery against frozen references");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 1;
    }

    if (fit->parsed()) return run_fit(fit_args);
    if (synth->parsed()) return run_synth(synth_args);
    if (selftest->parsed()) return run_selftest_command();
    return 1;
}
