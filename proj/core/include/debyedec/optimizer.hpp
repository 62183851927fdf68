#ifndef DEBYEDEC_OPTIMIZER_HPP
#define DEBYEDEC_OPTIMIZER_HPP

#include <vector>

#include "debyedec/constants.hpp"
#include "debyedec/model.hpp"
#include "debyedec/spectrum.hpp"

namespace debyedec {

/// Levenberg-Marquardt settings. At least one of the three tolerances must
/// be positive and max_iterations >= 1.
struct LMOptions {
    int max_iterations = 200;
    double initial_damping = 1e-3;
    double damping_increase = 10.0;  // on rejected step
    double damping_decrease = 0.1;   // on accepted step
    double gradient_tolerance = 1e-10;
    double step_tolerance = 1e-10;
    double sse_tolerance = 1e-12;
};

enum class TerminationReason { gradient, step, sse, max_iterations };

const char* to_string(TerminationReason reason);

struct FitResult {
    ParameterVector params;        // at termination, unscaled
    std::vector<double> residuals; // measured - model, per grid point
    double sse = 0.0;              // exact sum of squares of `residuals`
    int iterations = 0;
    bool converged = false;
    TerminationReason termination_reason = TerminationReason::max_iterations;
    std::vector<double> sse_trace; // sse at start plus after each accepted step
};

/// Sum of squared residuals between the measured intensities and the model.
double sum_squared_residuals(const Spectrum& spectrum,
                             const ParameterVector& params, double f,
                             const PhysicalConstants& c = {});

/// Levenberg-Marquardt fit of the multi-peak model. Damping is multiplicative
/// on the identity; T0 parameters are scaled by 1e-2 internally so both
/// parameter blocks have comparable magnitudes, and trial T0 values are
/// clamped to [min(T)/2, 2*max(T)]. Accepted steps strictly decrease the sse,
/// so the returned sse never exceeds the initial one. Deterministic:
/// identical inputs give bit-identical results.
FitResult fit(const Spectrum& spectrum, const ParameterVector& initial,
              const LMOptions& opts, double f, const PhysicalConstants& c = {});

} // namespace debyedec

#endif
