#ifndef DEBYEDEC_DECOMPOSER_HPP
#define DEBYEDEC_DECOMPOSER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "debyedec/constants.hpp"
#include "debyedec/diagnostics.hpp"
#include "debyedec/model.hpp"
#include "debyedec/optimizer.hpp"
#include "debyedec/spectrum.hpp"

namespace debyedec {

/// Degrees-of-freedom convention for the residual variance F test.
/// `corrected` charges both the amplitude and the position of every
/// component (2n free parameters); `paper` keeps the older convention of
/// charging only the amplitudes (n).
enum class DofMode { corrected, paper };

struct DecompositionConfig {
    double f = 1.0;           // measurement frequency in Hz
    double alpha = 0.05;      // significance level shared by all tests
    int max_components = 8;
    int dw_reps = 1000;       // bootstrap replicates for the Durbin-Watson test
    std::uint64_t seed = 42;  // seed for the bootstrap sampler
    DofMode dof_mode = DofMode::corrected;
    LMOptions lm;
    PhysicalConstants constants;
};

/// One entry of the model-growth loop. `fit` and `report` are absent when
/// the attempt aborted with `error` instead of finishing.
struct Attempt {
    int n_components = 0;
    std::optional<FitResult> fit;
    std::optional<AdequacyReport> report;
    std::vector<std::string> warnings;
    std::optional<std::string> error;
};

enum class DecompositionStatus { adequate, cap_reached };

const char* to_string(DecompositionStatus status);

struct DecompositionResult {
    DecompositionStatus status = DecompositionStatus::cap_reached;
    /// Index into `attempts` of the first adequate attempt; absent when the
    /// component cap was reached without an adequate model.
    std::optional<std::size_t> accepted;
    std::vector<Attempt> attempts;
    DecompositionConfig config;

    const Attempt* accepted_attempt() const {
        return accepted ? &attempts[*accepted] : nullptr;
    }
};

/// Starting parameters for an n-component fit: take `base` (parameters of a
/// smaller model, possibly empty) and repeatedly add a component at the
/// temperature of the largest absolute residual, with the signed residual
/// as its amplitude, until n components are present.
ParameterVector initial_guess(const Spectrum& spectrum, int n_components,
                              const ParameterVector& base,
                              const DecompositionConfig& config);

/// Grows the model one Debye component at a time until the residual battery
/// accepts it or `max_components` is reached. Requires more than
/// 2*max_components data points.
DecompositionResult decompose(const Spectrum& spectrum,
                              const DecompositionConfig& config);

} // namespace debyedec

#endif
