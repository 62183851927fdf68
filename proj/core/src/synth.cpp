#include "debyedec/synth.hpp"

#include <stdexcept>

#include "debyedec/random.hpp"

namespace debyedec {

SyntheticSpectrum generate(const SynthSpec& spec) {
    if (spec.components.empty())
        throw std::invalid_argument("generate: at least one component required");
    if (!(spec.t_min > 0.0) || !(spec.t_min < spec.t_max))
        throw std::invalid_argument("generate: need 0 < t_min < t_max");
    if (spec.n_points < 2)
        throw std::invalid_argument("generate: n_points must be >= 2");
    if (!(spec.noise_sd >= 0.0))
        throw std::invalid_argument("generate: noise_sd must be >= 0");
    if (!(spec.f > 0.0))
        throw std::invalid_argument("generate: f must be positive");

    const auto n = static_cast<std::size_t>(spec.n_points);
    std::vector<double> grid(n);
    const double span = spec.t_max - spec.t_min;
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = spec.t_min +
                  span * static_cast<double>(i) / static_cast<double>(n - 1);
    grid[n - 1] = spec.t_max;  // keep the endpoint exact

    SyntheticSpectrum out;
    out.clean = spectrum_model(grid, spec.components, spec.constants);
    out.truth = spec.components;
    out.spectrum.temperatures = std::move(grid);
    out.spectrum.var_eps = spec.noise_sd * spec.noise_sd;

    NormalSampler normal(spec.seed);
    out.spectrum.intensities.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.spectrum.intensities[i] = out.clean[i] + spec.noise_sd * normal();
    return out;
}

} // namespace debyedec
