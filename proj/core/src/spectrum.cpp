#include "debyedec/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace debyedec {

void validate(const Spectrum& spectrum) {
    const auto n = spectrum.temperatures.size();
    if (n == 0)
        throw std::invalid_argument("spectrum: empty temperature grid");
    if (spectrum.intensities.size() != n)
        throw std::invalid_argument(
            "spectrum: temperatures and intensities differ in length (" +
            std::to_string(n) + " vs " +
            std::to_string(spectrum.intensities.size()) + ")");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(spectrum.temperatures[i]) ||
            !std::isfinite(spectrum.intensities[i]))
            throw std::invalid_argument("spectrum: non-finite value at row " +
                                        std::to_string(i));
        if (!(spectrum.temperatures[i] > 0.0))
            throw std::invalid_argument("spectrum: non-positive temperature at row " +
                                        std::to_string(i));
        if (i > 0 && !(spectrum.temperatures[i] > spectrum.temperatures[i - 1]))
            throw std::invalid_argument(
                "spectrum: temperatures must be strictly increasing (row " +
                std::to_string(i) + ")");
    }
    if (spectrum.var_eps) {
        if (!std::isfinite(*spectrum.var_eps) || *spectrum.var_eps < 0.0)
            throw std::invalid_argument("spectrum: var_eps must be finite and >= 0");
    }
}

} // namespace debyedec
