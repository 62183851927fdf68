#ifndef DEBYEDEC_SPECTRUM_HPP
#define DEBYEDEC_SPECTRUM_HPP

#include <optional>
#include <vector>

namespace debyedec {

/// A measured spectrum: strictly increasing positive temperature grid,
/// intensities of the same length, and optionally the known variance of the
/// measurement errors (the benchmark for the residual-variance F test).
struct Spectrum {
    std::vector<double> temperatures;  // K, strictly increasing, > 0
    std::vector<double> intensities;
    std::optional<double> var_eps;     // measurement-error variance, >= 0

    std::size_t size() const { return temperatures.size(); }
};

/// Throws std::invalid_argument when an invariant is broken: mismatched
/// lengths, empty grid, non-finite values, non-positive or non-increasing
/// temperatures, negative var_eps.
void validate(const Spectrum& spectrum);

} // namespace debyedec

#endif
