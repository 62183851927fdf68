#ifndef DEBYEDEC_SYNTH_HPP
#define DEBYEDEC_SYNTH_HPP

#include <cstdint>
#include <vector>

#include "debyedec/constants.hpp"
#include "debyedec/model.hpp"
#include "debyedec/spectrum.hpp"

namespace debyedec {

/// Recipe for a ground-truth synthetic spectrum.
struct SynthSpec {
    std::vector<DebyeComponent> components;
    double t_min = 0.0;  // K, > 0
    double t_max = 0.0;  // K, > t_min
    int n_points = 0;    // >= 2
    double noise_sd = 0.0;
    double f = 1.0;      // Hz
    std::uint64_t seed = 0;
    PhysicalConstants constants;
};

struct SyntheticSpectrum {
    Spectrum spectrum;                  // var_eps == noise_sd^2
    std::vector<DebyeComponent> truth;  // the components that generated it
    std::vector<double> clean;          // noise-free model values
};

/// Uniform temperature grid over [t_min, t_max] with exact endpoints;
/// intensities are the model values plus i.i.d. N(0, noise_sd^2) draws in
/// grid order from the seeded sampler. Bit-identical output for identical
/// specs. Throws std::invalid_argument on an invalid spec.
SyntheticSpectrum generate(const SynthSpec& spec);

} // namespace debyedec

#endif
