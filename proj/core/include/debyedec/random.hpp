#ifndef DEBYEDEC_RANDOM_HPP
#define DEBYEDEC_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace debyedec {

/// Deterministic standard-normal sampler: Marsaglia's polar method driven by
/// mt19937_64 with 53-bit uniforms ((x >> 11) * 2^-53). The algorithm is
/// frozen so fixtures reproduce bit-for-bit under a fixed seed; the standard
/// library's normal_distribution is implementation-defined and deliberately
/// not used.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

    double operator()() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_uniform() - 1.0;
            v = 2.0 * next_uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double factor = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * factor;
        has_spare_ = true;
        return u * factor;
    }

private:
    double next_uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace debyedec

#endif
