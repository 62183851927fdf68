#ifndef DEBYEDEC_CONSTANTS_HPP
#define DEBYEDEC_CONSTANTS_HPP

namespace debyedec {

/// Physical constants entering the peak model. Defaults are the CODATA-2018
/// exact values; all three must stay strictly positive.
struct PhysicalConstants {
    double r_gas = 8.31446261815324;    // molar gas constant, J/(mol K)
    double k_boltzmann = 1.380649e-23;  // Boltzmann constant, J/K
    double h_planck = 6.62607015e-34;   // Planck constant, J s
};

} // namespace debyedec

#endif
