#ifndef DEBYEDEC_MODEL_HPP
#define DEBYEDEC_MODEL_HPP

#include <span>
#include <vector>

#include <Eigen/Core>

#include "debyedec/constants.hpp"

namespace debyedec {

/// One relaxation peak of the spectrum model. The peak shape is
/// Q0 * sech[(E/R)(1/T - 1/T0)]: "sech" meaning the reciprocal of cosh, not
/// the inverse function arccosh. E is a cache derived from T0 and the
/// measurement frequency via activation_energy(); it is never an independent
/// degree of freedom.
struct DebyeComponent {
    double q0;  // peak amplitude, intensity units
    double t0;  // peak temperature, K
    double e;   // activation energy, J/mol == activation_energy(t0, f, c)
};

/// Flat parameter layout for n components: [Q0_1..Q0_n, T0_1..T0_n].
using ParameterVector = std::vector<double>;

/// E = R * T0 * ln(k_b * T0 / (h * f)).
/// Throws std::domain_error if T0 <= 0, f <= 0, or the log argument is <= 1
/// (E would be non-positive, which the model treats as unphysical).
double activation_energy(double t0, double f, const PhysicalConstants& c = {});

DebyeComponent make_component(double q0, double t0, double f,
                              const PhysicalConstants& c = {});

/// sech with overflow guard: |u| > 710 returns exactly 0.
double sech(double u);

/// Single-peak intensity at temperature T. Throws std::domain_error if T <= 0.
double debye_peak(double t, const DebyeComponent& comp,
                  const PhysicalConstants& c = {});

/// Sum of all component peaks at each grid point.
std::vector<double> spectrum_model(std::span<const double> t_grid,
                                   std::span<const DebyeComponent> components,
                                   const PhysicalConstants& c = {});

/// spectrum_model evaluated from the flat parameter layout (E recomputed
/// from each T0 with the given frequency).
std::vector<double> spectrum_model(std::span<const double> t_grid,
                                   const ParameterVector& params, double f,
                                   const PhysicalConstants& c = {});

/// Analytic Jacobian of the model with respect to the flat parameters,
/// len(t_grid) x 2n. The T0 columns include both the explicit 1/T0^2 term
/// and the dE/dT0 = R(ln(k_b T0/(h f)) + 1) chain term.
Eigen::MatrixXd model_jacobian(std::span<const double> t_grid,
                               const ParameterVector& params, double f,
                               const PhysicalConstants& c = {});

ParameterVector pack_parameters(std::span<const DebyeComponent> components);

std::vector<DebyeComponent> unpack_parameters(const ParameterVector& params,
                                              double f,
                                              const PhysicalConstants& c = {});

/// n = params.size()/2; throws std::invalid_argument on odd or empty layout.
std::size_t component_count(const ParameterVector& params);

} // namespace debyedec

#endif
