#include "debyedec/model.hpp"

#include <cmath>
#include <stdexcept>

namespace debyedec {

double activation_energy(double t0, double f, const PhysicalConstants& c) {
    if (!(t0 > 0.0))
        throw std::domain_error("activation_energy: T0 must be positive");
    if (!(f > 0.0))
        throw std::domain_error("activation_energy: frequency must be positive");
    const double arg = c.k_boltzmann * t0 / (c.h_planck * f);
    if (!(arg > 1.0))
        throw std::domain_error(
            "activation_energy: k_b*T0/(h*f) must exceed 1 for a positive energy");
    return c.r_gas * t0 * std::log(arg);
}

DebyeComponent make_component(double q0, double t0, double f,
                              const PhysicalConstants& c) {
    return DebyeComponent{q0, t0, activation_energy(t0, f, c)};
}

double sech(double u) {
    if (std::abs(u) > 710.0)
        return 0.0;  // cosh would overflow
    return 1.0 / std::cosh(u);
}

double debye_peak(double t, const DebyeComponent& comp,
                  const PhysicalConstants& c) {
    if (!(t > 0.0))
        throw std::domain_error("debye_peak: temperature must be positive");
    const double u = comp.e / c.r_gas * (1.0 / t - 1.0 / comp.t0);
    return comp.q0 * sech(u);
}

std::vector<double> spectrum_model(std::span<const double> t_grid,
                                   std::span<const DebyeComponent> components,
                                   const PhysicalConstants& c) {
    if (components.empty())
        throw std::invalid_argument("spectrum_model: components must be nonempty");
    std::vector<double> out(t_grid.size(), 0.0);
    for (const auto& comp : components) {
        for (std::size_t i = 0; i < t_grid.size(); ++i)
            out[i] += debye_peak(t_grid[i], comp, c);
    }
    return out;
}

std::vector<double> spectrum_model(std::span<const double> t_grid,
                                   const ParameterVector& params, double f,
                                   const PhysicalConstants& c) {
    const auto components = unpack_parameters(params, f, c);
    return spectrum_model(t_grid, components, c);
}

Eigen::MatrixXd model_jacobian(std::span<const double> t_grid,
                               const ParameterVector& params, double f,
                               const PhysicalConstants& c) {
    const std::size_t n = component_count(params);
    const auto m = static_cast<Eigen::Index>(t_grid.size());
    Eigen::MatrixXd jac(m, static_cast<Eigen::Index>(2 * n));

    for (std::size_t j = 0; j < n; ++j) {
        const double q0 = params[j];
        const double t0 = params[n + j];
        const double e = activation_energy(t0, f, c);
        const double e_over_r = e / c.r_gas;
        // dE/dT0 = R (ln(k_b T0/(h f)) + 1) = R (E/(R T0) + 1)
        const double de_dt0_over_r = e_over_r / t0 + 1.0;
        for (Eigen::Index i = 0; i < m; ++i) {
            const double t = t_grid[static_cast<std::size_t>(i)];
            if (!(t > 0.0))
                throw std::domain_error("model_jacobian: temperature must be positive");
            const double inv_diff = 1.0 / t - 1.0 / t0;
            const double u = e_over_r * inv_diff;
            const double s = sech(u);
            const double du_dt0 =
                de_dt0_over_r * inv_diff + e_over_r / (t0 * t0);
            jac(i, static_cast<Eigen::Index>(j)) = s;
            jac(i, static_cast<Eigen::Index>(n + j)) =
                q0 * (-s * std::tanh(u)) * du_dt0;
        }
    }
    return jac;
}

ParameterVector pack_parameters(std::span<const DebyeComponent> components) {
    const std::size_t n = components.size();
    ParameterVector params(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        params[j] = components[j].q0;
        params[n + j] = components[j].t0;
    }
    return params;
}

std::vector<DebyeComponent> unpack_parameters(const ParameterVector& params,
                                              double f,
                                              const PhysicalConstants& c) {
    const std::size_t n = component_count(params);
    std::vector<DebyeComponent> components;
    components.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        components.push_back(make_component(params[j], params[n + j], f, c));
    return components;
}

std::size_t component_count(const ParameterVector& params) {
    if (params.empty() || params.size() % 2 != 0)
        throw std::invalid_argument(
            "ParameterVector must hold an even, nonzero number of values");
    return params.size() / 2;
}

} // namespace debyedec
