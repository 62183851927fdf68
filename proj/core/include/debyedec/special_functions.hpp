#ifndef DEBYEDEC_SPECIAL_FUNCTIONS_HPP
#define DEBYEDEC_SPECIAL_FUNCTIONS_HPP

namespace debyedec {

/// Standard normal CDF, erfc-based. Absolute error < 1e-12.
double normal_cdf(double x);

/// log(Phi(x)), stable far into the lower tail (asymptotic expansion below
/// x = -37 where erfc underflows).
double log_normal_cdf(double x);

/// Regularized incomplete beta I_x(a, b), a, b > 0, x in [0, 1].
/// Lentz continued fraction; throws std::domain_error on invalid input and
/// std::runtime_error if the fraction fails to converge.
double regularized_incomplete_beta(double a, double b, double x);

/// Student-t CDF with df >= 1 degrees of freedom. Absolute error < 1e-10.
/// Throws std::domain_error if df < 1.
double t_cdf(double x, int df);

/// Fisher-Snedecor CDF, x >= 0, d1, d2 >= 1. Absolute error < 1e-10.
double f_cdf(double x, int d1, int d2);

} // namespace debyedec

#endif
