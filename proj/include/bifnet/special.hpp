#pragma once

namespace bifnet {

/// Regularized lower incomplete gamma function P(a, x), a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

/// Regularized incomplete beta function I_x(a, b), a, b > 0, x in [0, 1].
double regularized_beta(double a, double b, double x);

/// Quantile of the chi-squared distribution with `dof` degrees of freedom,
/// solved by bisection on regularized_gamma_p.
double chi_squared_quantile(double dof, double prob);

/// Upper tail P(F > x) for an F(d1, d2) distributed variable.
double f_upper_tail(double d1, double d2, double x);

}  // namespace bifnet
