#pragma once

namespace armey {

/// Standard normal CDF via the complementary error function.
double normal_cdf(double z);

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Chi-square CDF with df degrees of freedom; throws on x < 0.
double chi_square_cdf(double x, int df);

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// Student-t CDF with df degrees of freedom.
double student_t_cdf(double t, int df);

}  // namespace armey
