#ifndef HELMBEM_SPECFUN_HPP
#define HELMBEM_SPECFUN_HPP

#include <complex>

namespace helmbem {

/// Euler-Mascheroni constant (20 digits, needed by the Y0/Y1 series).
inline constexpr double euler_gamma = 0.57721566490153286061;

/// Bessel function of the first kind, order 0 or 1.
/// Ascending series below the branch switch, Hankel asymptotic expansion above.
/// Throws std::domain_error for order not in {0,1}, negative, non-finite or
/// out-of-range (> 1e4) argument.
double bessel_j(int order, double x);

/// Bessel function of the second kind, order 0 or 1. Requires x > 0, x <= 1e4.
double bessel_y(int order, double x);

/// First-kind Hankel function H_n^(1)(x) = J_n(x) + i Y_n(x), n in {0,1}, x > 0.
std::complex<double> hankel1(int order, double x);

/// All four values J0, Y0, J1, Y1 in one pass (shared series/asymptotic work).
/// This is the hot path of kernel evaluation. Requires x > 0.
void bessel_j0y0j1y1(double x, double& j0, double& y0, double& j1, double& y1);

/// Regular (log-free) part of Y0:  y0r(x) = Y0(x) - (2/pi) log(x/2) J0(x).
/// Entire function of x^2; used to split the Helmholtz kernel into an exact
/// log part plus a smooth remainder.
double bessel_y0_regular(double x);

/// Regular part of Y1 with the 1/x pole removed as well:
///   y1r(x) = Y1(x) - (2/pi) log(x/2) J1(x) + 2/(pi x).
double bessel_y1_regular(double x);

namespace specfun_detail {
// Both evaluation branches, exposed so the series/asymptotic overlap window
// can be checked directly.
void small_branch(double x, double& j0, double& y0, double& j1, double& y1);
void large_branch(double x, double& j0, double& y0, double& j1, double& y1);
inline constexpr double branch_switch = 16.0;
} // namespace specfun_detail

} // namespace helmbem

#endif
