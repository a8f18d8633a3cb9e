#include "helmbem/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace helmbem {

namespace {

constexpr long double pi_l = 3.14159265358979323846264338327950288L;
constexpr long double gamma_l = 0.57721566490153286060651209008240L;

// Ascending series of J0, J1 and the harmonic-number sums entering Y0, Y1,
// accumulated in long double. The switch point (16) keeps the cancellation
// loss well below the extended-precision budget.
struct SmallSeries {
    long double j0, j1;
    long double s0; // sum_{m>=1} (-1)^{m+1} H_m (x^2/4)^m / (m!)^2
    long double t1; // sum_{m>=0} (H_m + H_{m+1}) (-x^2/4)^m / (m! (m+1)!)
};

SmallSeries small_series(long double x)
{
    const long double q = x * x / 4.0L;
    SmallSeries r{1.0L, 0.5L, 0.0L, 1.0L};

    long double term0 = 1.0L;  // (x^2/4)^m / (m!)^2, unsigned
    long double term1 = 0.5L;  // (x/2) (x^2/4)^m / (m!(m+1)!), unsigned
    long double tt = 1.0L;     // (x^2/4)^m / (m!(m+1)!), unsigned
    long double hm = 0.0L;
    long double sign = 1.0L;
    for (int m = 1; m < 200; ++m) {
        term0 *= q / (static_cast<long double>(m) * m);
        term1 *= q / (static_cast<long double>(m) * (m + 1));
        tt *= q / (static_cast<long double>(m) * (m + 1));
        hm += 1.0L / m;
        const long double hm1 = hm + 1.0L / (m + 1);
        sign = -sign;
        r.j0 += sign * term0;
        r.j1 += sign * term1;
        r.s0 -= sign * hm * term0; // (-1)^{m+1}
        r.t1 += sign * (hm + hm1) * tt;
        if (term0 < 1e-24L * (1.0L + std::fabs(r.j0)) && m > 4) break;
    }
    r.j1 *= x;
    return r;
}

// Hankel asymptotic expansion: P_nu + i Q_nu with
//   J_nu = sqrt(2/(pi x)) (P cos chi - Q sin chi),  chi = x - nu pi/2 - pi/4,
//   Y_nu = sqrt(2/(pi x)) (P sin chi + Q cos chi).
// Terms are summed until they stop decreasing; at x >= 16 the smallest term
// is below 1e-14 relative.
void asym_pq(int nu, long double x, long double& p, long double& q)
{
    const long double mu = 4.0L * nu * nu;
    long double c = 1.0L; // a_k / x^k
    p = 1.0L;
    q = 0.0L;
    long double prev = std::numeric_limits<long double>::max();
    for (int k = 1; k < 80; ++k) {
        const long double odd = 2.0L * k - 1.0L;
        c *= (mu - odd * odd) / (8.0L * k * x);
        const long double mag = std::fabs(c);
        if (mag >= prev) break;
        prev = mag;
        switch (k & 3) {
        case 0: p += c; break;
        case 1: q += c; break;
        case 2: p -= c; break;
        default: q -= c; break;
        }
        if (mag < 1e-22L) break;
    }
}

void eval_large(long double x, double& j0, double& y0, double& j1, double& y1)
{
    long double p0, q0, p1, q1;
    asym_pq(0, x, p0, q0);
    asym_pq(1, x, p1, q1);
    const long double amp = std::sqrt(2.0L / (pi_l * x));
    const long double chi0 = x - pi_l / 4.0L;
    const long double c0 = std::cos(chi0), s0 = std::sin(chi0);
    // chi1 = chi0 - pi/2: cos -> sin, sin -> -cos
    const long double c1 = s0, s1 = -c0;
    j0 = static_cast<double>(amp * (p0 * c0 - q0 * s0));
    y0 = static_cast<double>(amp * (p0 * s0 + q0 * c0));
    j1 = static_cast<double>(amp * (p1 * c1 - q1 * s1));
    y1 = static_cast<double>(amp * (p1 * s1 + q1 * c1));
}

void eval_small(long double x, double& j0, double& y0, double& j1, double& y1)
{
    const SmallSeries s = small_series(x);
    const long double lg = std::log(x / 2.0L) + gamma_l;
    const long double two_over_pi = 2.0L / pi_l;
    j0 = static_cast<double>(s.j0);
    j1 = static_cast<double>(s.j1);
    y0 = static_cast<double>(two_over_pi * (lg * s.j0 + s.s0));
    y1 = static_cast<double>(two_over_pi * (lg * s.j1) - two_over_pi / x -
                             (x / (2.0L * pi_l)) * s.t1);
}

void check_finite_positive(double x)
{
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("bessel: argument must be positive and finite");
}

} // namespace

namespace specfun_detail {

void small_branch(double x, double& j0, double& y0, double& j1, double& y1)
{
    eval_small(x, j0, y0, j1, y1);
}

void large_branch(double x, double& j0, double& y0, double& j1, double& y1)
{
    eval_large(x, j0, y0, j1, y1);
}

} // namespace specfun_detail

void bessel_j0y0j1y1(double x, double& j0, double& y0, double& j1, double& y1)
{
    if (x < specfun_detail::branch_switch)
        eval_small(x, j0, y0, j1, y1);
    else
        eval_large(x, j0, y0, j1, y1);
}

double bessel_j(int order, double x)
{
    if (order != 0 && order != 1) throw std::domain_error("bessel_j: order must be 0 or 1");
    if (!std::isfinite(x) || x < 0.0 || x > 1e4)
        throw std::domain_error("bessel_j: argument out of range");
    if (x == 0.0) return order == 0 ? 1.0 : 0.0;
    double j0, y0, j1, y1;
    bessel_j0y0j1y1(x, j0, y0, j1, y1);
    return order == 0 ? j0 : j1;
}

double bessel_y(int order, double x)
{
    if (order != 0 && order != 1) throw std::domain_error("bessel_y: order must be 0 or 1");
    check_finite_positive(x);
    if (x > 1e4) throw std::domain_error("bessel_y: argument out of range");
    double j0, y0, j1, y1;
    bessel_j0y0j1y1(x, j0, y0, j1, y1);
    return order == 0 ? y0 : y1;
}

std::complex<double> hankel1(int order, double x)
{
    if (order != 0 && order != 1) throw std::domain_error("hankel1: order must be 0 or 1");
    check_finite_positive(x);
    double j0, y0, j1, y1;
    bessel_j0y0j1y1(x, j0, y0, j1, y1);
    return order == 0 ? std::complex<double>(j0, y0) : std::complex<double>(j1, y1);
}

double bessel_y0_regular(double x)
{
    check_finite_positive(x);
    if (x < 12.0) {
        const SmallSeries s = small_series(x);
        return static_cast<double>((2.0L / pi_l) * (gamma_l * s.j0 + s.s0));
    }
    double j0, y0, j1, y1;
    bessel_j0y0j1y1(x, j0, y0, j1, y1);
    return y0 - (2.0 / M_PI) * std::log(x / 2.0) * j0;
}

double bessel_y1_regular(double x)
{
    check_finite_positive(x);
    if (x < 12.0) {
        const SmallSeries s = small_series(x);
        return static_cast<double>((2.0L / pi_l) * gamma_l * s.j1 -
                                   (x / (2.0L * pi_l)) * s.t1);
    }
    double j0, y0, j1, y1;
    bessel_j0y0j1y1(x, j0, y0, j1, y1);
    return y1 - (2.0 / M_PI) * std::log(x / 2.0) * j1 + 2.0 / (M_PI * x);
}

} // namespace helmbem
