#include "doctest.h"
#include "helmbem/specfun.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

using namespace helmbem;

namespace {

// Independent ascending-series oracle for J0/J1/Y0/Y1 in long double. Valid
// for x up to ~25 before cancellation eats the extended precision. Written
// term-by-term from the classical series, no code shared with the library.
long double oracle_j0(long double x)
{
    long double sum = 0.0L, term = 1.0L;
    for (int m = 0; m < 120; ++m) {
        sum += term;
        term *= -(x * x / 4.0L) / ((m + 1.0L) * (m + 1.0L));
        if (std::fabs(term) < 1e-26L && m > 3) break;
    }
    return sum;
}

long double oracle_j1(long double x)
{
    long double sum = 0.0L, term = x / 2.0L;
    for (int m = 0; m < 120; ++m) {
        sum += term;
        term *= -(x * x / 4.0L) / ((m + 1.0L) * (m + 2.0L));
        if (std::fabs(term) < 1e-26L && m > 3) break;
    }
    return sum;
}

constexpr long double lgamma_euler = 0.57721566490153286060651209008240L;
constexpr long double lpi = 3.14159265358979323846264338327950288L;

long double oracle_y0(long double x)
{
    // sum_{m>=1} (-1)^{m+1} H_m (x^2/4)^m / (m!)^2
    long double sum = 0.0L, p = 1.0L, h = 0.0L;
    for (int m = 1; m < 120; ++m) {
        p *= (x * x / 4.0L) / (static_cast<long double>(m) * m);
        h += 1.0L / m;
        sum += (m % 2 ? 1.0L : -1.0L) * h * p;
        if (p < 1e-26L && m > 3) break;
    }
    return (2.0L / lpi) * ((std::log(x / 2.0L) + lgamma_euler) * oracle_j0(x) + sum);
}

long double oracle_y1(long double x)
{
    long double sum = 0.0L, p = 1.0L, hm = 0.0L;
    for (int m = 0; m < 120; ++m) {
        if (m > 0) {
            p *= (x * x / 4.0L) / (static_cast<long double>(m) * (m + 1));
            hm += 1.0L / m;
        }
        const long double hm1 = hm + 1.0L / (m + 1);
        sum += (m % 2 ? -1.0L : 1.0L) * (hm + hm1) * p;
        if (p < 1e-26L && m > 3) break;
    }
    return (2.0L / lpi) * (std::log(x / 2.0L) + lgamma_euler) * oracle_j1(x) -
           2.0L / (lpi * x) - (x / (2.0L * lpi)) * sum;
}

} // namespace

TEST_CASE("bessel_j trivial values")
{
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
}

TEST_CASE("J0 first root located against series oracle")
{
    // Bisection on the oracle.
    long double lo = 2.0L, hi = 3.0L;
    REQUIRE(oracle_j0(lo) > 0.0L);
    REQUIRE(oracle_j0(hi) < 0.0L);
    for (int i = 0; i < 200; ++i) {
        const long double mid = 0.5L * (lo + hi);
        (oracle_j0(mid) > 0.0L ? lo : hi) = mid;
    }
    const double root = static_cast<double>(0.5L * (lo + hi));
    CHECK(root == doctest::Approx(2.404825557695773).epsilon(1e-14));
    CHECK(std::abs(bessel_j(0, 2.404825557695773)) < 1e-10);
    // And the implementation's own root agrees to 1e-10.
    double a = 2.0, b = 3.0;
    for (int i = 0; i < 100; ++i) {
        const double m = 0.5 * (a + b);
        (bessel_j(0, m) > 0.0 ? a : b) = m;
    }
    CHECK(std::abs(0.5 * (a + b) - 2.404825557695773) < 1e-10);
}

TEST_CASE("implementation matches series oracle on [1e-3, 20]")
{
    for (double x : {1e-3, 0.01, 0.1, 0.5, 1.0, 2.0, 3.7, 5.0, 8.0, 11.0, 14.0, 15.9, 16.1, 18.0, 20.0}) {
        const double j0 = bessel_j(0, x), j1 = bessel_j(1, x);
        const double y0 = bessel_y(0, x), y1 = bessel_y(1, x);
        const double oj0 = static_cast<double>(oracle_j0(x));
        const double oj1 = static_cast<double>(oracle_j1(x));
        const double oy0 = static_cast<double>(oracle_y0(x));
        const double oy1 = static_cast<double>(oracle_y1(x));
        CHECK(std::abs(j0 - oj0) < 1e-10 * std::max(1.0, std::abs(oj0)));
        CHECK(std::abs(j1 - oj1) < 1e-10 * std::max(1.0, std::abs(oj1)));
        CHECK(std::abs(y0 - oy0) < 1e-9 * std::max(1.0, std::abs(oy0)));
        CHECK(std::abs(y1 - oy1) < 1e-9 * std::max(1.0, std::abs(oy1)));
    }
}

TEST_CASE("Y0 small-argument behaviour")
{
    // Y0(x) - (2/pi)(log(x/2)+gamma) J0(x) stays bounded as x -> 0+.
    for (double x : {1e-2, 1e-4, 1e-6, 1e-8}) {
        const double rest = bessel_y(0, x) -
                            (2.0 / M_PI) * (std::log(x / 2.0) + euler_gamma) * bessel_j(0, x);
        CHECK(std::abs(rest) < 1e-3);
    }
    // Y0(1e-6) agrees with (2/pi)(log(5e-7)+gamma) to 1e-6 relative.
    const double approx = (2.0 / M_PI) * (std::log(5e-7) + 0.5772156649);
    CHECK(bessel_y(0, 1e-6) == doctest::Approx(approx).epsilon(1e-6));
    // Y1(x) ~ -(2/pi)/x as x -> 0+.
    for (double x : {1e-4, 1e-6}) {
        CHECK(bessel_y(1, x) == doctest::Approx(-2.0 / (M_PI * x)).epsilon(1e-7));
    }
}

TEST_CASE("hankel1 componentwise identity and asymptotic magnitude")
{
    for (double x : {0.3, 1.0, 7.0, 42.0, 300.0}) {
        const std::complex<double> h0 = hankel1(0, x);
        CHECK(h0.real() == bessel_j(0, x));
        CHECK(h0.imag() == bessel_y(0, x));
        const std::complex<double> h1 = hankel1(1, x);
        CHECK(h1.real() == bessel_j(1, x));
        CHECK(h1.imag() == bessel_y(1, x));
    }
    for (double x : {100.0, 400.0, 2000.0}) {
        const double amp = std::sqrt(2.0 / (M_PI * x));
        CHECK(std::abs(hankel1(0, x)) == doctest::Approx(amp).epsilon(0.01));
    }
}

TEST_CASE("derivative identity d/dx H0 = -H1 by central differences")
{
    const double x = 3.0, h = 1e-5;
    const std::complex<double> fd = (hankel1(0, x + h) - hankel1(0, x - h)) / (2.0 * h);
    const std::complex<double> ref = -hankel1(1, x);
    CHECK(std::abs(fd - ref) < 1e-6);
}

TEST_CASE("Wronskian identity on sampled arguments")
{
    for (double x = 1e-3; x <= 1e3; x *= 2.7) {
        const double w = bessel_j(0, x) * bessel_y(1, x) - bessel_j(1, x) * bessel_y(0, x);
        const double ref = -2.0 / (M_PI * x);
        CHECK(std::abs(w - ref) < 1e-9 * std::abs(ref));
    }
}

TEST_CASE("series/asymptotic branches agree in the overlap window")
{
    for (double x = 14.0; x <= 19.0; x += 0.37) {
        double js0, ys0, js1, ys1, jl0, yl0, jl1, yl1;
        specfun_detail::small_branch(x, js0, ys0, js1, ys1);
        specfun_detail::large_branch(x, jl0, yl0, jl1, yl1);
        const double amp = std::sqrt(2.0 / (M_PI * x));
        CHECK(std::abs(js0 - jl0) < 1e-9 * amp);
        CHECK(std::abs(ys0 - yl0) < 1e-9 * amp);
        CHECK(std::abs(js1 - jl1) < 1e-9 * amp);
        CHECK(std::abs(ys1 - yl1) < 1e-9 * amp);
    }
}

TEST_CASE("regular kernel parts are smooth at zero and match definitions")
{
    for (double x : {1e-8, 1e-3, 0.5, 2.0, 8.0, 30.0}) {
        const double y0r = bessel_y0_regular(x);
        const double ref0 = bessel_y(0, std::min(x, 1e4)) -
                            (2.0 / M_PI) * std::log(x / 2.0) * bessel_j(0, x);
        CHECK(y0r == doctest::Approx(ref0).epsilon(1e-8));
        const double y1r = bessel_y1_regular(x);
        const double ref1 = bessel_y(1, x) - (2.0 / M_PI) * std::log(x / 2.0) * bessel_j(1, x) +
                            2.0 / (M_PI * x);
        CHECK(std::abs(y1r - ref1) < 1e-8 * std::max(1.0, std::abs(ref1)));
    }
    CHECK(bessel_y0_regular(1e-12) == doctest::Approx((2.0 / M_PI) * euler_gamma).epsilon(1e-10));
}

TEST_CASE("domain errors")
{
    CHECK_THROWS_AS(bessel_j(0, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(2, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(0, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(bessel_y(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_y(0, -2.0), std::domain_error);
    CHECK_THROWS_AS(hankel1(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(0, 2e4), std::domain_error);
}
