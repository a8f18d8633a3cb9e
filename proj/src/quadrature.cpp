#include "helmbem/quadrature.hpp"
#include "helmbem/geometry.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace helmbem {

QuadratureRule gauss_legendre(int n)
{
    if (n < 1 || n > 64) throw std::invalid_argument("gauss_legendre: n out of range");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        long double x = std::cos(M_PI * (i + 0.75L) / (n + 0.5L));
        long double pp = 0.0L;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1.0L, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const long double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0L);
            const long double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-19L) break;
        }
        const long double w = 2.0L / ((1.0L - x * x) * pp * pp);
        rule.nodes[i] = static_cast<double>((1.0L - x) / 2.0L);
        rule.nodes[n - 1 - i] = static_cast<double>((1.0L + x) / 2.0L);
        rule.weights[i] = rule.weights[n - 1 - i] = static_cast<double>(w / 2.0L);
    }
    return rule;
}

QuadratureRule log_gauss(int n)
{
    if (n < 1 || n > 32) throw std::invalid_argument("log_gauss: n out of range");

    // Modified moments of -log(x) against monic shifted Legendre polynomials:
    //   nu_0 = 1, nu_k = (-1)^k / (k (k+1)) * prod-normalization.
    // The shifted Legendre recurrence (monic) has a_k = 1/2,
    // b_k = k^2 / (4 (4k^2 - 1)).
    const int m = 2 * n;
    std::vector<long double> nu(m), a(m, 0.5L), b(m, 0.0L);
    // Monic shifted Legendre P*_k has leading coefficient 1; the classical
    // moment integral int_0^1 P*_k (-log x) dx = (-1)^k /(k(k+1)) * c_k where
    // c_k rescales from the standard to the monic normalization. Standard
    // shifted Legendre has leading coefficient binom(2k,k); the classical
    // value (-1)^k/(k(k+1)) refers to the *standard* normalization, so divide.
    nu[0] = 1.0L;
    long double lead = 1.0L; // leading coefficient of standard shifted Legendre
    for (int k = 1; k < m; ++k) {
        lead *= 2.0L * (2.0L * k - 1.0L) / k; // binom(2k,k) recurrence
        const long double std_moment =
            ((k % 2) ? -1.0L : 1.0L) / (static_cast<long double>(k) * (k + 1));
        nu[k] = std_moment / lead;
        b[k] = static_cast<long double>(k) * k /
               (4.0L * (4.0L * static_cast<long double>(k) * k - 1.0L));
    }

    // Modified Chebyshev algorithm (Gautschi) for the recurrence coefficients.
    std::vector<long double> alpha(n), beta(n);
    std::vector<long double> sm1(m, 0.0L), s0(nu), s1(m, 0.0L);
    alpha[0] = a[0] + nu[1] / nu[0];
    beta[0] = nu[0];
    for (int j = 1; j < n; ++j) {
        for (int k = j; k < m - j; ++k) {
            s1[k] = s0[k + 1] - (alpha[j - 1] - a[k]) * s0[k] - beta[j - 1] * sm1[k];
            if (k > 0) s1[k] += b[k] * s0[k - 1];
        }
        alpha[j] = a[j] + s1[j + 1] / s1[j] - s0[j] / s0[j - 1];
        beta[j] = s1[j] / s0[j - 1];
        sm1 = s0;
        s0 = s1;
    }

    // Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights are
    // beta_0 times the squared first components of the eigenvectors.
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        jac(i, i) = static_cast<double>(alpha[i]);
        if (i + 1 < n) {
            const double off = std::sqrt(static_cast<double>(beta[i + 1]));
            jac(i, i + 1) = jac(i + 1, i) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = static_cast<double>(beta[0]) * v0 * v0;
    }
    return rule;
}

QuadratureRule graded_composite(const QuadratureRule& base, int layers, double ratio)
{
    if (layers < 1) throw std::invalid_argument("graded_composite: layers must be >= 1");
    if (!(ratio > 0.0 && ratio < 1.0))
        throw std::invalid_argument("graded_composite: ratio must be in (0,1)");
    QuadratureRule rule;
    rule.nodes.reserve(static_cast<size_t>(layers) * base.size());
    rule.weights.reserve(static_cast<size_t>(layers) * base.size());
    // Innermost interval is [0, ratio^{layers-1}], then geometric growth to 1.
    for (int j = layers - 1; j >= 0; --j) {
        const double hi = std::pow(ratio, j);
        const double lo = (j == layers - 1) ? 0.0 : hi * ratio;
        const double len = hi - lo;
        for (int q = 0; q < base.size(); ++q) {
            rule.nodes.push_back(lo + len * base.nodes[q]);
            rule.weights.push_back(len * base.weights[q]);
        }
    }
    return rule;
}

PanelPairClass classify_pair(const Mesh& mesh, int ta, int tb)
{
    const int n = mesh.num_elements();
    if (ta < 0 || ta >= n || tb < 0 || tb >= n)
        throw std::out_of_range("classify_pair: element id out of range");
    if (ta == tb) return {PairClass::identical, -1};
    const Element& a = mesh.element(ta);
    const Element& b = mesh.element(tb);
    if (a.node_end == b.node_start) return {PairClass::adjacent, a.node_end};
    if (b.node_end == a.node_start) return {PairClass::adjacent, a.node_start};
    return {PairClass::separated, -1};
}

} // namespace helmbem
