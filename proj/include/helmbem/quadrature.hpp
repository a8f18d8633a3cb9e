#ifndef HELMBEM_QUADRATURE_HPP
#define HELMBEM_QUADRATURE_HPP

#include <vector>

namespace helmbem {

class Mesh;

/// Quadrature rule on the open unit interval. Weights of plain rules sum to 1;
/// for the log rule they sum to int_0^1 -log(x) dx = 1 as well.
struct QuadratureRule {
    std::vector<double> nodes;   // strictly increasing, in (0,1)
    std::vector<double> weights; // positive
    int size() const { return static_cast<int>(nodes.size()); }
};

/// Gauss-Legendre rule with n points on (0,1); exact for polynomials of
/// degree 2n-1. Nodes by Newton iteration on the Legendre recurrence.
QuadratureRule gauss_legendre(int n);

/// Gauss rule for the weight -log(x) on (0,1):
///   int_0^1 -log(x) q(x) dx = sum_i w_i q(x_i)  exactly for deg(q) <= 2n-1.
/// Recurrence coefficients via the modified Chebyshev algorithm with shifted
/// Legendre moments, then a Golub-Welsch eigensolve.
QuadratureRule log_gauss(int n);

/// Composite rule on (0,1), geometrically graded toward 0: the base rule is
/// mapped to each of the `layers` subintervals (ratio^{j+1}, ratio^j).
QuadratureRule graded_composite(const QuadratureRule& base, int layers, double ratio);

enum class PairClass { identical, adjacent, separated };

struct PanelPairClass {
    PairClass classification;
    int shared_node = -1; // valid for adjacent pairs
};

/// Classify a pair of mesh elements by incidence.
PanelPairClass classify_pair(const Mesh& mesh, int ta, int tb);

} // namespace helmbem

#endif
