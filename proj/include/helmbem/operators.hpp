#ifndef HELMBEM_OPERATORS_HPP
#define HELMBEM_OPERATORS_HPP

#include "helmbem/geometry.hpp"
#include "helmbem/spaces.hpp"

#include <Eigen/Core>
#include <complex>
#include <functional>
#include <vector>

namespace helmbem {

using Complex = std::complex<double>;

enum class OperatorTag { V, K, Kp, W, mass, lb_stiffness };

struct GalerkinMatrix {
    Eigen::MatrixXcd mat;
    SpaceKind rows, cols;
    OperatorTag op;
    double wavenumber = 0.0;
};

/// Quadrature budgets for Galerkin assembly and on-boundary potential
/// evaluation. `doubled()` doubles every order (for stability checks and the
/// CLI override).
struct AssemblyConfig {
    int gauss_n = 16;      // smooth / separated panel rules
    int log_n = 16;        // log-Gauss rule for the split-off ln part
    int graded_base = 8;   // base order of graded tensor rules (corner pairs)
    int graded_layers = 12;
    double graded_ratio = 0.15;
    int near_base = 16;    // base order of graded rules for near-singular
                           // potential evaluation
    AssemblyConfig doubled() const
    {
        AssemblyConfig c = *this;
        c.gauss_n = std::min(2 * gauss_n, 64);
        c.log_n = std::min(2 * log_n, 32);
        c.graded_base = std::min(2 * graded_base, 64);
        c.near_base = std::min(2 * near_base, 64);
        return c;
    }
    static AssemblyConfig from_order(int order)
    {
        AssemblyConfig c;
        c.gauss_n = order;
        c.log_n = std::min(order, 32);
        c.graded_base = std::max(4, order / 2);
        c.near_base = order;
        return c;
    }
};

/// Helmholtz kernel G_k(r) = (i/4) H_0^(1)(kr) for k > 0, Laplace kernel
/// -(1/2pi) log(r) for k = 0. Requires r > 0.
Complex kernel_G(double k, double r);

/// Single-layer Galerkin matrix on P0 x P0:
///   A[i][j] = int_{T_i} int_{T_j} G_k(|x-y|) ds_y ds_x  (complex symmetric).
GalerkinMatrix assemble_V(const Mesh& mesh, double k, const AssemblyConfig& cfg = {});

/// Double-layer pairing matrix, rows P0, columns S2:
///   B[i][j] = int_{T_i} int_Gamma dG_k/dnu(y) b_j(y) ds_y ds_x
///             + (1/2) int_{T_i} b_j ds,
/// i.e. the matrix of (K_k + 1/2) with K_k the principal-value operator.
GalerkinMatrix assemble_K(const Mesh& mesh, double k, const AssemblyConfig& cfg = {});

/// Adjoint pairing, rows S2, columns P0, built independently from the kernel
/// dG_k/dnu(x); equals assemble_K(...)^T by the bilinear duality.
GalerkinMatrix assemble_Kp(const Mesh& mesh, double k, const AssemblyConfig& cfg = {});

/// Hypersingular Galerkin matrix on S2 x S2 through the integration-by-parts
/// identity  <W_k v, w> = <V_k v', w'> - k^2 <V_k (v nu), w nu>.
GalerkinMatrix assemble_W(const Mesh& mesh, double k, const AssemblyConfig& cfg = {});

/// alpha * Mass + Stiffness on S2 x S2 (real entries; arclength derivatives).
GalerkinMatrix assemble_LB(const Mesh& mesh, double alpha);

/// Mass pairing between two spaces (exact elementwise integrals).
GalerkinMatrix assemble_mass(const Mesh& mesh, SpaceKind rows, SpaceKind cols);

/// Single-layer Galerkin matrix on P1 x P1 at k = 0 (real SPD for the
/// geometries used here); backs the energy-norm error.
GalerkinMatrix assemble_V0_P1(const Mesh& mesh, const AssemblyConfig& cfg = {});

/// L2-orthogonal projection of a pointwise-evaluable target onto a space.
GridFunction l2_project(const std::function<Complex(const SurfacePoint&)>& target,
                        SpaceKind space, const Mesh& mesh,
                        const AssemblyConfig& cfg = {});

enum class PotentialKind { single, double_layer };

/// Layer potential at a point off the boundary. Refuses points closer than
/// 0.1 h_min to the boundary.
Complex eval_potential(PotentialKind kind, double k, const Mesh& mesh,
                       const GridFunction& density, Point2 x,
                       const AssemblyConfig& cfg = {});

enum class TangentialKind { single_P0, double_S2 };

/// Arclength derivative of the single-layer trace of a P0 density, or of the
/// exterior double-layer trace (K_k + 1/2) of an S2 density, at interior
/// points of element T (local parameters in (0,1)).
std::vector<Complex> tangential_derivative_on_gamma(TangentialKind kind, double k,
                                                    const Mesh& mesh,
                                                    const GridFunction& density, int T,
                                                    const std::vector<double>& params,
                                                    const AssemblyConfig& cfg = {});

/// On-boundary trace values of the single-layer potential of a grid function
/// at interior points of element T.
std::vector<Complex> single_layer_trace(double k, const Mesh& mesh,
                                        const GridFunction& density, int T,
                                        const std::vector<double>& params,
                                        const AssemblyConfig& cfg = {});

/// Pointwise (K_k' + 1/2) of a P0 density at interior points of element T.
std::vector<Complex> adjoint_double_layer_plus_half(double k, const Mesh& mesh,
                                                    const GridFunction& density, int T,
                                                    const std::vector<double>& params,
                                                    const AssemblyConfig& cfg = {});

/// Pointwise hypersingular operator W_k applied to an S2 function, evaluated
/// at interior points of element T via the tangential-derivative
/// representation W v = -int dG/ds(x) v'(y) dy - k^2 int G (tau_x . tau_y) v dy.
std::vector<Complex> hypersingular_apply(double k, const Mesh& mesh,
                                         const GridFunction& density, int T,
                                         const std::vector<double>& params,
                                         const AssemblyConfig& cfg = {});

/// Interior variant of tangential_derivative_on_gamma's double_S2 kind:
/// d/ds of (K_k - 1/2) f, the interior double-layer trace.
std::vector<Complex> tangential_derivative_dl_interior(double k, const Mesh& mesh,
                                                       const GridFunction& density, int T,
                                                       const std::vector<double>& params,
                                                       const AssemblyConfig& cfg = {});

namespace potentials_detail {
/// Quadrature-only potential evaluation with recursive panel subdivision;
/// valid arbitrarily close to (but not on) the boundary. Test support.
Complex eval_potential_refined(PotentialKind kind, double k, const Mesh& mesh,
                               const GridFunction& density, Point2 x);
} // namespace potentials_detail

} // namespace helmbem

#endif
