#ifndef HELMBEM_PANEL_INTEGRALS_HPP
#define HELMBEM_PANEL_INTEGRALS_HPP

// Internal panel-pair Galerkin integration.
//
// Panels on the same chart (any two arcs of one circle; collinear straight
// panels) have kernels that depend only on the chart distance u = s - t and
// are even in u. The double integral collapses to a 1D integral of
// kernel(|u|) against the piecewise-polynomial basis cross-correlation; the
// ln|u| singularity is split off exactly and integrated with the log-Gauss
// rule. Cross-chart pairs (different polygon edges) use tensor rules, graded
// toward the shared corner for adjacent pairs.

#include "helmbem/geometry.hpp"
#include "helmbem/operators.hpp"
#include "helmbem/quadrature.hpp"

#include <complex>
#include <optional>

namespace helmbem::detail {

using Complex = std::complex<double>;

struct Panel {
    int elem = -1;
    int chart = 0;
    double c0 = 0.0, c1 = 0.0; // chart interval (arclength), c1 > c0
    double h = 0.0;
    bool arc = false;
    double radius = 0.0;
};

Panel make_panel(const Mesh& mesh, int e);

/// Distance between two points at chart-coordinate offset du (same chart).
double chart_chord(const Panel& p, double du);

/// Which local integrals a pair sweep has to produce.
struct PairRequest {
    bool V = false;     // P0 x P0
    bool K = false;     // P0 rows, S2 columns, kernel dG/dn_y
    bool Kp = false;    // S2 rows, P0 columns, kernel dG/dn_x
    bool W = false;     // S2 x S2 Maue blocks
    bool V_P1 = false;  // P1 x P1 single layer (k = 0 energy matrix)
};

struct PairOutput {
    Complex V{};
    Complex K[3]{};
    Complex Kp[3]{};
    Complex W[3][3]{};
    Complex VP1[2][2]{};
};

/// Galerkin pair integrals for one ordered (row panel, col panel) pair.
/// Dispatches to the reduced same-chart path or the cross-chart tensor path.
void integrate_pair(const Mesh& mesh, const Panel& row, const Panel& col, double k,
                    const AssemblyConfig& cfg, const PairRequest& req, PairOutput& out);

/// Cached per-assembly quadrature rules.
struct RuleCache {
    QuadratureRule gauss;   // cfg.gauss_n
    QuadratureRule logg;    // cfg.log_n
    QuadratureRule corr;    // basis cross-correlation (exact for deg <= 7)
    QuadratureRule graded;  // cross-chart corner pairs
    explicit RuleCache(const AssemblyConfig& cfg);
};

const RuleCache& rules_for(const AssemblyConfig& cfg);

// Stable geometric quantities for one point pair, using the chart relation
// when both points lie on the same chart.
struct PairVals {
    double r;
    double z_dot_ny, z_dot_nx, z_dot_tx;
    double nx_dot_ny; // = tx.ty in 2D
    double nx_dot_ty;
};
PairVals pair_vals(const SurfacePoint& x, const SurfacePoint& y);

Complex kernel_V_pv(double k, const PairVals& v);
Complex kernel_K_pv(double k, const PairVals& v);   // dG/dn_y
Complex kernel_Kp_pv(double k, const PairVals& v);  // dG/dn_x
Complex kernel_dsx_pv(double k, const PairVals& v); // dG/ds_x

} // namespace helmbem::detail

#endif
