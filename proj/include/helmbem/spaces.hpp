#ifndef HELMBEM_SPACES_HPP
#define HELMBEM_SPACES_HPP

#include "helmbem/geometry.hpp"

#include <Eigen/Core>
#include <array>
#include <complex>

namespace helmbem {

/// Discrete trial/test spaces on a boundary mesh.
///  P0: discontinuous piecewise constants, one dof per element.
///  P1: discontinuous piecewise affine, dofs (2e, 2e+1) with local basis
///      {1, 2t-1}; used for the energy-norm error evaluation only.
///  S2: continuous piecewise quadratics in a hierarchical basis: one hat per
///      node (dof = node id) plus one interior bubble per element
///      (dof = #nodes + element id), local basis {1-t, t, 4t(1-t)}.
enum class SpaceKind { P0, P1, S2 };

int space_dim(SpaceKind space, const Mesh& mesh);

struct GridFunction {
    SpaceKind space;
    Eigen::VectorXcd coeffs;
};

/// Global dof indices of the local basis on element e (3 for S2, else first
/// entries used).
std::array<int, 3> local_dofs(SpaceKind space, const Mesh& mesh, int e);
int local_basis_size(SpaceKind space);

/// Local basis values / t-derivatives at local coordinate t.
std::array<double, 3> local_basis_values(SpaceKind space, double t);
std::array<double, 3> local_basis_dt(SpaceKind space, double t);

/// Pointwise evaluation of a grid function on element e at local t.
std::complex<double> evaluate(const Mesh& mesh, const GridFunction& gf, int e, double t);
/// Arclength derivative d/ds (zero for P0).
std::complex<double> evaluate_ds(const Mesh& mesh, const GridFunction& gf, int e, double t);
/// Second arclength derivative (elementwise; constant for S2).
std::complex<double> evaluate_d2s(const Mesh& mesh, const GridFunction& gf, int e);

} // namespace helmbem

#endif
