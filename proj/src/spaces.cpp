#include "helmbem/spaces.hpp"

#include <stdexcept>

namespace helmbem {

int space_dim(SpaceKind space, const Mesh& mesh)
{
    switch (space) {
    case SpaceKind::P0: return mesh.num_elements();
    case SpaceKind::P1: return 2 * mesh.num_elements();
    case SpaceKind::S2: return mesh.num_nodes() + mesh.num_elements();
    }
    throw std::logic_error("space_dim: unknown space");
}

int local_basis_size(SpaceKind space)
{
    switch (space) {
    case SpaceKind::P0: return 1;
    case SpaceKind::P1: return 2;
    case SpaceKind::S2: return 3;
    }
    throw std::logic_error("local_basis_size: unknown space");
}

std::array<int, 3> local_dofs(SpaceKind space, const Mesh& mesh, int e)
{
    const Element& el = mesh.element(e);
    switch (space) {
    case SpaceKind::P0: return {e, -1, -1};
    case SpaceKind::P1: return {2 * e, 2 * e + 1, -1};
    case SpaceKind::S2: return {el.node_start, el.node_end, mesh.num_nodes() + e};
    }
    throw std::logic_error("local_dofs: unknown space");
}

std::array<double, 3> local_basis_values(SpaceKind space, double t)
{
    switch (space) {
    case SpaceKind::P0: return {1.0, 0.0, 0.0};
    case SpaceKind::P1: return {1.0, 2.0 * t - 1.0, 0.0};
    case SpaceKind::S2: return {1.0 - t, t, 4.0 * t * (1.0 - t)};
    }
    throw std::logic_error("local_basis_values: unknown space");
}

std::array<double, 3> local_basis_dt(SpaceKind space, double t)
{
    switch (space) {
    case SpaceKind::P0: return {0.0, 0.0, 0.0};
    case SpaceKind::P1: return {0.0, 2.0, 0.0};
    case SpaceKind::S2: return {-1.0, 1.0, 4.0 - 8.0 * t};
    }
    throw std::logic_error("local_basis_dt: unknown space");
}

std::complex<double> evaluate(const Mesh& mesh, const GridFunction& gf, int e, double t)
{
    const auto dofs = local_dofs(gf.space, mesh, e);
    const auto vals = local_basis_values(gf.space, t);
    std::complex<double> s = 0.0;
    for (int i = 0; i < local_basis_size(gf.space); ++i) s += gf.coeffs(dofs[i]) * vals[i];
    return s;
}

std::complex<double> evaluate_ds(const Mesh& mesh, const GridFunction& gf, int e, double t)
{
    const auto dofs = local_dofs(gf.space, mesh, e);
    const auto vals = local_basis_dt(gf.space, t);
    std::complex<double> s = 0.0;
    for (int i = 0; i < local_basis_size(gf.space); ++i) s += gf.coeffs(dofs[i]) * vals[i];
    return s / mesh.element(e).length;
}

std::complex<double> evaluate_d2s(const Mesh& mesh, const GridFunction& gf, int e)
{
    const double h = mesh.element(e).length;
    switch (gf.space) {
    case SpaceKind::P0:
    case SpaceKind::P1: return 0.0;
    case SpaceKind::S2: {
        const auto dofs = local_dofs(gf.space, mesh, e);
        return -8.0 * gf.coeffs(dofs[2]) / (h * h);
    }
    }
    throw std::logic_error("evaluate_d2s: unknown space");
}

} // namespace helmbem
