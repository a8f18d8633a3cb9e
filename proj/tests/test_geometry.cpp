#include "doctest.h"
#include "helmbem/geometry.hpp"

#include <cmath>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

using namespace helmbem;

namespace {

std::shared_ptr<const BoundaryGeometry> circle_geom()
{
    return std::make_shared<BoundaryGeometry>(BoundaryGeometry::circle({0, 0}, 0.1));
}

std::shared_ptr<const BoundaryGeometry> lshape_geom()
{
    return std::make_shared<BoundaryGeometry>(BoundaryGeometry::lshape());
}

void check_mesh_axioms(const Mesh& m)
{
    const int n = m.num_elements();
    REQUIRE(n >= 3);
    // conformity by construction: element i runs node i -> node i+1; check the
    // node positions are consistent with the element parametrizations.
    for (int i = 0; i < n; ++i) {
        const SurfacePoint a = m.point_on(i, 0.0);
        const SurfacePoint b = m.point_on(i, 1.0);
        CHECK(norm(a.x - m.node(m.element(i).node_start)) < 1e-14);
        CHECK(norm(b.x - m.node(m.element(i).node_end)) < 1e-13);
    }
    // 2:1 neighbor ratio
    for (int i = 0; i < n; ++i) {
        const double hi = m.element(i).length;
        const double hj = m.element(m.next_element(i)).length;
        CHECK(hi / hj <= 2.0 + 1e-12);
        CHECK(hj / hi <= 2.0 + 1e-12);
    }
    // length conservation
    CHECK(m.total_length() == doctest::Approx(m.geometry().total_length).epsilon(1e-12));
}

} // namespace

TEST_CASE("initial circle mesh: four quarter arcs")
{
    const Mesh m = build_initial_mesh(circle_geom());
    REQUIRE(m.num_elements() == 4);
    CHECK(m.num_nodes() == 4);
    for (int i = 0; i < 4; ++i)
        CHECK(m.element(i).length == doctest::Approx(M_PI / 20.0).epsilon(1e-15));
    CHECK(norm(m.node(0) - Point2{0.1, 0.0}) < 1e-15);
    CHECK(norm(m.node(1) - Point2{0.0, 0.1}) < 1e-15);
    check_mesh_axioms(m);

    const SurfacePoint p = m.point_on(0, 0.5);
    CHECK(norm(p.x - Point2{0.1 * std::sqrt(0.5), 0.1 * std::sqrt(0.5)}) < 1e-15);
    CHECK(dot(p.normal, p.x) == doctest::Approx(0.1).epsilon(1e-14)); // outward
    CHECK(p.curvature == doctest::Approx(10.0));
}

TEST_CASE("initial L-shape mesh: six edges, perimeter matches")
{
    const Mesh m = build_initial_mesh(lshape_geom());
    REQUIRE(m.num_elements() == 6);
    const double perim = 2.0 * 0.1 * std::sqrt(2.0) + 4.0 * 0.05 * std::sqrt(2.0);
    CHECK(m.total_length() == doctest::Approx(perim).epsilon(1e-15));
    check_mesh_axioms(m);
    // outward normal: for the edge from (1/10,0) to (0,1/10) the outward
    // direction is (1,1)/sqrt(2).
    const SurfacePoint p = m.point_on(0, 0.3);
    CHECK(p.normal.x == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(p.normal.y == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("refine: uniform bisection of the circle")
{
    const Mesh m0 = build_initial_mesh(circle_geom());
    const Mesh m1 = refine(m0, {0, 1, 2, 3});
    REQUIRE(m1.num_elements() == 8);
    for (int i = 0; i < 8; ++i)
        CHECK(m1.element(i).length == doctest::Approx(M_PI / 40.0).epsilon(1e-15));
    check_mesh_axioms(m1);
}

TEST_CASE("refine: single mark on a uniform 8-element mesh bisects only it")
{
    const Mesh m0 = build_initial_mesh(circle_geom());
    const Mesh m1 = refine(m0, {0, 1, 2, 3});
    const Mesh m2 = refine(m1, {1});
    CHECK(m2.num_elements() == 9);
    check_mesh_axioms(m2);
}

TEST_CASE("refine: empty marked set returns the mesh unchanged")
{
    const Mesh m0 = build_initial_mesh(circle_geom());
    const Mesh m1 = refine(m0, {2});
    const Mesh m2 = refine(m1, {});
    REQUIRE(m2.num_elements() == m1.num_elements());
    for (int i = 0; i < m1.num_elements(); ++i) {
        CHECK(m2.element(i).a == m1.element(i).a);
        CHECK(m2.element(i).b == m1.element(i).b);
    }
}

TEST_CASE("refine: repeatedly marking one node's patch keeps the 2:1 ratio")
{
    Mesh m = build_initial_mesh(circle_geom());
    for (int round = 0; round < 10; ++round) {
        // patch of the node at angle 0 (node id 0 initially; stays the start
        // node of the first element since elements are ordered)
        int node = 0;
        const auto patch = node_patch(m, node);
        m = refine(m, {patch[0], patch[1]});
        check_mesh_axioms(m);
    }
    CHECK(m.h_min() < M_PI / 20.0 / 500.0);
}

TEST_CASE("refine property test: random marking keeps all axioms")
{
    std::mt19937 rng(12345);
    for (auto geom : {circle_geom(), lshape_geom()}) {
        Mesh m = build_initial_mesh(geom);
        for (int round = 0; round < 22; ++round) {
            const int n = m.num_elements();
            std::vector<int> marked;
            std::uniform_real_distribution<double> u(0.0, 1.0);
            for (int i = 0; i < n; ++i)
                if (u(rng) < 0.3) marked.push_back(i);
            if (marked.empty()) marked.push_back(static_cast<int>(rng() % n));
            const Mesh f = refine(m, marked);
            CHECK(f.num_elements() <= 2 * n);          // child estimate R1
            CHECK(f.num_elements() >= n + 1);          // growth on nonempty marking
            check_mesh_axioms(f);
            m = f;
            if (m.num_elements() > 3000) break;
        }
    }
}

TEST_CASE("node_patch basics")
{
    const Mesh m = build_initial_mesh(circle_geom());
    const auto p = node_patch(m, 0); // node at (0.1, 0)
    CHECK(p[0] == 3);
    CHECK(p[1] == 0);
    CHECK_THROWS_AS(node_patch(m, 99), std::out_of_range);

    // after refining elsewhere, patches of untouched nodes are unchanged
    const Mesh f = refine(m, {2});
    const auto q = node_patch(f, 0);
    CHECK(f.element(q[0]).segment == 3);
    CHECK(f.element(q[1]).segment == 0);
}

TEST_CASE("refined_region")
{
    const Mesh m = build_initial_mesh(circle_geom());
    SUBCASE("fine == coarse gives empty set")
    {
        CHECK(refined_region(m, m).empty());
    }
    SUBCASE("one element bisected gives it plus both neighbors")
    {
        const Mesh f = refine(m, {1});
        const std::vector<int> r = refined_region(m, f);
        CHECK(r == std::vector<int>{0, 1, 2});
    }
    SUBCASE("all refined gives all of coarse")
    {
        const Mesh f = refine(m, {0, 1, 2, 3});
        CHECK(refined_region(m, f).size() == 4);
    }
    SUBCASE("unrelated meshes are rejected")
    {
        const Mesh other = build_initial_mesh(lshape_geom());
        CHECK_THROWS_AS(refined_region(m, other), std::invalid_argument);
        const Mesh f = refine(m, {0});
        CHECK_THROWS_AS(refined_region(f, m), std::invalid_argument);
    }
}

TEST_CASE("refine is idempotent on empty marking after a real refinement")
{
    const Mesh m = build_initial_mesh(lshape_geom());
    const Mesh a = refine(m, {0, 3});
    const Mesh b = refine(a, {});
    REQUIRE(a.num_elements() == b.num_elements());
    for (int i = 0; i < a.num_elements(); ++i)
        CHECK(a.element(i).length == b.element(i).length);
}

TEST_CASE("mesh dump lists one line per element")
{
    const Mesh m = build_initial_mesh(circle_geom());
    std::ostringstream os;
    m.dump(os);
    int lines = 0;
    for (char c : os.str())
        if (c == '\n') ++lines;
    CHECK(lines == 4);
}

TEST_CASE("point containment")
{
    CHECK(circle_geom()->contains({0.0, 0.05}));
    CHECK(!circle_geom()->contains({0.11, 0.0}));
    CHECK(lshape_geom()->contains({0.0, 0.05}));
    CHECK(lshape_geom()->contains({0.02, 0.01}));
    CHECK(!lshape_geom()->contains({-0.04, 0.0}));
    CHECK(!lshape_geom()->contains({0.2, 0.2}));
}
