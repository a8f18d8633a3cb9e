#include "helmbem/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace helmbem {

double norm(Point2 a) { return std::hypot(a.x, a.y); }

BoundaryGeometry BoundaryGeometry::circle(Point2 center, double radius)
{
    if (!(radius > 0.0)) throw std::invalid_argument("circle: radius must be positive");
    BoundaryGeometry g;
    g.kind = Kind::circle;
    for (int q = 0; q < 4; ++q) {
        GeometrySegment s;
        s.kind = GeometrySegment::Kind::arc;
        s.center = center;
        s.radius = radius;
        s.theta0 = q * M_PI / 2.0;
        s.theta1 = (q + 1) * M_PI / 2.0;
        s.length = radius * (s.theta1 - s.theta0);
        s.chart = 0;
        g.segments.push_back(s);
        g.total_length += s.length;
    }
    return g;
}

BoundaryGeometry BoundaryGeometry::lshape()
{
    const std::vector<Point2> v = {{0.1, 0.0},   {0.0, 0.1},  {-0.05, 0.05},
                                   {0.0, 0.0},   {-0.05, -0.05}, {0.0, -0.1}};
    BoundaryGeometry g;
    g.kind = Kind::lshape;
    const int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) {
        GeometrySegment s;
        s.kind = GeometrySegment::Kind::line;
        s.p0 = v[i];
        s.p1 = v[(i + 1) % n];
        s.length = norm(s.p1 - s.p0);
        if (!(s.length > 0.0)) throw std::invalid_argument("lshape: degenerate edge");
        s.chart = i + 1; // chart 0 is reserved for circles
        g.segments.push_back(s);
        g.total_length += s.length;
    }
    return g;
}

bool BoundaryGeometry::contains(Point2 p) const
{
    if (kind == Kind::circle) {
        const GeometrySegment& s = segments.front();
        return norm(p - s.center) < s.radius;
    }
    // Ray cast along +x over the polygon edges.
    bool inside = false;
    for (const GeometrySegment& s : segments) {
        const Point2 a = s.p0, b = s.p1;
        if ((a.y > p.y) != (b.y > p.y)) {
            const double t = (p.y - a.y) / (b.y - a.y);
            const double xc = a.x + t * (b.x - a.x);
            if (xc > p.x) inside = !inside;
        }
    }
    return inside;
}

double BoundaryGeometry::diameter() const
{
    if (kind == Kind::circle) return 2.0 * segments.front().radius;
    double d = 0.0;
    for (const GeometrySegment& a : segments)
        for (const GeometrySegment& b : segments) d = std::max(d, norm(a.p0 - b.p0));
    return d;
}

namespace {

Point2 segment_position(const GeometrySegment& s, double t)
{
    if (s.kind == GeometrySegment::Kind::arc) {
        const double th = s.theta0 + t * (s.theta1 - s.theta0);
        return {s.center.x + s.radius * std::cos(th), s.center.y + s.radius * std::sin(th)};
    }
    return {s.p0.x + t * (s.p1.x - s.p0.x), s.p0.y + t * (s.p1.y - s.p0.y)};
}

} // namespace

Mesh::Mesh(std::shared_ptr<const BoundaryGeometry> geom, std::vector<Element> elements)
    : geom_(std::move(geom)), elements_(std::move(elements))
{
    const int n = num_elements();
    if (n < 3) throw std::invalid_argument("Mesh: need at least 3 elements");
    nodes_.resize(n);
    h_min_ = elements_[0].length;
    h_max_ = h_min_;
    for (int i = 0; i < n; ++i) {
        Element& e = elements_[i];
        e.node_start = i;
        e.node_end = (i + 1) % n;
        nodes_[i] = segment_position(geom_->segments[e.segment], e.a);
        h_min_ = std::min(h_min_, e.length);
        h_max_ = std::max(h_max_, e.length);
    }
}

SurfacePoint Mesh::point_on(int e, double t) const
{
    const Element& el = elements_.at(e);
    const GeometrySegment& s = geom_->segments[el.segment];
    const double u = el.a + t * (el.b - el.a); // segment parameter
    SurfacePoint p;
    p.chart = s.chart;
    if (s.kind == GeometrySegment::Kind::arc) {
        const double th = s.theta0 + u * (s.theta1 - s.theta0);
        p.x = {s.center.x + s.radius * std::cos(th), s.center.y + s.radius * std::sin(th)};
        p.tangent = {-std::sin(th), std::cos(th)};
        p.normal = {std::cos(th), std::sin(th)};
        p.curvature = 1.0 / s.radius;
        p.chart_pos = s.radius * th;
    } else {
        p.x = {s.p0.x + u * (s.p1.x - s.p0.x), s.p0.y + u * (s.p1.y - s.p0.y)};
        const double inv = 1.0 / s.length;
        p.tangent = {(s.p1.x - s.p0.x) * inv, (s.p1.y - s.p0.y) * inv};
        p.normal = {p.tangent.y, -p.tangent.x};
        p.curvature = 0.0;
        p.chart_pos = u * s.length;
    }
    return p;
}

double Mesh::total_length() const
{
    double l = 0.0;
    for (const Element& e : elements_) l += e.length;
    return l;
}

void Mesh::dump(std::ostream& os) const
{
    for (int i = 0; i < num_elements(); ++i) {
        const Element& e = elements_[i];
        const Point2 a = nodes_[e.node_start], b = nodes_[e.node_end];
        os << i << ", (" << a.x << "," << a.y << "), (" << b.x << "," << b.y << "), "
           << e.length << ", " << e.generation << "\n";
    }
}

Mesh build_initial_mesh(std::shared_ptr<const BoundaryGeometry> geometry)
{
    if (!geometry || geometry->segments.empty())
        throw std::invalid_argument("build_initial_mesh: invalid geometry");
    std::vector<Element> elems;
    for (int s = 0; s < static_cast<int>(geometry->segments.size()); ++s) {
        Element e;
        e.segment = s;
        e.a = 0.0;
        e.b = 1.0;
        e.length = geometry->segments[s].length;
        e.generation = 0;
        e.node_start = e.node_end = 0; // set by Mesh
        elems.push_back(e);
    }
    return Mesh(geometry, std::move(elems));
}

Mesh refine(const Mesh& mesh, const std::vector<int>& marked)
{
    const int n = mesh.num_elements();
    std::vector<char> bisect(n, 0);
    for (int m : marked) {
        if (m < 0 || m >= n) throw std::out_of_range("refine: marked id out of range");
        bisect[m] = 1;
    }

    // Closure: the 2:1 neighbor rule on the post-bisection sizes. Each coarse
    // element is bisected at most once (the input mesh already satisfies the
    // rule), so the fixpoint is over the flag vector only.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            if (bisect[i]) continue;
            const double hi = mesh.element(i).length;
            for (int j : {mesh.prev_element(i), mesh.next_element(i)}) {
                const double hj = mesh.element(j).length / (bisect[j] ? 2.0 : 1.0);
                if (hi > 2.0 * hj * (1.0 + 1e-9)) {
                    bisect[i] = 1;
                    changed = true;
                    break;
                }
            }
        }
    }

    std::vector<Element> elems;
    elems.reserve(static_cast<size_t>(n) * 2);
    for (int i = 0; i < n; ++i) {
        const Element& e = mesh.element(i);
        if (!bisect[i]) {
            elems.push_back(e);
            continue;
        }
        const double mid = 0.5 * (e.a + e.b); // arclength midpoint (constant speed)
        Element left = e, right = e;
        left.b = mid;
        right.a = mid;
        left.length = right.length = 0.5 * e.length;
        left.generation = right.generation = e.generation + 1;
        elems.push_back(left);
        elems.push_back(right);
    }
    return Mesh(mesh.geometry_ptr(), std::move(elems));
}

std::array<int, 2> node_patch(const Mesh& mesh, int node)
{
    if (node < 0 || node >= mesh.num_nodes())
        throw std::out_of_range("node_patch: unknown node id");
    return {mesh.prev_element(node), node};
}

std::vector<int> refined_region(const Mesh& coarse, const Mesh& fine)
{
    const int nc = coarse.num_elements();
    const int nf = fine.num_elements();
    // Nesting check: every fine element must lie inside a coarse one on the
    // same geometry segment, and the coarse elements must be fully covered.
    std::vector<double> covered(nc, 0.0);
    std::vector<char> split(nc, 0);
    int ci = 0;
    for (int fi = 0; fi < nf; ++fi) {
        const Element& f = fine.element(fi);
        const double tol = 1e-12;
        int guard = 0;
        while (guard++ <= nc) {
            const Element& c = coarse.element(ci);
            if (f.segment == c.segment && f.a >= c.a - tol && f.b <= c.b + tol) break;
            ci = (ci + 1) % nc;
        }
        if (guard > nc) throw std::invalid_argument("refined_region: fine is not a refinement of coarse");
        const Element& c = coarse.element(ci);
        covered[ci] += f.length;
        if (std::abs(f.a - c.a) > tol || std::abs(f.b - c.b) > tol) split[ci] = 1;
    }
    for (int i = 0; i < nc; ++i)
        if (std::abs(covered[i] - coarse.element(i).length) > 1e-10 * coarse.element(i).length)
            throw std::invalid_argument("refined_region: fine is not a refinement of coarse");

    std::vector<char> in_region(nc, 0);
    for (int i = 0; i < nc; ++i) {
        if (!split[i]) continue;
        in_region[i] = 1;
        in_region[coarse.prev_element(i)] = 1;
        in_region[coarse.next_element(i)] = 1;
    }
    std::vector<int> region;
    for (int i = 0; i < nc; ++i)
        if (in_region[i]) region.push_back(i);
    return region;
}

} // namespace helmbem
