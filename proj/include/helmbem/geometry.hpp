#ifndef HELMBEM_GEOMETRY_HPP
#define HELMBEM_GEOMETRY_HPP

#include <array>
#include <iosfwd>
#include <memory>
#include <vector>

namespace helmbem {

struct Point2 {
    double x = 0.0, y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double norm(Point2 a);

/// One piece of the initial boundary description: a circular arc with
/// arclength parametrization or a straight segment with affine parametrization.
struct GeometrySegment {
    enum class Kind { arc, line };
    Kind kind;
    // arc data (global angles, counterclockwise, theta1 > theta0)
    Point2 center{};
    double radius = 0.0, theta0 = 0.0, theta1 = 0.0;
    // line data
    Point2 p0{}, p1{};
    double length = 0.0;
    // Panels on the same chart have translation-invariant kernels: the whole
    // circle is one chart, each polygon edge is its own chart.
    int chart = 0;
};

struct BoundaryGeometry {
    enum class Kind { circle, lshape };
    Kind kind;
    std::vector<GeometrySegment> segments; // counterclockwise, closed
    double total_length = 0.0;

    static BoundaryGeometry circle(Point2 center, double radius);
    /// Rotated-L hexagon with vertices (1/10,0), (0,1/10), (-1/20,1/20),
    /// (0,0), (-1/20,-1/20), (0,-1/10). See README for the relation to the
    /// set expression this domain is usually written as.
    static BoundaryGeometry lshape();

    bool contains(Point2 p) const;
    double diameter() const;
};

/// A point on the boundary together with the local frame and chart coordinate.
struct SurfacePoint {
    Point2 x;
    Point2 tangent; // unit, counterclockwise
    Point2 normal;  // unit, outward
    double curvature = 0.0;
    int chart = 0;
    double chart_pos = 0.0; // arclength coordinate within the chart
};

struct Element {
    int segment;   // initial geometry segment
    double a, b;   // parameter subinterval of the segment's [0,1]
    double length; // exact arclength
    int node_start, node_end;
    int generation;
};

/// Conforming mesh of the closed boundary curve. Elements are stored in
/// traversal order, element i runs from node i to node (i+1) % N.
class Mesh {
public:
    Mesh(std::shared_ptr<const BoundaryGeometry> geom, std::vector<Element> elements);

    const BoundaryGeometry& geometry() const { return *geom_; }
    std::shared_ptr<const BoundaryGeometry> geometry_ptr() const { return geom_; }

    int num_elements() const { return static_cast<int>(elements_.size()); }
    int num_nodes() const { return num_elements(); }
    const Element& element(int i) const { return elements_.at(i); }
    Point2 node(int i) const { return nodes_.at(i); }

    /// Evaluate position/frame at local parameter t in [0,1] of element e.
    SurfacePoint point_on(int e, double t) const;

    double h_min() const { return h_min_; }
    double h_max() const { return h_max_; }
    double total_length() const;

    int prev_element(int e) const { return (e + num_elements() - 1) % num_elements(); }
    int next_element(int e) const { return (e + 1) % num_elements(); }

    void dump(std::ostream& os) const;

private:
    std::shared_ptr<const BoundaryGeometry> geom_;
    std::vector<Element> elements_;
    std::vector<Point2> nodes_;
    double h_min_ = 0.0, h_max_ = 0.0;
};

/// Initial mesh: 4 quarter arcs for the circle, 6 edges for the L-shape.
Mesh build_initial_mesh(std::shared_ptr<const BoundaryGeometry> geometry);

/// Bisect all marked elements at their arclength midpoints, then recursively
/// bisect neighbors until h_T / h_{T'} <= 2 holds for all neighbor pairs.
/// Returns the coarsest such conforming mesh; #fine <= 2 #coarse.
Mesh refine(const Mesh& mesh, const std::vector<int>& marked);

/// The two elements incident to a node of the closed curve.
std::array<int, 2> node_patch(const Mesh& mesh, int node);

/// Coarse elements that were refined in `fine`, plus their immediate
/// neighbors. Throws if `fine` is not a refinement of `coarse`.
std::vector<int> refined_region(const Mesh& coarse, const Mesh& fine);

} // namespace helmbem

#endif
