#pragma once

#include <optional>
#include <vector>

#include "mindist/types.hpp"

namespace mindist {

double squared_distance(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);

// Open-ball membership with the library-wide convention
// ||x - p||^2 < r^2 - geom_eps, so boundary points count as outside.
bool in_open_ball(const Point& x, const Ball& b);

// All corners of a box.  Degenerate axes contribute a single value, so a
// full-dimensional box yields 2^dim points.  Throws std::invalid_argument
// on unbounded input.
std::vector<Point> box_vertices(const BoxDomain& box);

// All one-dimensional faces.  A full-dimensional box has dim * 2^(dim-1)
// edges; degenerate axes never appear as free axes.
std::vector<BoxEdge> box_edges(const BoxDomain& box);

// Edges whose free axis equals `axis`.
std::vector<BoxEdge> box_edges_along(const BoxDomain& box, std::size_t axis);

// Points on the closed segment at exact distance ball.radius from
// ball.center, sorted by the free coordinate.  A tangential touch is
// reported once.
std::vector<Point> segment_sphere_intersection(const BoxEdge& edge,
                                               const Ball& ball);

struct SphereIntersection {
  enum class Kind { Empty, TwoPoints, Circle, Degenerate };
  Kind kind = Kind::Empty;
  Point p1, p2;         // TwoPoints
  Point circle_center;  // Circle
  double circle_radius = 0.0;
  Point axis_normal;    // unit normal of the circle plane
};

// Intersection of the boundary spheres of two balls, dim 2 or 3.
// Tangency and coincident equal spheres are reported as Degenerate.
SphereIntersection sphere_sphere_intersection(const Ball& b1, const Ball& b2,
                                              std::size_t dim);

// Points of a circle (center, radius, plane normal) lying on the
// axis-aligned hyperplane x[axis] = value.  0, 1, or 2 points.
std::vector<Point> circle_plane_intersection(const Point& center,
                                             double radius,
                                             const Point& normal,
                                             std::size_t axis, double value);

struct Hyperplane {
  Point normal;        // unit length
  double offset = 0.0; // normal . x = offset on the plane
};

// Hyperplane through dim affinely independent points; nullopt when the
// points are affinely dependent (rank checked against geom_eps).
std::optional<Hyperplane> hyperplane_through_points(
    const std::vector<Point>& points);

}  // namespace mindist
