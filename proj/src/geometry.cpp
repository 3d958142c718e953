#include "mindist/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace mindist {

double squared_distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double distance(const Point& a, const Point& b) {
  return std::sqrt(squared_distance(a, b));
}

bool in_open_ball(const Point& x, const Ball& b) {
  return squared_distance(x, b.center) < b.radius * b.radius - geom_eps;
}

namespace {

void require_finite(const BoxDomain& box) {
  if (!box.is_finite()) throw std::invalid_argument("unbounded domain");
}

}  // namespace

std::vector<Point> box_vertices(const BoxDomain& box) {
  require_finite(box);
  const std::size_t d = box.dim();
  std::vector<std::size_t> free_axes;
  for (std::size_t i = 0; i < d; ++i)
    if (!box[i].is_singleton()) free_axes.push_back(i);

  std::vector<Point> out;
  out.reserve(std::size_t{1} << free_axes.size());
  Point p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = box[i].lo;
  const std::size_t count = std::size_t{1} << free_axes.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    for (std::size_t k = 0; k < free_axes.size(); ++k)
      p[free_axes[k]] = (mask >> k) & 1 ? box[free_axes[k]].hi
                                        : box[free_axes[k]].lo;
    out.push_back(p);
  }
  return out;
}

std::vector<BoxEdge> box_edges(const BoxDomain& box) {
  require_finite(box);
  std::vector<BoxEdge> out;
  for (std::size_t a = 0; a < box.dim(); ++a) {
    auto along = box_edges_along(box, a);
    out.insert(out.end(), along.begin(), along.end());
  }
  return out;
}

std::vector<BoxEdge> box_edges_along(const BoxDomain& box, std::size_t axis) {
  require_finite(box);
  const std::size_t d = box.dim();
  std::vector<BoxEdge> out;
  if (box[axis].is_singleton()) return out;

  std::vector<std::size_t> free_axes;
  for (std::size_t i = 0; i < d; ++i)
    if (i != axis && !box[i].is_singleton()) free_axes.push_back(i);

  Point anchor(d);
  for (std::size_t i = 0; i < d; ++i) anchor[i] = box[i].lo;
  const std::size_t count = std::size_t{1} << free_axes.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    for (std::size_t k = 0; k < free_axes.size(); ++k)
      anchor[free_axes[k]] = (mask >> k) & 1 ? box[free_axes[k]].hi
                                             : box[free_axes[k]].lo;
    BoxEdge e;
    e.anchor = anchor;
    e.anchor[axis] = box[axis].lo;
    e.free_axis = axis;
    e.span = box[axis];
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Point> segment_sphere_intersection(const BoxEdge& edge,
                                               const Ball& ball) {
  // Solve (t - c_a)^2 = r^2 - K with K the squared distance on the
  // frozen coordinates.
  const std::size_t a = edge.free_axis;
  double k = 0.0;
  for (std::size_t i = 0; i < edge.anchor.size(); ++i) {
    if (i == a) continue;
    const double d = edge.anchor[i] - ball.center[i];
    k += d * d;
  }
  const double disc = ball.radius * ball.radius - k;
  std::vector<Point> out;
  if (disc < 0.0) return out;
  const double s = std::sqrt(disc);
  const double ca = ball.center[a];
  double roots[2] = {ca - s, ca + s};
  const int nroots = s <= geom_eps ? 1 : 2;
  for (int r = 0; r < nroots; ++r) {
    const double t = roots[r];
    if (t < edge.span.lo - geom_eps || t > edge.span.hi + geom_eps) continue;
    Point p = edge.anchor;
    p[a] = t;
    out.push_back(std::move(p));
  }
  return out;
}

SphereIntersection sphere_sphere_intersection(const Ball& b1, const Ball& b2,
                                              std::size_t dim) {
  SphereIntersection res;
  const double d2 = squared_distance(b1.center, b2.center);
  const double d = std::sqrt(d2);
  const double r1 = b1.radius, r2 = b2.radius;

  if (d <= geom_eps) {
    res.kind = std::abs(r1 - r2) <= geom_eps
                   ? SphereIntersection::Kind::Degenerate
                   : SphereIntersection::Kind::Empty;
    return res;
  }
  if (d > r1 + r2 + geom_eps || d < std::abs(r1 - r2) - geom_eps) {
    res.kind = SphereIntersection::Kind::Empty;
    return res;
  }
  if (std::abs(d - (r1 + r2)) <= geom_eps ||
      std::abs(d - std::abs(r1 - r2)) <= geom_eps) {
    res.kind = SphereIntersection::Kind::Degenerate;
    return res;
  }

  // Distance from b1.center to the radical plane along the center line.
  const double a = (d2 + r1 * r1 - r2 * r2) / (2.0 * d);
  const double h2 = r1 * r1 - a * a;
  if (h2 <= 0.0) {
    res.kind = SphereIntersection::Kind::Degenerate;
    return res;
  }
  const double h = std::sqrt(h2);

  Point u(dim);
  for (std::size_t i = 0; i < dim; ++i)
    u[i] = (b2.center[i] - b1.center[i]) / d;
  Point base(dim);
  for (std::size_t i = 0; i < dim; ++i) base[i] = b1.center[i] + a * u[i];

  if (dim == 2) {
    const Point perp = {-u[1], u[0]};
    res.kind = SphereIntersection::Kind::TwoPoints;
    res.p1 = {base[0] + h * perp[0], base[1] + h * perp[1]};
    res.p2 = {base[0] - h * perp[0], base[1] - h * perp[1]};
    return res;
  }
  if (dim == 3) {
    res.kind = SphereIntersection::Kind::Circle;
    res.circle_center = base;
    res.circle_radius = h;
    res.axis_normal = u;
    return res;
  }
  throw std::invalid_argument("sphere intersection supports dim 2 and 3");
}

std::vector<Point> circle_plane_intersection(const Point& center,
                                             double radius,
                                             const Point& normal,
                                             std::size_t axis, double value) {
  // Orthonormal basis of the circle plane.
  Point u1(3), u2(3);
  {
    // Any vector not parallel to the normal.
    Point t = {1.0, 0.0, 0.0};
    if (std::abs(normal[0]) > 0.9) t = {0.0, 1.0, 0.0};
    // u1 = normalize(t - (t.n) n)
    double dot = 0.0;
    for (int i = 0; i < 3; ++i) dot += t[i] * normal[i];
    double nrm = 0.0;
    for (int i = 0; i < 3; ++i) {
      u1[i] = t[i] - dot * normal[i];
      nrm += u1[i] * u1[i];
    }
    nrm = std::sqrt(nrm);
    for (int i = 0; i < 3; ++i) u1[i] /= nrm;
    u2[0] = normal[1] * u1[2] - normal[2] * u1[1];
    u2[1] = normal[2] * u1[0] - normal[0] * u1[2];
    u2[2] = normal[0] * u1[1] - normal[1] * u1[0];
  }

  // center[axis] + r (cos t * u1[axis] + sin t * u2[axis]) = value
  const double A = radius * u1[axis];
  const double B = radius * u2[axis];
  const double c = value - center[axis];
  const double m2 = A * A + B * B;
  std::vector<Point> out;
  if (m2 <= geom_eps * geom_eps) {
    // Circle parallel to the plane; either fully inside it or disjoint.
    return out;
  }
  const double m = std::sqrt(m2);
  if (std::abs(c) > m + geom_eps) return out;
  // A cos t + B sin t = m cos(t - phi), so cos(t - phi) = c / m.
  const double phi = std::atan2(B, A);
  const double ratio = std::clamp(c / m, -1.0, 1.0);
  const double beta = std::acos(ratio);
  const double angles[2] = {phi + beta, phi - beta};
  const int n = beta <= geom_eps || std::abs(beta - std::acos(-1.0)) <= geom_eps
                    ? 1
                    : 2;
  for (int i = 0; i < n; ++i) {
    const double t = angles[i];
    Point p(3);
    for (int j = 0; j < 3; ++j)
      p[j] = center[j] + radius * (std::cos(t) * u1[j] + std::sin(t) * u2[j]);
    out.push_back(std::move(p));
  }
  return out;
}

std::optional<Hyperplane> hyperplane_through_points(
    const std::vector<Point>& points) {
  const std::size_t d = points.size();
  if (d == 0 || points[0].size() != d)
    throw std::invalid_argument("need exactly dim points of dimension dim");

  if (d == 1) {
    // A hyperplane in 1-D is a point.
    return Hyperplane{{1.0}, points[0][0]};
  }

  // Rows are differences p_i - p_0; the normal spans their null space.
  std::vector<std::vector<double>> m(d - 1, std::vector<double>(d));
  double scale = 0.0;
  for (std::size_t r = 0; r + 1 < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      m[r][c] = points[r + 1][c] - points[0][c];
      scale = std::max(scale, std::abs(m[r][c]));
    }
  if (scale == 0.0) return std::nullopt;
  const double tol = geom_eps * scale;

  // Gaussian elimination with partial pivoting; track pivot columns.
  std::vector<bool> is_pivot_col(d, false);
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col_of_row(d - 1);
  for (std::size_t col = 0; col < d && row + 1 <= d - 1; ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < d - 1; ++r)
      if (std::abs(m[r][col]) > std::abs(m[best][col])) best = r;
    if (std::abs(m[best][col]) <= tol) continue;
    std::swap(m[best], m[row]);
    for (std::size_t r = 0; r < d - 1; ++r) {
      if (r == row) continue;
      const double f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < d; ++c) m[r][c] -= f * m[row][c];
    }
    is_pivot_col[col] = true;
    pivot_col_of_row[row] = col;
    ++row;
  }
  if (row < d - 1) return std::nullopt;  // affinely dependent

  // Back-substitute with the single free column set to 1.
  std::size_t free_col = d;
  for (std::size_t c = 0; c < d; ++c)
    if (!is_pivot_col[c]) {
      free_col = c;
      break;
    }
  Point normal(d, 0.0);
  normal[free_col] = 1.0;
  for (std::size_t r = 0; r < d - 1; ++r) {
    const std::size_t pc = pivot_col_of_row[r];
    normal[pc] = -m[r][free_col] / m[r][pc];
  }
  double nrm = 0.0;
  for (double v : normal) nrm += v * v;
  nrm = std::sqrt(nrm);
  for (double& v : normal) v /= nrm;

  double offset = 0.0;
  for (std::size_t c = 0; c < d; ++c) offset += normal[c] * points[0][c];
  return Hyperplane{std::move(normal), offset};
}

}  // namespace mindist
