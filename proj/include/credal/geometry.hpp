#pragma once

#include <vector>

namespace credal {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// Strict 2-D convex hull (monotone chain), counterclockwise, collinear
// interior points removed with tolerance kGeomTol. Degenerate inputs
// yield a single point or a two-point segment.
std::vector<Point2> convex_hull(std::vector<Point2> points);

// Upper boundary of the hull of `points`, left to right by x. Points
// sharing an abscissa are collapsed to the topmost one.
std::vector<Point2> upper_chain(std::vector<Point2> points);

// Largest x-coordinate of a point of the hull polygon lying on the ray
// y = slope * x, or -1 when the ray misses the hull. `hull` must come
// from convex_hull.
double ray_max_abscissa(const std::vector<Point2>& hull, double slope);

// Linear feasibility: can `x` be written as a convex combination of
// `points`? Decided by a dense phase-1 simplex with the given tolerance.
bool is_convex_combination(const std::vector<double>& x,
                           const std::vector<std::vector<double>>& points,
                           double tol = 1e-9);

// Indices of the points surviving duplicate removal (max-norm distance
// below `tol`) and the convex-combination filter. The convex hull of the
// surviving points equals the hull of the input.
std::vector<std::size_t>
extreme_point_indices(const std::vector<std::vector<double>>& points,
                      double tol = 1e-9);

} // namespace credal
