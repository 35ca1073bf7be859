#include "credal/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>

#include "credal/core.hpp"

namespace credal {

namespace {

double cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool same_point(const Point2& a, const Point2& b) {
    return std::abs(a.x - b.x) <= kGeomTol && std::abs(a.y - b.y) <= kGeomTol;
}

// Coordinates within kGeomTol of each other are collapsed onto a shared
// representative (the cluster maximum). Without this, points whose
// abscissae differ by an ulp create near-vertical edges whose cross
// products fall below the tolerance, and the hull can drop a genuinely
// extreme vertex.
void snap_axis(std::vector<Point2>& pts, bool x_axis) {
    std::vector<double> vals;
    vals.reserve(pts.size());
    for (const auto& p : pts)
        vals.push_back(x_axis ? p.x : p.y);
    std::sort(vals.begin(), vals.end());
    std::map<double, double> rep;
    std::size_t i = 0;
    while (i < vals.size()) {
        std::size_t j = i;
        while (j + 1 < vals.size() && vals[j + 1] - vals[j] <= kGeomTol)
            ++j;
        for (std::size_t k = i; k <= j; ++k)
            rep[vals[k]] = vals[j];
        i = j + 1;
    }
    for (auto& p : pts)
        (x_axis ? p.x : p.y) = rep[x_axis ? p.x : p.y];
}

std::vector<Point2> sorted_unique(std::vector<Point2> pts) {
    snap_axis(pts, true);
    snap_axis(pts, false);
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::vector<Point2> out;
    for (const auto& p : pts)
        if (out.empty() || !same_point(out.back(), p))
            out.push_back(p);
    return out;
}

} // namespace

std::vector<Point2> convex_hull(std::vector<Point2> points) {
    std::vector<Point2> pts = sorted_unique(std::move(points));
    const std::size_t n = pts.size();
    if (n <= 2)
        return pts;

    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= kGeomTol)
            --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) { // upper chain
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= kGeomTol)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1); // last point repeats the first
    return hull;
}

std::vector<Point2> upper_chain(std::vector<Point2> points) {
    std::vector<Point2> pts = sorted_unique(std::move(points));
    // Collapse points sharing an abscissa to the topmost one.
    std::vector<Point2> tops;
    for (const auto& p : pts) {
        if (!tops.empty() && std::abs(tops.back().x - p.x) <= kGeomTol)
            tops.back() = p; // pts sorted by (x, y): later y is larger
        else
            tops.push_back(p);
    }
    if (tops.size() <= 1)
        return tops;
    std::vector<Point2> chain;
    for (const auto& p : tops) {
        while (chain.size() >= 2 &&
               cross(chain[chain.size() - 2], chain.back(), p) >= -kGeomTol)
            chain.pop_back();
        chain.push_back(p);
    }
    return chain;
}

double ray_max_abscissa(const std::vector<Point2>& hull, double slope) {
    // Signed distance from the ray y = slope * x.
    auto g = [slope](const Point2& p) { return p.y - slope * p.x; };
    double best = -1.0;
    auto consider = [&best](double r) { best = std::max(best, r); };

    if (hull.empty())
        return -1.0;
    if (hull.size() == 1) {
        if (std::abs(g(hull[0])) <= kGeomTol)
            consider(hull[0].x);
        return best;
    }
    const std::size_t n = hull.size();
    const std::size_t edges = (n == 2) ? 1 : n;
    for (std::size_t i = 0; i < edges; ++i) {
        const Point2& a = hull[i];
        const Point2& b = hull[(i + 1) % n];
        double ga = g(a), gb = g(b);
        if (std::abs(ga) <= kGeomTol)
            consider(a.x);
        if (std::abs(gb) <= kGeomTol)
            consider(b.x);
        if ((ga > kGeomTol && gb < -kGeomTol) || (ga < -kGeomTol && gb > kGeomTol)) {
            double s = ga / (ga - gb);
            consider(a.x + s * (b.x - a.x));
        }
    }
    return best;
}

bool is_convex_combination(const std::vector<double>& x,
                           const std::vector<std::vector<double>>& points,
                           double tol) {
    if (points.empty())
        return false;
    const std::size_t n = x.size();
    const std::size_t k = points.size();
    const std::size_t m = n + 1;    // coordinate rows plus the sum-to-1 row
    const std::size_t cols = k + m; // lambdas plus artificials
    const double pivot_tol = 1e-11;

    // Phase-1 simplex: minimize the sum of artificial variables subject to
    //   sum_j lambda_j * points[j] = x,  sum_j lambda_j = 1,  lambda >= 0.
    std::vector<std::vector<double>> t(m, std::vector<double>(cols + 1, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            t[i][j] = points[j][i];
        t[i][cols] = x[i];
    }
    for (std::size_t j = 0; j < k; ++j)
        t[n][j] = 1.0;
    t[n][cols] = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (t[i][cols] < 0.0)
            for (double& v : t[i])
                v = -v;
        t[i][k + i] = 1.0;
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
        basis[i] = k + i;

    // Reduced-cost row; obj[cols] tracks the current infeasibility.
    std::vector<double> obj(cols + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= cols; ++j)
            obj[j] += t[i][j];
    for (std::size_t j = k; j < cols; ++j)
        obj[j] -= 1.0;

    const std::size_t max_iter = 50 * (cols + m);
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) // Bland's rule
            if (obj[j] > pivot_tol) {
                enter = j;
                break;
            }
        if (enter == cols)
            break;

        std::size_t leave = m;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= pivot_tol)
                continue;
            double ratio = t[i][cols] / t[i][enter];
            if (leave == m || ratio < best_ratio - kGeomTol ||
                (ratio <= best_ratio + kGeomTol && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m)
            break; // unbounded; cannot happen in phase 1

        double p = t[leave][enter];
        for (double& v : t[leave])
            v /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || std::abs(t[i][enter]) <= 0.0)
                continue;
            double f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j)
                t[i][j] -= f * t[leave][j];
        }
        double f = obj[enter];
        for (std::size_t j = 0; j <= cols; ++j)
            obj[j] -= f * t[leave][j];
        basis[leave] = enter;
    }
    return obj[cols] <= tol;
}

std::vector<std::size_t>
extreme_point_indices(const std::vector<std::vector<double>>& points, double tol) {
    auto close = [&](const std::vector<double>& a, const std::vector<double>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (std::abs(a[i] - b[i]) >= tol)
                return false;
        return true;
    };

    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dup = false;
        for (std::size_t j : cand)
            if (close(points[i], points[j])) {
                dup = true;
                break;
            }
        if (!dup)
            cand.push_back(i);
    }

    // One pass suffices: removing a convex combination never changes the hull.
    std::vector<bool> removed(cand.size(), false);
    for (std::size_t i = 0; i < cand.size(); ++i) {
        std::vector<std::vector<double>> others;
        for (std::size_t j = 0; j < cand.size(); ++j)
            if (j != i && !removed[j])
                others.push_back(points[cand[j]]);
        if (!others.empty() && is_convex_combination(points[cand[i]], others, tol))
            removed[i] = true;
    }

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (!removed[i])
            kept.push_back(cand[i]);
    return kept;
}

} // namespace credal
