#include "gbclab/geometry.hpp"

#include <algorithm>
#include <limits>

namespace gbclab {

Circle circumcircle(Point2 a, Point2 b, Point2 c) {
    if (orient2d(a, b, c) == 0) throw DegenerateInput("circumcircle: collinear triangle");
    // 2 (b-a).p = |b|^2-|a|^2, 2 (c-a).p = |c|^2-|a|^2, shifted to a for conditioning.
    const Point2 u = b - a;
    const Point2 v = c - a;
    const double bu = 0.5 * dot(u, u);
    const double bv = 0.5 * dot(v, v);
    const double det = u.x * v.y - u.y * v.x;
    const Point2 rel{(bu * v.y - bv * u.y) / det, (u.x * bv - v.x * bu) / det};
    return {a + rel, norm(rel)};
}

Sphere circumsphere(Point3 a, Point3 b, Point3 c, Point3 d) {
    const Point3 u = b - a, v = c - a, w = d - a;
    const double det = dot(u, cross(v, w)); // 6V
    const double scale = std::max({norm(u), norm(v), norm(w)});
    if (std::fabs(det) <= 1e-14 * scale * scale * scale)
        throw DegenerateInput("circumsphere: (near-)degenerate tetrahedron");
    const double bu = 0.5 * dot(u, u);
    const double bv = 0.5 * dot(v, v);
    const double bw = 0.5 * dot(w, w);
    const Point3 rel = (1.0 / det) * (bu * cross(v, w) + bv * cross(w, u) + bw * cross(u, v));
    return {a + rel, norm(rel)};
}

double diameter(std::span<const Point2> pts) {
    if (pts.size() < 2) throw InvalidInput("diameter: need at least 2 points");
    double best = 0.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, distance(pts[i], pts[j]));
    return best;
}

double diameter(std::span<const Point3> pts) {
    if (pts.size() < 2) throw InvalidInput("diameter: need at least 2 points");
    double best = 0.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, distance(pts[i], pts[j]));
    return best;
}

double triangle_area(Point2 a, Point2 b, Point2 c) { return 0.5 * cross(b - a, c - a); }

double triangle_area(Point3 a, Point3 b, Point3 c) { return 0.5 * norm(cross(b - a, c - a)); }

double tet_volume(Point3 a, Point3 b, Point3 c, Point3 d) {
    return dot(b - a, cross(c - a, d - a)) / 6.0;
}

SimplexQuality triangle_quality(Point2 a, Point2 b, Point2 c) {
    const double area = std::fabs(triangle_area(a, b, c));
    if (area == 0.0) throw DegenerateInput("triangle_quality: zero area");
    const double la = distance(b, c), lb = distance(c, a), lc = distance(a, b);
    SimplexQuality q;
    q.diameter = std::max({la, lb, lc});
    q.circumradius = circumcircle(a, b, c).radius;
    q.inradius = 2.0 * area / (la + lb + lc);
    q.aspect_ratio = q.diameter / q.inradius;
    return q;
}

SimplexQuality tet_quality(Point3 a, Point3 b, Point3 c, Point3 d) {
    const double vol = std::fabs(tet_volume(a, b, c, d));
    if (vol == 0.0) throw DegenerateInput("tet_quality: zero volume");
    const double area = triangle_area(b, c, d) + triangle_area(a, c, d) + triangle_area(a, b, d) +
                        triangle_area(a, b, c);
    SimplexQuality q;
    const std::array<Point3, 4> p{a, b, c, d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) q.diameter = std::max(q.diameter, distance(p[i], p[j]));
    q.circumradius = circumsphere(a, b, c, d).radius;
    q.inradius = 3.0 * vol / area;
    q.aspect_ratio = q.diameter / q.inradius;
    return q;
}

std::vector<int> convex_hull(std::span<const Point2> pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 3) throw InvalidInput("convex_hull: need at least 3 points");
    std::vector<int> order(pts.size());
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const Point2 p = pts[static_cast<size_t>(i)], q = pts[static_cast<size_t>(j)];
        return p.x < q.x || (p.x == q.x && p.y < q.y);
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](int i, int j) {
                                return pts[static_cast<size_t>(i)] == pts[static_cast<size_t>(j)];
                            }),
                order.end());
    const int m = static_cast<int>(order.size());
    if (m < 3) throw DegenerateInput("convex_hull: fewer than 3 distinct points");

    std::vector<int> hull(2 * static_cast<size_t>(m));
    int k = 0;
    for (int ii = 0; ii < m; ++ii) { // lower chain
        const int i = order[static_cast<size_t>(ii)];
        while (k >= 2 && orient2d(pts[static_cast<size_t>(hull[static_cast<size_t>(k - 2)])],
                                  pts[static_cast<size_t>(hull[static_cast<size_t>(k - 1)])],
                                  pts[static_cast<size_t>(i)]) <= 0)
            --k;
        hull[static_cast<size_t>(k++)] = i;
    }
    const int lower = k + 1;
    for (int ii = m - 2; ii >= 0; --ii) { // upper chain
        const int i = order[static_cast<size_t>(ii)];
        while (k >= lower && orient2d(pts[static_cast<size_t>(hull[static_cast<size_t>(k - 2)])],
                                      pts[static_cast<size_t>(hull[static_cast<size_t>(k - 1)])],
                                      pts[static_cast<size_t>(i)]) <= 0)
            --k;
        hull[static_cast<size_t>(k++)] = i;
    }
    if (k <= 3) throw DegenerateInput("convex_hull: all points collinear");
    hull.resize(static_cast<size_t>(k - 1));
    return hull;
}

} // namespace gbclab
