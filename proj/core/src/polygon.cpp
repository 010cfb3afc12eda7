#include "gbclab/geometry.hpp"

#include <string>

namespace gbclab {

namespace {

// Non-adjacent edges of a simple polygon may not meet at all; edges sharing a
// vertex may not fold back onto each other.
void check_simple(const std::vector<Point2>& v) {
    const int n = static_cast<int>(v.size());
    auto vert = [&](int i) { return v[static_cast<size_t>(((i % n) + n) % n)]; };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_intersect(vert(i), vert(i + 1), vert(j), vert(j + 1)))
                throw InvalidInput("polygon: edges " + std::to_string(i) + " and " +
                                   std::to_string(j) + " intersect; polygon must be simple");
        }
        // Fold-back at the shared vertex of consecutive edges.
        if (orient2d(vert(i), vert(i + 1), vert(i + 2)) == 0 &&
            on_segment(vert(i), vert(i + 1), vert(i + 2)))
            throw InvalidInput("polygon: edge " + std::to_string((i + 1) % n) +
                               " folds back onto edge " + std::to_string(i));
    }
}

} // namespace

Polygon::Polygon(std::vector<Point2> vertices) : verts_(std::move(vertices)) {
    const int n = static_cast<int>(verts_.size());
    if (n < 3) throw InvalidInput("polygon: need at least 3 vertices");
    for (int i = 0; i < n; ++i) {
        if (!is_finite(verts_[static_cast<size_t>(i)]))
            throw InvalidInput("polygon: vertex " + std::to_string(i) + " is not finite");
        if (verts_[static_cast<size_t>(i)] == verts_[static_cast<size_t>((i + 1) % n)])
            throw InvalidInput("polygon: consecutive vertices " + std::to_string(i) + " and " +
                               std::to_string((i + 1) % n) + " coincide");
    }
    double twice_area = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto [a, b] = edge(i);
        twice_area += cross(a, b);
    }
    if (twice_area <= 0.0)
        throw InvalidInput("polygon: vertices must be in counter-clockwise order");
    check_simple(verts_);
}

double Polygon::area() const {
    double twice = 0.0;
    for (int i = 0; i < size(); ++i) {
        const auto [a, b] = edge(i);
        twice += cross(a, b);
    }
    return 0.5 * twice;
}

double Polygon::diameter() const { return gbclab::diameter(std::span<const Point2>(verts_)); }

bool Polygon::is_convex() const {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (orient2d(vertex(i), vertex((i + 1) % n), vertex((i + 2) % n)) < 0) return false;
    }
    return true;
}

Location Polygon::locate(Point2 p) const {
    int winding = 0;
    for (int i = 0; i < size(); ++i) {
        const auto [a, b] = edge(i);
        if (on_segment(a, b, p)) return Location::boundary;
        if (a.y <= p.y) {
            if (b.y > p.y && orient2d(a, b, p) > 0) ++winding;
        } else {
            if (b.y <= p.y && orient2d(a, b, p) < 0) --winding;
        }
    }
    return winding != 0 ? Location::inside : Location::outside;
}

Polygon Polygon::transformed(double scale, double angle, Point2 shift) const {
    const double c = std::cos(angle), s = std::sin(angle);
    std::vector<Point2> out;
    out.reserve(verts_.size());
    for (const Point2& v : verts_)
        out.push_back({scale * (c * v.x - s * v.y) + shift.x, scale * (s * v.x + c * v.y) + shift.y});
    return Polygon(std::move(out));
}

} // namespace gbclab
