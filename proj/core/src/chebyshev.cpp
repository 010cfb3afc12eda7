#include "gbclab/geometry.hpp"

#include <algorithm>
#include <optional>

namespace gbclab {

namespace {

// Solve an m x m dense system by partial-pivot elimination; nullopt if the
// pivot collapses (relative to the given scale).
template <int M>
std::optional<std::array<double, M>> solve_dense(std::array<std::array<double, M + 1>, M> a,
                                                 double scale) {
    for (int col = 0; col < M; ++col) {
        int piv = col;
        for (int r = col + 1; r < M; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (std::fabs(a[piv][col]) < 1e-13 * scale) return std::nullopt;
        std::swap(a[piv], a[col]);
        for (int r = 0; r < M; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (int c = col; c <= M; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::array<double, M> x{};
    for (int i = 0; i < M; ++i) x[i] = a[i][M] / a[i][i];
    return x;
}

struct HalfPlane {
    double nx, ny, b; // n.x <= b, |n| = 1
};

struct HalfSpace {
    double nx, ny, nz, b;
};

// maximize r s.t. n_i . c + r <= b_i, by enumerating active triples.
InscribedCircle chebyshev2(const std::vector<HalfPlane>& hs, double scale) {
    const int m = static_cast<int>(hs.size());
    InscribedCircle best{{0, 0}, -1.0};
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                std::array<std::array<double, 4>, 3> sys{{
                    {hs[i].nx, hs[i].ny, 1.0, hs[i].b},
                    {hs[j].nx, hs[j].ny, 1.0, hs[j].b},
                    {hs[k].nx, hs[k].ny, 1.0, hs[k].b},
                }};
                const auto sol = solve_dense<3>(sys, 1.0);
                if (!sol) continue;
                const auto [cx, cy, r] = *sol;
                if (r <= best.radius) continue;
                bool feasible = true;
                for (const HalfPlane& h : hs)
                    if (h.nx * cx + h.ny * cy + r > h.b + 1e-9 * scale) {
                        feasible = false;
                        break;
                    }
                if (feasible) best = {{cx, cy}, r};
            }
    if (best.radius <= 0.0) throw DegenerateInput("inscribed circle: no interior");
    return best;
}

InscribedSphere chebyshev3(const std::vector<HalfSpace>& hs, double scale) {
    const int m = static_cast<int>(hs.size());
    InscribedSphere best{{0, 0, 0}, -1.0};
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k)
                for (int l = k + 1; l < m; ++l) {
                    std::array<std::array<double, 5>, 4> sys{{
                        {hs[i].nx, hs[i].ny, hs[i].nz, 1.0, hs[i].b},
                        {hs[j].nx, hs[j].ny, hs[j].nz, 1.0, hs[j].b},
                        {hs[k].nx, hs[k].ny, hs[k].nz, 1.0, hs[k].b},
                        {hs[l].nx, hs[l].ny, hs[l].nz, 1.0, hs[l].b},
                    }};
                    const auto sol = solve_dense<4>(sys, 1.0);
                    if (!sol) continue;
                    const auto [cx, cy, cz, r] = *sol;
                    if (r <= best.radius) continue;
                    bool feasible = true;
                    for (const HalfSpace& h : hs)
                        if (h.nx * cx + h.ny * cy + h.nz * cz + r > h.b + 1e-9 * scale) {
                            feasible = false;
                            break;
                        }
                    if (feasible) best = {{cx, cy, cz}, r};
                }
    if (best.radius <= 0.0) throw DegenerateInput("inscribed sphere: no interior");
    return best;
}

} // namespace

InscribedCircle inradius_convex(const Polygon& p) {
    if (!p.is_convex()) throw NonConvexInput("inradius_convex: polygon is not convex");
    std::vector<HalfPlane> hs;
    hs.reserve(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) {
        const auto [a, b] = p.edge(i);
        const Point2 t = b - a;
        const double len = norm(t);
        const Point2 n{t.y / len, -t.x / len}; // outward for a CCW polygon
        hs.push_back({n.x, n.y, dot(n, a)});
    }
    return chebyshev2(hs, p.diameter());
}

InscribedSphere inradius_convex(const Polyhedron& p) {
    if (!p.is_convex()) throw NonConvexInput("inradius_convex: polyhedron is not convex");
    std::vector<HalfSpace> hs;
    hs.reserve(static_cast<size_t>(p.face_count()));
    for (int f = 0; f < p.face_count(); ++f) {
        const auto [n, d] = p.face_plane(f);
        hs.push_back({n.x, n.y, n.z, d});
    }
    return chebyshev3(hs, p.diameter());
}

double face_inradius(const Polyhedron& p, int face) {
    const auto& fv = p.faces()[static_cast<size_t>(face)];
    const auto& verts = p.vertices();
    if (fv.size() == 3) {
        const Point3 a = verts[static_cast<size_t>(fv[0])];
        const Point3 b = verts[static_cast<size_t>(fv[1])];
        const Point3 c = verts[static_cast<size_t>(fv[2])];
        const double area = triangle_area(a, b, c);
        if (area == 0.0) throw DegenerateInput("face_inradius: degenerate face");
        return 2.0 * area / (distance(a, b) + distance(b, c) + distance(c, a));
    }
    // Quadrilateral: map into the face plane and run the planar program.
    const auto [n, d] = p.face_plane(face);
    (void)d;
    const Point3 origin = verts[static_cast<size_t>(fv[0])];
    Point3 e1 = verts[static_cast<size_t>(fv[1])] - origin;
    e1 = (1.0 / norm(e1)) * e1;
    const Point3 e2 = cross(n, e1);
    std::vector<Point2> flat;
    flat.reserve(fv.size());
    for (int idx : fv) {
        const Point3 r = verts[static_cast<size_t>(idx)] - origin;
        flat.push_back({dot(r, e1), dot(r, e2)});
    }
    return inradius_convex(Polygon(std::move(flat))).radius;
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    const Point2 t = b - a;
    const double tt = dot(t, t);
    const double s = tt > 0.0 ? std::clamp(dot(p - a, t) / tt, 0.0, 1.0) : 0.0;
    return distance(p, a + s * t);
}

double point_segment_distance(Point3 p, Point3 a, Point3 b) {
    const Point3 t = b - a;
    const double tt = dot(t, t);
    const double s = tt > 0.0 ? std::clamp(dot(p - a, t) / tt, 0.0, 1.0) : 0.0;
    return distance(p, a + s * t);
}

double distance_to_face_boundary(const Polyhedron& p, int face, Point3 q) {
    const auto& fv = p.faces()[static_cast<size_t>(face)];
    const auto& verts = p.vertices();
    double best = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < fv.size(); ++k) {
        const Point3 a = verts[static_cast<size_t>(fv[k])];
        const Point3 b = verts[static_cast<size_t>(fv[(k + 1) % fv.size()])];
        best = std::min(best, point_segment_distance(q, a, b));
    }
    return best;
}

} // namespace gbclab
