#include "gbclab/geometry.hpp"

#include <map>
#include <string>

namespace gbclab {

Polyhedron::Polyhedron(std::vector<Point3> vertices, std::vector<std::vector<int>> faces)
    : verts_(std::move(vertices)), faces_(std::move(faces)) {
    const int nv = static_cast<int>(verts_.size());
    if (nv < 4) throw InvalidInput("polyhedron: need at least 4 vertices");
    for (int i = 0; i < nv; ++i)
        if (!is_finite(verts_[static_cast<size_t>(i)]))
            throw InvalidInput("polyhedron: vertex " + std::to_string(i) + " is not finite");

    int quads = 0;
    std::map<std::pair<int, int>, int> directed;
    for (size_t f = 0; f < faces_.size(); ++f) {
        const auto& face = faces_[f];
        if (face.size() != 3 && face.size() != 4)
            throw InvalidInput("polyhedron: face " + std::to_string(f) +
                               " must have 3 or 4 vertices");
        if (face.size() == 4 && ++quads > 1)
            throw InvalidInput("polyhedron: at most one quadrilateral face is supported");
        for (size_t k = 0; k < face.size(); ++k) {
            const int a = face[k];
            const int b = face[(k + 1) % face.size()];
            if (a < 0 || a >= nv || b < 0 || b >= nv)
                throw InvalidInput("polyhedron: face " + std::to_string(f) +
                                   " references vertex out of range");
            if (a == b)
                throw InvalidInput("polyhedron: face " + std::to_string(f) +
                                   " repeats a vertex");
            if (!directed.emplace(std::make_pair(a, b), static_cast<int>(f)).second)
                throw InvalidInput("polyhedron: directed edge (" + std::to_string(a) + "," +
                                   std::to_string(b) + ") appears twice; surface not orientable");
        }
    }
    // Closed: every directed edge must have its reverse.
    int undirected = 0;
    for (const auto& [e, f] : directed) {
        (void)f;
        if (!directed.count({e.second, e.first}))
            throw InvalidInput("polyhedron: boundary edge (" + std::to_string(e.first) + "," +
                               std::to_string(e.second) + "); surface not closed");
        if (e.first < e.second) ++undirected;
    }
    // Euler formula for the triangulated boundary (a quad counts as two).
    int tri_faces = 0;
    for (const auto& face : faces_) tri_faces += static_cast<int>(face.size()) - 2;
    const int tri_edges = undirected + quads; // each quad gains one diagonal
    if (nv - tri_edges + tri_faces != 2)
        throw InvalidInput("polyhedron: Euler formula violated (not a sphere-like surface)");

    // Planarity of the quad face, if any.
    for (size_t f = 0; f < faces_.size(); ++f) {
        if (faces_[f].size() != 4) continue;
        const auto [n, d] = face_plane(static_cast<int>(f));
        const Point3 q = verts_[static_cast<size_t>(faces_[f][3])];
        if (std::fabs(dot(n, q) - d) > 1e-12 * (1.0 + diameter()))
            throw InvalidInput("polyhedron: quadrilateral face " + std::to_string(f) +
                               " is not planar");
    }

    if (volume() <= 0.0)
        throw InvalidInput("polyhedron: faces must be oriented outward (volume must be positive)");
}

double Polyhedron::volume() const {
    double six_vol = 0.0;
    for (const auto& face : faces_) {
        const Point3 a = verts_[static_cast<size_t>(face[0])];
        for (size_t k = 1; k + 1 < face.size(); ++k) {
            const Point3 b = verts_[static_cast<size_t>(face[k])];
            const Point3 c = verts_[static_cast<size_t>(face[k + 1])];
            six_vol += dot(a, cross(b, c));
        }
    }
    return six_vol / 6.0;
}

double Polyhedron::diameter() const { return gbclab::diameter(std::span<const Point3>(verts_)); }

std::pair<Point3, double> Polyhedron::face_plane(int f) const {
    const auto& face = faces_[static_cast<size_t>(f)];
    const Point3 a = verts_[static_cast<size_t>(face[0])];
    const Point3 b = verts_[static_cast<size_t>(face[1])];
    const Point3 c = verts_[static_cast<size_t>(face[2])];
    Point3 n = cross(b - a, c - a);
    const double len = norm(n);
    if (len == 0.0) throw DegenerateInput("polyhedron: degenerate face " + std::to_string(f));
    n = (1.0 / len) * n;
    return {n, dot(n, a)};
}

bool Polyhedron::is_convex(double tol) const {
    const double scale = diameter();
    for (int f = 0; f < face_count(); ++f) {
        const auto [n, d] = face_plane(f);
        for (const Point3& v : verts_)
            if (dot(n, v) > d + tol * scale) return false;
    }
    return true;
}

Polyhedron Polyhedron::scaled(double s) const {
    std::vector<Point3> out;
    out.reserve(verts_.size());
    for (const Point3& v : verts_) out.push_back(s * v);
    return Polyhedron(std::move(out), faces_);
}

} // namespace gbclab
