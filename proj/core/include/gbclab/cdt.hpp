#pragma once

#include <optional>
#include <unordered_map>

#include "gbclab/geometry.hpp"

namespace gbclab {

// Sorted-pair key for undirected edges.
inline long long edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<long long>(u) << 32) | static_cast<unsigned int>(v);
}

// Triangle mesh with adjacency. Triangles are positively oriented;
// neighbors[t][k] is the triangle across the edge opposite vertex k (directed
// edge v[k+1] -> v[k+2] in the counter-clockwise cycle), -1 on the boundary.
// Constrained edges carry the index of the source polygon edge.
struct TriMesh {
    std::vector<Point2> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 3>> neighbors;
    std::unordered_map<long long, int> constrained;
    // Ancestor triangle in the mesh this one was derived from by refinement;
    // identity for freshly built meshes.
    std::vector<int> root_triangle;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int triangle_count() const { return static_cast<int>(triangles.size()); }
    std::array<Point2, 3> triangle_points(int t) const {
        const auto& tri = triangles[static_cast<size_t>(t)];
        return {vertices[static_cast<size_t>(tri[0])], vertices[static_cast<size_t>(tri[1])],
                vertices[static_cast<size_t>(tri[2])]};
    }
    bool is_constrained(int u, int v) const { return constrained.count(edge_key(u, v)) > 0; }
    std::optional<int> constrained_label(int u, int v) const {
        const auto it = constrained.find(edge_key(u, v));
        if (it == constrained.end()) return std::nullopt;
        return it->second;
    }
    double area() const;
    // Vertices incident to an edge with only one triangle.
    std::vector<bool> boundary_vertices() const;
};

// Build a mesh from explicit triangles (tests and hand-made fixtures).
// Orientations are fixed up, adjacency is derived, constrained edges are
// tagged with label -1 unless given.
TriMesh make_trimesh(std::vector<Point2> vertices, std::vector<std::array<int, 3>> triangles,
                     const std::vector<std::pair<int, int>>& constrained_edges = {});

// Delaunay triangulation of a point set. Every triangle's open circumdisk is
// empty of input points; exactly cocircular quadruples are resolved toward
// the diagonal incident to the lowest vertex index. Input order is preserved
// in the vertex numbering. Throws on duplicates or an all-collinear set.
TriMesh delaunay(std::span<const Point2> points);

// Constrained Delaunay triangulation of a simple polygon: Delaunay of the
// vertices, polygon edges enforced by flips, exterior triangles removed.
// No Steiner vertices; mesh vertex i is polygon vertex i.
TriMesh constrained_delaunay(const Polygon& p);

struct QualityReport {
    double max_circumradius = 0.0;
    int argmax_triangle = -1;
    bool longest_edge_on_boundary = false;
    double diameter = 0.0;
    double ratio = 0.0; // max_circumradius / diameter
};

QualityReport quality_report(const TriMesh& m, const Polygon& p);

// True iff the max-circumradius triangle either stays below the domain
// diameter or attains the max with its longest edge on the boundary.
bool verify_walk_lemma(const TriMesh& m, const Polygon& p);

struct AdjacentRadiusViolation {
    int triangle = -1;
    int neighbor = -1;
    double radius = 0.0;
    double neighbor_radius = 0.0;
};

// Checks that every obtuse triangle whose longest edge is interior and
// unconstrained has a strictly larger circumradius across that edge.
// Equal radii within 1e-12 relative (cocircular ties) are tolerated.
std::optional<AdjacentRadiusViolation> find_adjacent_radius_violation(const TriMesh& m);
bool verify_adjacent_circumradius(const TriMesh& m);

// Flip the edge opposite vertex k of triangle t. Returns false when the edge
// is on the boundary or the surrounding quad is not strictly convex.
bool flip_edge(TriMesh& m, int t, int k);

struct BaryLocation {
    int triangle = -1;
    std::array<double, 3> bary{};
};

// Point location by walking, with a linear-scan fallback. Points within a
// small tolerance outside the mesh are clamped; nullopt if truly outside.
std::optional<BaryLocation> locate_point(const TriMesh& m, Point2 p, int hint = 0);

// Structural checks shared by tests: orientation, adjacency symmetry,
// constrained-edge presence, and area against the polygon when given.
void validate_trimesh(const TriMesh& m, const Polygon* p = nullptr);

} // namespace gbclab
