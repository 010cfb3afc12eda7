#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "gbclab/errors.hpp"

namespace gbclab {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

inline Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator*(double s, Point3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline bool operator==(Point3 a, Point3 b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline Point3 cross(Point3 a, Point3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double norm(Point3 a) { return std::sqrt(dot(a, a)); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline double distance(Point3 a, Point3 b) { return norm(a - b); }

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline bool is_finite(Point3 p) { return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z); }

// ---------------------------------------------------------------------------
// Robust predicates.
//
// Fast floating-point evaluation behind a forward error bound; when the bound
// cannot certify the sign, the determinant is re-evaluated in exact rational
// arithmetic on the original coordinates. The returned sign is exact for any
// representable input.

// +1 if (a,b,c) make a left turn, -1 for a right turn, 0 if collinear.
int orient2d(Point2 a, Point2 b, Point2 c);

// Assumes (a,b,c) counter-clockwise: +1 if d lies strictly inside the
// circumcircle of (a,b,c), -1 strictly outside, 0 cocircular.
int incircle(Point2 a, Point2 b, Point2 c, Point2 d);

// Exact sign of (a-b).(c-b); used for obtuseness tests near right angles.
int sign_of_dot(Point2 a, Point2 b, Point2 c);

// Exact: is c on the closed segment [a,b]?  (Collinearity checked exactly.)
bool on_segment(Point2 a, Point2 b, Point2 c);

// Do closed segments [a,b] and [c,d] share at least one point?
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d);

// ---------------------------------------------------------------------------
// Metric quantities (plain floating point).

struct Circle {
    Point2 center;
    double radius = 0.0;
};

struct Sphere {
    Point3 center;
    double radius = 0.0;
};

// Circumcircle of a non-degenerate triangle; throws DegenerateInput if the
// points are collinear (detected exactly).
Circle circumcircle(Point2 a, Point2 b, Point2 c);

// Circumsphere of a non-degenerate tetrahedron.
Sphere circumsphere(Point3 a, Point3 b, Point3 c, Point3 d);

// Max pairwise distance, brute force. Throws InvalidInput for fewer than 2 points.
double diameter(std::span<const Point2> pts);
double diameter(std::span<const Point3> pts);

double triangle_area(Point2 a, Point2 b, Point2 c);          // signed
double triangle_area(Point3 a, Point3 b, Point3 c);          // unsigned
double tet_volume(Point3 a, Point3 b, Point3 c, Point3 d);   // signed

struct SimplexQuality {
    double diameter = 0.0;
    double circumradius = 0.0;
    double inradius = 0.0;
    double aspect_ratio = 0.0; // diameter / inradius
};

SimplexQuality triangle_quality(Point2 a, Point2 b, Point2 c);

// Inradius is 3V / (total face area); aspect ratio diameter / inradius.
SimplexQuality tet_quality(Point3 a, Point3 b, Point3 c, Point3 d);

// Indices of the convex hull in counter-clockwise order (monotone chain,
// exact orientation tests). Collinear points on the hull are dropped.
std::vector<int> convex_hull(std::span<const Point2> pts);

// ---------------------------------------------------------------------------
// Polygons.

enum class Location { inside, boundary, outside };

// Simple polygon, vertices in counter-clockwise order. Collinear consecutive
// vertices are allowed and each segment between consecutive vertices counts
// as its own edge. All invariants are checked on construction.
class Polygon {
  public:
    explicit Polygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return verts_; }
    int size() const { return static_cast<int>(verts_.size()); }
    Point2 vertex(int i) const { return verts_[static_cast<size_t>(i)]; }
    std::pair<Point2, Point2> edge(int i) const {
        return {verts_[static_cast<size_t>(i)], verts_[static_cast<size_t>((i + 1) % size())]};
    }

    double area() const;     // shoelace, positive
    double diameter() const;
    bool is_convex() const;  // no right turns (collinear allowed)
    Location locate(Point2 p) const;

    Polygon transformed(double scale, double angle, Point2 shift) const;

  private:
    std::vector<Point2> verts_;
};

// ---------------------------------------------------------------------------
// Polyhedra.

// Closed orientable surface with outward-oriented faces. Faces are triangles;
// a single quadrilateral face is tolerated so the thirteen-vertex example
// family with its square base can be represented.
class Polyhedron {
  public:
    Polyhedron(std::vector<Point3> vertices, std::vector<std::vector<int>> faces);

    const std::vector<Point3>& vertices() const { return verts_; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    double volume() const;   // divergence theorem over the triangulated boundary
    double diameter() const;
    bool is_convex(double tol = 1e-9) const;

    // Unit outward normal and offset of face f: {n, d} with n.x <= d on P.
    std::pair<Point3, double> face_plane(int f) const;

    Polyhedron scaled(double s) const;

  private:
    std::vector<Point3> verts_;
    std::vector<std::vector<int>> faces_;
};

// ---------------------------------------------------------------------------
// Largest inscribed ball (Chebyshev center) of a convex body, computed as a
// small linear program over the facet half-spaces: maximize r subject to
// n_i . c + r <= b_i. The optimum is found by enumerating active sets, which
// is entirely adequate for the handful of facets that occur here.

struct InscribedCircle {
    Point2 center;
    double radius = 0.0;
};

struct InscribedSphere {
    Point3 center;
    double radius = 0.0;
};

InscribedCircle inradius_convex(const Polygon& p);            // throws NonConvexInput
InscribedSphere inradius_convex(const Polyhedron& p);         // throws NonConvexInput

// Inradius of a planar convex face of a polyhedron, measured in its plane.
double face_inradius(const Polyhedron& p, int face);

// Distance from a point to the closed boundary polyline of a face.
double distance_to_face_boundary(const Polyhedron& p, int face, Point3 q);

double point_segment_distance(Point2 p, Point2 a, Point2 b);
double point_segment_distance(Point3 p, Point3 a, Point3 b);

} // namespace gbclab
