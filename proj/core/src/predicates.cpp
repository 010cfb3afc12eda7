#include "gbclab/geometry.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace gbclab {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Forward error bounds for the filtered determinants, in the style of
// adaptive-precision predicate implementations.
const double kEps = std::numeric_limits<double>::epsilon() / 2.0; // 2^-53
const double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
const double kIncircleBound = (10.0 + 96.0 * kEps) * kEps;
const double kDotBound = (4.0 + 32.0 * kEps) * kEps;

int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

int orient2d_exact(Point2 a, Point2 b, Point2 c) {
    const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    return sign_of((ax - cx) * (by - cy) - (ay - cy) * (bx - cx));
}

int incircle_exact(Point2 a, Point2 b, Point2 c, Point2 d) {
    const Rational adx = Rational(a.x) - Rational(d.x);
    const Rational ady = Rational(a.y) - Rational(d.y);
    const Rational bdx = Rational(b.x) - Rational(d.x);
    const Rational bdy = Rational(b.y) - Rational(d.y);
    const Rational cdx = Rational(c.x) - Rational(d.x);
    const Rational cdy = Rational(c.y) - Rational(d.y);
    const Rational alift = adx * adx + ady * ady;
    const Rational blift = bdx * bdx + bdy * bdy;
    const Rational clift = cdx * cdx + cdy * cdy;
    const Rational det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                         clift * (adx * bdy - bdx * ady);
    return sign_of(det);
}

int dot_exact(Point2 a, Point2 b, Point2 c) {
    const Rational abx = Rational(a.x) - Rational(b.x);
    const Rational aby = Rational(a.y) - Rational(b.y);
    const Rational cbx = Rational(c.x) - Rational(b.x);
    const Rational cby = Rational(c.y) - Rational(b.y);
    return sign_of(abx * cbx + aby * cby);
}

} // namespace

int orient2d(Point2 a, Point2 b, Point2 c) {
    const double detleft = (a.x - c.x) * (b.y - c.y);
    const double detright = (a.y - c.y) * (b.x - c.x);
    const double det = detleft - detright;
    const double detsum = std::fabs(detleft) + std::fabs(detright);
    if (std::fabs(det) > kOrientBound * detsum) return det > 0 ? 1 : -1;
    return orient2d_exact(a, b, c);
}

int incircle(Point2 a, Point2 b, Point2 c, Point2 d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;
    const double det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                       clift * (adx * bdy - bdx * ady);
    const double permanent = alift * (std::fabs(bdx * cdy) + std::fabs(cdx * bdy)) +
                             blift * (std::fabs(cdx * ady) + std::fabs(adx * cdy)) +
                             clift * (std::fabs(adx * bdy) + std::fabs(bdx * ady));
    if (std::fabs(det) > kIncircleBound * permanent) return det > 0 ? 1 : -1;
    return incircle_exact(a, b, c, d);
}

int sign_of_dot(Point2 a, Point2 b, Point2 c) {
    const double t1 = (a.x - b.x) * (c.x - b.x);
    const double t2 = (a.y - b.y) * (c.y - b.y);
    const double d = t1 + t2;
    if (std::fabs(d) > kDotBound * (std::fabs(t1) + std::fabs(t2))) return d > 0 ? 1 : -1;
    return dot_exact(a, b, c);
}

bool on_segment(Point2 a, Point2 b, Point2 c) {
    if (orient2d(a, b, c) != 0) return false;
    // Collinear: betweenness along the dominant axis (exact comparisons).
    if (std::fabs(b.x - a.x) >= std::fabs(b.y - a.y)) {
        return c.x >= std::min(a.x, b.x) && c.x <= std::max(a.x, b.x);
    }
    return c.y >= std::min(a.y, b.y) && c.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
    const int d1 = orient2d(c, d, a);
    const int d2 = orient2d(c, d, b);
    const int d3 = orient2d(a, b, c);
    const int d4 = orient2d(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(c, d, a)) return true;
    if (d2 == 0 && on_segment(c, d, b)) return true;
    if (d3 == 0 && on_segment(a, b, c)) return true;
    if (d4 == 0 && on_segment(a, b, d)) return true;
    return false;
}

} // namespace gbclab
