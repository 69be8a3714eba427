#pragma once

#include "orchard/rational.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace orchard {

/// A point in the plane with exact rational coordinates.
struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

/// Orientation of the ordered triple (p, q, r):
/// +1 counterclockwise, -1 clockwise, 0 collinear.
/// Exact: the sign of det [q - p, r - p] over the rationals.
inline int orientation(const Point& p, const Point& q, const Point& r) {
    const Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sign_of(det);
}

/// True iff the full line through u and v meets the open segment (s, t),
/// i.e. s and t lie strictly on opposite sides of line uv. A segment
/// endpoint on the line never counts (strict signs), so pairs sharing an
/// endpoint with the segment contribute nothing.
inline bool strictly_separates(const Point& u, const Point& v,
                               const Point& s, const Point& t) {
    if (u == v) throw std::invalid_argument("strictly_separates: u == v does not span a line");
    return orientation(u, v, s) * orientation(u, v, t) == -1;
}

/// Homogeneous integer coordinates (X/W, Y/W) with W > 0. Used by the
/// counting engines: orientation reduces to an integer 3x3 determinant,
/// avoiding rational normalization in hot loops.
struct HomPoint {
    Integer x;
    Integer y;
    Integer w;
};

inline HomPoint homogenize(const Point& p) {
    const Integer xd = rat_den(p.x), yd = rat_den(p.y);
    return HomPoint{rat_num(p.x) * yd, rat_num(p.y) * xd, xd * yd};
}

inline std::vector<HomPoint> homogenize(std::span<const Point> pts) {
    std::vector<HomPoint> h;
    h.reserve(pts.size());
    for (const Point& p : pts) h.push_back(homogenize(p));
    return h;
}

/// Same sign as orientation() on the dehomogenized points (all w > 0).
inline int orientation_hom(const HomPoint& p, const HomPoint& q, const HomPoint& r) {
    const Integer det = p.x * (q.y * r.w - r.y * q.w)
                      - p.y * (q.x * r.w - r.x * q.w)
                      + p.w * (q.x * r.y - r.x * q.y);
    return det.sign();
}

/// Witness of a general-position failure: a duplicate pair (k < 0) or a
/// collinear triple.
struct PositionViolation {
    int i = -1;
    int j = -1;
    int k = -1; // -1 when points i and j coincide

    bool is_duplicate() const { return k < 0; }
};

namespace detail {

// Canonical direction for slope comparison: flips into the closed right
// half-plane with the +y axis as tie side. Zero vector means duplicate.
struct Dir {
    Integer dx, dy;
    int other; // index of the far point
};

inline Integer cross(const Dir& a, const Dir& b) {
    return a.dx * b.dy - a.dy * b.dx;
}

} // namespace detail

/// Finds a duplicate pair or collinear triple, or nullopt if the points
/// are in general position. O(V^2 log V) exact comparisons: for each
/// anchor, directions to all later points are sorted by slope; equal
/// neighbors witness a collinear triple through the anchor.
inline std::optional<PositionViolation>
find_position_violation(std::span<const Point> points) {
    const int n = static_cast<int>(points.size());
    if (n < 2) return std::nullopt;
    const std::vector<HomPoint> h = homogenize(points);

    std::vector<detail::Dir> dirs;
    for (int i = 0; i < n; ++i) {
        dirs.clear();
        dirs.reserve(n - i - 1);
        for (int j = i + 1; j < n; ++j) {
            // Direction i -> j scaled by the positive factor w_i * w_j.
            Integer dx = h[j].x * h[i].w - h[i].x * h[j].w;
            Integer dy = h[j].y * h[i].w - h[i].y * h[j].w;
            if (dx.is_zero() && dy.is_zero())
                return PositionViolation{i, j, -1};
            if (dx.sign() < 0 || (dx.is_zero() && dy.sign() < 0)) {
                dx = -dx;
                dy = -dy;
            }
            dirs.push_back(detail::Dir{std::move(dx), std::move(dy), j});
        }
        std::sort(dirs.begin(), dirs.end(),
                  [](const detail::Dir& a, const detail::Dir& b) {
                      return detail::cross(a, b).sign() > 0;
                  });
        for (std::size_t m = 1; m < dirs.size(); ++m) {
            if (detail::cross(dirs[m - 1], dirs[m]).is_zero()) {
                int a = dirs[m - 1].other, b = dirs[m].other;
                return PositionViolation{i, std::min(a, b), std::max(a, b)};
            }
        }
    }
    return std::nullopt;
}

/// True iff the points are pairwise distinct and no three are collinear.
inline bool is_general_position(std::span<const Point> points) {
    return !find_position_violation(points).has_value();
}

inline bool is_general_position(const std::vector<Point>& points) {
    return is_general_position(std::span<const Point>(points));
}

/// Rational point on the unit circle via the half-angle parametrization:
/// t -> ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)).
/// Distinct parameters give distinct points, and points taken in
/// increasing parameter order appear in convex position
/// (counterclockwise, sweeping the circle minus (-1, 0)).
inline Point rational_circle_point(const Rational& t) {
    const Rational t2 = t * t;
    const Rational den = 1 + t2;
    return Point{(1 - t2) / den, (2 * t) / den};
}

/// Even-odd point-in-polygon test, exact. The polygon is the closed
/// cycle through `poly` in order; `p` must not lie on the boundary
/// (throws std::invalid_argument if it does).
inline bool point_in_polygon(const Point& p, std::span<const Point> poly) {
    const int n = static_cast<int>(poly.size());
    bool inside = false;
    for (int i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        if (p == a || p == b)
            throw std::invalid_argument("point_in_polygon: query point is a polygon vertex");
        // On-segment check: collinear and within the bounding box.
        if (orientation(a, b, p) == 0 &&
            std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
            std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y))
            throw std::invalid_argument("point_in_polygon: query point lies on an edge");
        // Horizontal ray to +x, half-open in y to dodge vertex double counts.
        const bool a_above = a.y > p.y, b_above = b.y > p.y;
        if (a_above == b_above) continue;
        // x coordinate of the edge at height p.y, compared exactly.
        // a.y != b.y here since a_above != b_above.
        const Rational xi = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (xi > p.x) inside = !inside;
    }
    return inside;
}

} // namespace orchard
