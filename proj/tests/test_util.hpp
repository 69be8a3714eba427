#pragma once

#include "orchard/orchard.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace orchard::testutil {

inline Rational random_rational(Rng& rng, long long half_range = 8,
                                long long denom = 1 << 10) {
    return Rational(Integer(rng.range(-half_range * denom, half_range * denom)),
                    Integer(denom));
}

inline Point random_point(Rng& rng, long long half_range = 8) {
    return Point{random_rational(rng, half_range), random_rational(rng, half_range)};
}

/// Random points in general position, built incrementally.
inline std::vector<Point> random_general_points(Rng& rng, int n, long long half_range = 8) {
    std::vector<Point> pts;
    pts.reserve(n);
    while (static_cast<int>(pts.size()) < n) {
        pts.push_back(random_point(rng, half_range));
        if (!is_general_position(pts)) pts.pop_back();
    }
    return pts;
}

/// Cubic-time general position oracle: checks every triple directly.
inline bool general_position_naive(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (pts[i] == pts[j]) return false;
            for (int k = j + 1; k < n; ++k)
                if (orientation(pts[i], pts[j], pts[k]) == 0) return false;
        }
    return true;
}

/// Random graph with the requested number of edges on n vertices.
inline Graph random_graph(Rng& rng, int n, int edges) {
    Graph g;
    g.vertex_count = n;
    int guard = 0;
    while (static_cast<int>(g.edges.size()) < edges && guard++ < 10000) {
        const int a = static_cast<int>(rng.below(n));
        const int b = static_cast<int>(rng.below(n));
        if (a == b || g.has_edge(a, b)) continue;
        g.add_edge(a, b);
    }
    return g;
}

inline Point centroid(const std::vector<Point>& pts) {
    Rational sx(0), sy(0);
    for (const Point& p : pts) {
        sx += p.x;
        sy += p.y;
    }
    const Rational inv(Integer(1), Integer(static_cast<long long>(pts.size())));
    return Point{sx * inv, sy * inv};
}

/// Sorts points angularly around an interior anchor, giving a simple
/// (star-shaped) polygon. Requires no two points collinear with the
/// anchor; returns false when that fails so callers can resample.
inline bool star_shaped_order(std::vector<Point>& pts, const Point& anchor) {
    auto half = [&](const Point& p) {
        // 0 for the upper half plane (y > anchor.y, or y == and x >), 1 lower.
        if (p.y != anchor.y) return p.y > anchor.y ? 0 : 1;
        return p.x > anchor.x ? 0 : 1;
    };
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (orientation(anchor, pts[i], pts[j]) == 0) return false;
    std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
        const int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        return orientation(anchor, a, b) > 0;
    });
    return true;
}

/// Random exact affine map with nonzero determinant.
struct AffineMap {
    Rational a, b, c, d, tx, ty;

    Point apply(const Point& p) const {
        return Point{a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
    }
};

inline AffineMap random_affine(Rng& rng) {
    for (;;) {
        AffineMap m{random_rational(rng, 3), random_rational(rng, 3),
                    random_rational(rng, 3), random_rational(rng, 3),
                    random_rational(rng, 5), random_rational(rng, 5)};
        if (m.a * m.d - m.b * m.c != 0) return m;
    }
}

} // namespace orchard::testutil
