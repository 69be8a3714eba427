#pragma once

#include "orchard/geometry.hpp"
#include "orchard/graph.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace orchard {

/// Thrown when a placement is not in general position; carries the
/// witnessing duplicate pair or collinear triple.
struct GeneralPositionError : std::invalid_argument {
    PositionViolation violation;

    explicit GeneralPositionError(const PositionViolation& v)
        : std::invalid_argument(describe(v)), violation(v) {}

    static std::string describe(const PositionViolation& v) {
        if (v.is_duplicate())
            return "placement has coincident points " + std::to_string(v.i) + "," +
                   std::to_string(v.j);
        return "placement has collinear triple " + std::to_string(v.i) + "," +
               std::to_string(v.j) + "," + std::to_string(v.k);
    }
};

/// A rectilinear drawing: one exact point per vertex, injective and with
/// no collinear triple. Construct through make() so the invariants hold.
struct Drawing {
    Graph graph;
    std::vector<Point> placement;

    static Drawing make(Graph g, std::vector<Point> pts) {
        if (static_cast<int>(pts.size()) != g.vertex_count)
            throw std::invalid_argument("placement size != vertex count");
        g.validate();
        if (auto v = find_position_violation(pts)) throw GeneralPositionError(*v);
        return Drawing{std::move(g), std::move(pts)};
    }
};

/// A convex-position drawing up to combinatorics: the cyclic order of the
/// vertices around the hull. Canonical form fixes the rotation and
/// reflection: smallest index first, second element smaller than last.
struct CircularOrder {
    std::vector<int> order;

    static CircularOrder canonical(std::vector<int> ord) {
        const int m = static_cast<int>(ord.size());
        if (m == 0) return CircularOrder{{}};
        check_permutation(ord);
        auto lowest = std::min_element(ord.begin(), ord.end());
        std::rotate(ord.begin(), lowest, ord.end());
        if (m >= 3 && ord[1] > ord[m - 1])
            std::reverse(ord.begin() + 1, ord.end());
        return CircularOrder{std::move(ord)};
    }

    bool is_canonical() const {
        const int m = static_cast<int>(order.size());
        if (m == 0) return true;
        if (order[0] != *std::min_element(order.begin(), order.end())) return false;
        return m < 3 || order[1] < order[m - 1];
    }

    bool operator==(const CircularOrder& o) const { return order == o.order; }

private:
    static void check_permutation(const std::vector<int>& ord) {
        std::vector<char> seen(ord.size(), 0);
        for (int v : ord) {
            if (v < 0 || v >= static_cast<int>(ord.size()) || seen[v])
                throw std::invalid_argument("not a permutation of 0..m-1");
            seen[v] = 1;
        }
    }
};

/// Realizes a circular order as an actual convex drawing: vertex ord[i]
/// is placed on the unit circle at parameter params[i], where params must
/// be strictly increasing (defaults to 0, 1, 2, ...). Points on a circle
/// are automatically in general position.
inline Drawing realize_on_circle(const Graph& g, const CircularOrder& ord,
                                 const std::vector<Rational>& params = {}) {
    const int m = g.vertex_count;
    if (static_cast<int>(ord.order.size()) != m)
        throw std::invalid_argument("order size != vertex count");
    std::vector<Rational> ts = params;
    if (ts.empty()) {
        ts.resize(m);
        std::iota(ts.begin(), ts.end(), Rational(0));
    }
    if (static_cast<int>(ts.size()) != m)
        throw std::invalid_argument("parameter count != vertex count");
    for (int i = 1; i < m; ++i)
        if (!(ts[i - 1] < ts[i]))
            throw std::invalid_argument("circle parameters must be strictly increasing");
    std::vector<Point> pts(m);
    for (int i = 0; i < m; ++i) pts[ord.order[i]] = rational_circle_point(ts[i]);
    return Drawing::make(g, std::move(pts));
}

} // namespace orchard
