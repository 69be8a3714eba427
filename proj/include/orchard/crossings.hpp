#pragma once

#include "orchard/drawing.hpp"
#include "orchard/geometry.hpp"
#include "orchard/graph.hpp"
#include "orchard/parallel.hpp"

#include <atomic>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace orchard {

/// An Orchard crossing on edge (s, t) is an intersection of the open
/// segment (s, t) with the line spanned by any other vertex pair {u, v}.
/// Every pair of drawing points generates a line, not only drawn edges;
/// the count for an edge is the number of pairs whose line strictly
/// separates its endpoints.

namespace detail {

// All orientation signs of points against the line through h[u], h[v].
inline void line_signs(std::span<const HomPoint> h, int u, int v,
                       std::vector<std::int8_t>& out) {
    const HomPoint& a = h[u];
    const HomPoint& b = h[v];
    // Line coefficients: sign(orient(a, b, p)) = sign(A*p.x + B*p.y + C*p.w).
    const Integer A = a.y * b.w - b.y * a.w;
    const Integer B = b.x * a.w - a.x * b.w;
    const Integer C = a.x * b.y - b.x * a.y;
    const int n = static_cast<int>(h.size());
    out.resize(n);
    for (int p = 0; p < n; ++p) {
        if (p == u || p == v) {
            out[p] = 0;
            continue;
        }
        const Integer d = A * h[p].x + B * h[p].y + C * h[p].w;
        out[p] = static_cast<std::int8_t>(d.sign());
    }
}

} // namespace detail

/// Optimized total count over homogeneous coordinates: one pass per line
/// (all C(V,2) of them), each scanning every edge. O(V^2 (V + E)).
/// Partitioning lines across threads sums the same integer terms, so the
/// result is identical for any thread count.
inline long long total_crossings_hom(const Graph& g, std::span<const HomPoint> h,
                                     int threads = 1) {
    const int n = g.vertex_count;
    if (static_cast<int>(h.size()) != n)
        throw std::invalid_argument("coordinate count != vertex count");
    const long long lines = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<long long> partial(std::max(1, threads), 0);
    for_chunks(lines, threads, [&](int chunk, long long begin, long long end) {
        std::vector<std::int8_t> sg;
        long long acc = 0;
        long long idx = 0;
        for (int u = 0; u < n && idx < end; ++u) {
            for (int v = u + 1; v < n && idx < end; ++v, ++idx) {
                if (idx < begin) continue;
                detail::line_signs(h, u, v, sg);
                for (const Edge& e : g.edges)
                    if (sg[e.first] * sg[e.second] == -1) ++acc;
            }
        }
        partial[chunk] = acc;
    });
    long long total = 0;
    for (long long p : partial) total += p;
    return total;
}

/// Total Orchard crossings of a drawing: the sum of the per-edge counts
/// over the graph's edges.
inline long long total_crossings(const Drawing& d, int threads = 1) {
    return total_crossings_hom(d.graph, homogenize(d.placement), threads);
}

/// Independent oracle: for every edge, test every vertex pair with the
/// rational-arithmetic predicate directly. Slower route, different
/// arithmetic path; must agree with total_crossings exactly.
inline long long total_crossings_naive(const Drawing& d) {
    const int n = d.graph.vertex_count;
    long long total = 0;
    for (const Edge& e : d.graph.edges) {
        const Point& s = d.placement[e.first];
        const Point& t = d.placement[e.second];
        for (int u = 0; u < n; ++u) {
            if (u == e.first || u == e.second) continue;
            for (int v = u + 1; v < n; ++v) {
                if (v == e.first || v == e.second) continue;
                if (strictly_separates(d.placement[u], d.placement[v], s, t)) ++total;
            }
        }
    }
    return total;
}

/// Orchard crossings on one edge of the drawing.
inline long long edge_crossings(const Drawing& d, int s, int t) {
    if (!d.graph.has_edge(s, t))
        throw std::invalid_argument("edge_crossings: not an edge of the graph");
    const int n = d.graph.vertex_count;
    long long count = 0;
    for (int u = 0; u < n; ++u) {
        if (u == s || u == t) continue;
        for (int v = u + 1; v < n; ++v) {
            if (v == s || v == t) continue;
            if (strictly_separates(d.placement[u], d.placement[v],
                                   d.placement[s], d.placement[t]))
                ++count;
        }
    }
    return count;
}

/// Per-edge counts, aligned with d.graph.edges. Sum equals total_crossings.
inline std::vector<long long> per_edge_crossings(const Drawing& d, int threads = 1) {
    const int n = d.graph.vertex_count;
    const std::vector<HomPoint> h = homogenize(d.placement);
    const long long lines = static_cast<long long>(n) * (n - 1) / 2;
    const int nchunks = std::max(1, threads);
    std::vector<std::vector<long long>> partial(
        nchunks, std::vector<long long>(d.graph.edges.size(), 0));
    for_chunks(lines, threads, [&](int chunk, long long begin, long long end) {
        std::vector<std::int8_t> sg;
        auto& acc = partial[chunk];
        long long idx = 0;
        for (int u = 0; u < n && idx < end; ++u) {
            for (int v = u + 1; v < n && idx < end; ++v, ++idx) {
                if (idx < begin) continue;
                detail::line_signs(h, u, v, sg);
                for (std::size_t ei = 0; ei < d.graph.edges.size(); ++ei) {
                    const Edge& e = d.graph.edges[ei];
                    if (sg[e.first] * sg[e.second] == -1) ++acc[ei];
                }
            }
        }
    });
    std::vector<long long> counts(d.graph.edges.size(), 0);
    for (const auto& p : partial)
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += p[i];
    return counts;
}

/// Crossings on the cycle's edges generated by lines through p and a
/// cycle vertex: the per-point contribution the lower-bound arguments
/// count. A point inside a convex cycle contributes exactly |cycle|, a
/// point outside exactly |cycle| - 2; general placements give at least
/// those values.
inline long long point_cycle_contribution(const Drawing& d, const Cycle& cycle, int p) {
    d.graph.validate_cycle(cycle);
    for (int v : cycle)
        if (v == p)
            throw std::invalid_argument("point_cycle_contribution: point lies on the cycle");
    if (p < 0 || p >= d.graph.vertex_count)
        throw std::invalid_argument("point_cycle_contribution: vertex out of range");
    long long count = 0;
    const std::size_t k = cycle.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Point& s = d.placement[cycle[i]];
        const Point& t = d.placement[cycle[(i + 1) % k]];
        for (int w : cycle) {
            if (w == cycle[i] || w == cycle[(i + 1) % k]) continue;
            if (strictly_separates(d.placement[p], d.placement[w], s, t)) ++count;
        }
    }
    return count;
}

/// Crossing count of any convex-position drawing realizing the given
/// circular order, computed combinatorially: the pair {u, v} crosses edge
/// (s, t) iff exactly one endpoint lies on the open arc from u to v, so
/// an edge separated by k vertices on one side is crossed k*(m-2-k) times.
inline long long convex_crossings(const Graph& g, const CircularOrder& ord) {
    const int m = g.vertex_count;
    if (static_cast<int>(ord.order.size()) != m)
        throw std::invalid_argument("order size != vertex count");
    std::vector<int> pos(m);
    for (int i = 0; i < m; ++i) {
        const int v = ord.order[i];
        if (v < 0 || v >= m) throw std::invalid_argument("order is not a permutation");
        pos[v] = i;
    }
    long long total = 0;
    for (const Edge& e : g.edges) {
        const int gap = (pos[e.second] - pos[e.first] + m) % m;
        const long long inside = gap - 1;
        total += inside * (m - 2 - inside);
    }
    return total;
}

/// Fast path for search loops: convex count from a precomputed position
/// array (pos[v] = hull slot of vertex v).
inline long long convex_crossings_pos(const Graph& g, std::span<const int> pos) {
    const int m = g.vertex_count;
    long long total = 0;
    for (const Edge& e : g.edges) {
        const int gap = (pos[e.second] - pos[e.first] + m) % m;
        const long long inside = gap - 1;
        total += inside * (m - 2 - inside);
    }
    return total;
}

} // namespace orchard
