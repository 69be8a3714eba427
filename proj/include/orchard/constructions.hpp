#pragma once

#include "orchard/bounds.hpp"
#include "orchard/crossings.hpp"
#include "orchard/drawing.hpp"
#include "orchard/graph.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace orchard {

/// Builders for the optimal / best-known drawings of each family. Every
/// builder asserts its crossing count against the closed form before
/// returning: for all-on-hull drawings via the combinatorial convex
/// count (cheap at any size), for drawings with an interior point via
/// the full counting engine.

namespace detail {

// Snaps tan(theta/2) to a rational with the given power-of-two
// denominator. Angle selection uses doubles; all geometry done with the
// snapped exact values, and every construction is verified exactly.
inline Rational snap_half_angle(double theta, long long denom) {
    const double pi = std::numbers::pi;
    while (theta <= -pi) theta += 2 * pi;
    while (theta > pi) theta -= 2 * pi;
    const double t = std::tan(theta / 2);
    const double scaled = t * static_cast<double>(denom);
    if (!(std::abs(scaled) < 9.0e18))
        throw std::runtime_error("angle too close to the parametrization cut");
    return Rational(Integer(static_cast<long long>(std::llround(scaled))), Integer(denom));
}

inline Drawing checked_convex(const Graph& g, std::vector<int> hull_order,
                              long long expected, const char* what) {
    const CircularOrder ord{std::move(hull_order)};
    const long long got = convex_crossings(g, ord);
    if (got != expected)
        throw std::runtime_error(std::string(what) + ": hull order count " +
                                 std::to_string(got) + " != expected " +
                                 std::to_string(expected));
    return realize_on_circle(g, ord);
}

} // namespace detail

/// Convex-block drawing for the disjoint-cycles and chain families: all
/// vertices on a circle in canonical order, each cycle a contiguous hull
/// block traversed consecutively, so exactly one chord per cycle is
/// internal. The chord of a block with k vertices on one side and
/// m - 2 - k on the other carries all of the family's crossings.
inline Drawing convex_blocks(const FamilySpec& spec) {
    if (spec.family != Family::disjoint_cycles && spec.family != Family::closed_chain &&
        spec.family != Family::open_chain)
        throw std::invalid_argument("convex_blocks: family has no convex-block drawing");
    const Graph g = generate(spec);
    std::vector<int> order(g.vertex_count);
    for (int i = 0; i < g.vertex_count; ++i) order[i] = i;
    const long long expected = *formula_value(spec).exact;
    return detail::checked_convex(g, std::move(order), expected, "convex_blocks");
}

/// Hull order of the two-color prism drawing: 2n polygon positions
/// colored two whites, two blacks, two whites, ... (for odd n the final
/// two positions are one white, one black); each color class wired to
/// its closest clockwise same-color neighbor forms one of the n-cycles
/// and the leftover hull edges are the rungs. Returns the canonical
/// prism vertex occupying each hull position.
inline std::vector<int> prism_two_color_positions(int n) {
    if (n <= 4) throw std::invalid_argument("two-color prism drawing needs n > 4");
    // White i is canonical top vertex i; black j is canonical bottom
    // vertex n + (j + 1 mod n), so the drawn rung hull edges land on the
    // canonical matching i -- n+i.
    std::vector<int> at(2 * n, -1);
    auto white = [&](int i) { return i; };
    auto black = [&](int j) { return n + ((j + 1) % n); };
    int wi = 0, bi = 0;
    const int paired = (n % 2 == 0) ? 2 * n : 2 * n - 2;
    for (int p = 0; p < paired; ++p) {
        const bool is_white = (p % 4 == 0 || p % 4 == 1);
        at[p] = is_white ? white(wi++) : black(bi++);
    }
    if (n % 2 == 1) {
        at[2 * n - 2] = white(wi++);
        at[2 * n - 1] = black(bi++);
    }
    return at;
}

/// The two-color 2n-gon drawing of the n-prism (n > 4). All 2n hull
/// edges are graph edges and crossing-free; the internal chords carry
/// 4n(n-2) crossings for even n and 4n(n-2)+2 for odd n.
inline Drawing prism_two_color(int n) {
    const std::vector<int> at = prism_two_color_positions(n);
    const Graph g = generate({Family::prism, n, 1});
    return detail::checked_convex(g, at, formulas::prism_upper(n), "prism_two_color");
}

/// The two-color ladder drawing (n > 5): the prism positions with the
/// prism's two extra edges absent (the canonical ladder simply does not
/// have them). For even n the absent edges lie in a common four-cycle of
/// the prism; for odd n they are the two chords skipping a single
/// opposite-color vertex. Total is 4(n-1)(n-2) for both parities.
inline Drawing ladder_two_color(int n) {
    if (n <= 5) throw std::invalid_argument("two-color ladder drawing needs n > 5");
    const std::vector<int> prism_at = prism_two_color_positions(n);
    // Reuse the prism layout; bottom vertices renumber so the drawn rungs
    // land on the canonical ladder matching i -- n+i.
    std::vector<int> at(2 * n);
    for (int p = 0; p < 2 * n; ++p) at[p] = prism_at[p];
    const Graph g = generate({Family::ladder, n, 1});
    return detail::checked_convex(g, at, formulas::ladder_upper(n), "ladder_two_color");
}

/// The U-shaped convex ladder drawing: top path along the hull, then the
/// bottom path back. Matches the two-color count for n <= 6 and is the
/// shape of the optimal small ladders.
inline CircularOrder ladder_u_order(int n) {
    std::vector<int> order;
    for (int i = 0; i < n; ++i) order.push_back(i);
    for (int i = 2 * n - 1; i >= n; --i) order.push_back(i);
    return CircularOrder{std::move(order)};
}

enum class SmallCase { P3, P4, L3, L4, L5 };

inline FamilySpec small_case_spec(SmallCase c) {
    switch (c) {
        case SmallCase::P3: return {Family::prism, 3, 1};
        case SmallCase::P4: return {Family::prism, 4, 1};
        case SmallCase::L3: return {Family::ladder, 3, 1};
        case SmallCase::L4: return {Family::ladder, 4, 1};
        case SmallCase::L5: return {Family::ladder, 5, 1};
    }
    throw std::logic_error("unreachable");
}

/// Frozen drawings for the small prisms and ladders. The hull orders
/// were derived once by exhaustive search over all canonical circular
/// orders (the optimum is attainable in convex position for all five
/// cases; see tests/search_test.cpp, which re-derives them) and give the
/// counts 10, 32, 4, 16, 40.
///
/// Regenerate with: orchard search --family prism  --n 3 --mode convex
///                  orchard search --family ladder --n 4 --mode convex   etc.
inline Drawing small_case(SmallCase c) {
    static const std::map<SmallCase, std::pair<std::vector<int>, long long>> frozen = {
        {SmallCase::P3, {{0, 1, 2, 5, 4, 3}, 10}},
        {SmallCase::P4, {{0, 1, 2, 3, 7, 6, 5, 4}, 32}},
        {SmallCase::L3, {{0, 1, 2, 5, 4, 3}, 4}},
        {SmallCase::L4, {{0, 1, 2, 3, 7, 6, 5, 4}, 16}},
        {SmallCase::L5, {{0, 1, 2, 3, 4, 9, 8, 7, 6, 5}, 40}},
    };
    const auto& [order, expected] = frozen.at(c);
    const Graph g = generate(small_case_spec(c));
    return detail::checked_convex(g, order, expected, "small_case");
}

namespace detail {

struct StarLayout {
    // Leaf angles in hull order plus the graph vertex each slot carries.
    std::vector<double> angles;
    std::vector<int> vertex_at_slot;
};

// Realizes a central-star layout: vertex 0 at the origin, leaves on the
// unit circle at snapped rational parameters. Returns nullopt when the
// snapped points degenerate or the count misses the target; callers
// retune and retry.
inline std::optional<Drawing> try_central_star(const Graph& g, const StarLayout& layout,
                                               long long expected, long long denom) {
    std::vector<Point> pts(g.vertex_count, Point{Rational(0), Rational(0)});
    for (std::size_t s = 0; s < layout.angles.size(); ++s) {
        Rational t;
        try {
            t = snap_half_angle(layout.angles[s], denom);
        } catch (const std::runtime_error&) {
            return std::nullopt;
        }
        pts[layout.vertex_at_slot[s]] = rational_circle_point(t);
    }
    if (!is_general_position(pts)) return std::nullopt;
    Drawing d{g, std::move(pts)};
    if (total_crossings(d) != expected) return std::nullopt;
    return d;
}

} // namespace detail

/// Central-star drawing for the common-vertex families: the shared
/// vertex at the origin, the remaining vertices on the unit circle in
/// per-cycle blocks, positioned so that hull-adjacent cycle edges carry
/// no crossings and the spoke crossings realize the closed form. Block
/// angles are staggered to keep every leaf's antipodal direction out of
/// the cycle arcs; correctness is enforced by an exact recount against
/// the formula, not by the specific angles.
inline Drawing central_star(const FamilySpec& spec) {
    if (spec.family != Family::triangle_bouquet &&
        spec.family != Family::three_cycles_common_vertex &&
        spec.family != Family::star_k_n1)
        throw std::invalid_argument("central_star: family has no central-star drawing");
    const Graph g = generate(spec);
    const long long expected = *formula_value(spec).exact;
    const double pi = std::numbers::pi;

    std::vector<detail::StarLayout> candidates;
    switch (spec.family) {
        case Family::star_k_n1: {
            const int n = spec.n;
            detail::StarLayout L;
            for (int j = 0; j < n; ++j) {
                L.angles.push_back(2 * pi * j / n + (j + 1) * pi / (8.0 * n * n));
                L.vertex_at_slot.push_back(1 + j);
            }
            candidates.push_back(std::move(L));
            break;
        }
        case Family::three_cycles_common_vertex: {
            const int s = spec.n - 1; // leaves per cycle
            detail::StarLayout L;
            for (int c = 0; c < 3; ++c) {
                const double center = 2 * pi * c / 3 + (c + 1) * 0.04;
                const double step = (s > 1) ? (pi / 6) / (s - 1) : 0.0;
                for (int i = 0; i < s; ++i) {
                    L.angles.push_back(center + (i - (s - 1) / 2.0) * step);
                    L.vertex_at_slot.push_back(1 + c * s + i);
                }
            }
            candidates.push_back(std::move(L));
            break;
        }
        case Family::triangle_bouquet: {
            const int x = spec.x;
            if (x == 1) {
                detail::StarLayout L;
                L.angles = {0.3, 1.1};
                L.vertex_at_slot = {1, 2};
                candidates.push_back(std::move(L));
                break;
            }
            // Near-regular 2x-gon, triangle c on slots (2c, 2c+1), with an
            // alternating jitter steering every antipodal direction into a
            // between-block gap. The alternation resolves the antipode
            // constraints exactly when x is odd.
            {
                detail::StarLayout L;
                const double sigma = pi / (16.0 * x);
                for (int j = 0; j < 2 * x; ++j) {
                    L.angles.push_back(pi * j / x + (j % 2 == 0 ? sigma : -sigma));
                    L.vertex_at_slot.push_back(1 + j);
                }
                candidates.push_back(std::move(L));
            }
            // Tight pairs at staggered block centers; leaf radii constant.
            {
                detail::StarLayout L;
                const double beta = pi / (8.0 * x);
                const double eps = pi / (2.0 * x * x);
                for (int c = 0; c < x; ++c) {
                    const double center = 2 * pi * c / x + (c + 1) * eps;
                    L.angles.push_back(center - beta / 2);
                    L.vertex_at_slot.push_back(1 + 2 * c);
                    L.angles.push_back(center + beta / 2);
                    L.vertex_at_slot.push_back(2 + 2 * c);
                }
                candidates.push_back(std::move(L));
            }
            break;
        }
        default:
            break;
    }

    for (const auto& layout : candidates) {
        for (long long denom : {1LL << 20, 1LL << 24, 1LL << 28}) {
            if (auto d = detail::try_central_star(g, layout, expected, denom))
                return *d;
        }
    }
    throw std::runtime_error(std::string("central_star: no tuning of ") + spec.describe() +
                             " attains the closed form " + std::to_string(expected));
}

/// The best drawing this library knows how to build for a family
/// instance: the matching optimal construction where one exists, the
/// two-color drawing or stored small case for prisms and ladders.
inline Drawing best_known_drawing(const FamilySpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::cycle: {
            const Graph g = generate(spec);
            std::vector<int> order(g.vertex_count);
            for (int i = 0; i < g.vertex_count; ++i) order[i] = i;
            return detail::checked_convex(g, std::move(order), 0, "cycle drawing");
        }
        case Family::disjoint_cycles:
        case Family::closed_chain:
        case Family::open_chain:
            return convex_blocks(spec);
        case Family::triangle_bouquet:
        case Family::three_cycles_common_vertex:
        case Family::star_k_n1:
            return central_star(spec);
        case Family::prism:
            if (spec.n == 3) return small_case(SmallCase::P3);
            if (spec.n == 4) return small_case(SmallCase::P4);
            return prism_two_color(spec.n);
        case Family::ladder:
            if (spec.n == 3) return small_case(SmallCase::L3);
            if (spec.n == 4) return small_case(SmallCase::L4);
            if (spec.n == 5) return small_case(SmallCase::L5);
            return ladder_two_color(spec.n);
    }
    throw std::logic_error("unreachable family");
}

} // namespace orchard
