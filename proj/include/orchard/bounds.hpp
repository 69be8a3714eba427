#pragma once

#include "orchard/graph.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orchard {

/// Closed forms for the known Orchard crossing values and bounds, one
/// helper per number so callers can cite which formula produced what.
namespace formulas {

inline long long disjoint_cycles_value(int n, int x) {
    return 1LL * n * (n - 2) * x * (x - 1);
}
inline long long closed_chain_value(int n, int x) {
    return 1LL * x * (n - 2) * (1LL * x * n - x - n);
}
inline long long open_chain_value(int n, int x) {
    return 1LL * x * (x - 1) * (n - 1) * (n - 2);
}
inline long long triangle_bouquet_value(int x) {
    return 1LL * x * (x - 1) * (x - 1);
}
inline long long three_cycles_value(int n) {
    return 6LL * (n - 1) * (n - 2);
}
/// K_{n,1} for even n; the closed form n(n-2)^2/8 is integral only there.
inline long long star_value(int n) {
    if (n % 2 != 0) throw std::invalid_argument("star value needs even n");
    return 1LL * n * (n - 2) * (n - 2) / 8;
}
inline long long prism_upper(int n) {
    if (n == 3) return 10;
    if (n == 4) return 32;
    return 4LL * n * (n - 2) + (n % 2 == 1 ? 2 : 0);
}
inline long long prism_double_cover_value(int n) { return 3LL * n * (n - 2); }
inline long long prism_overcount_value(int n) { return 4LL * n * (n - 3); }
inline long long ladder_upper(int n) {
    if (n == 3) return 4;
    if (n == 4) return 16;
    if (n == 5) return 40;
    return 4LL * (n - 1) * (n - 2);
}
inline long long ladder_double_cover_value(int n) {
    return 3LL * n * n - 10LL * n + (n % 2 == 0 ? 8 : 7);
}
inline long long ladder_overcount_value(int n) {
    return 4LL * (n - 2) * (n - 3);
}

} // namespace formulas

/// Crossings guaranteed on one cycle's edges by the points separated from
/// it: each of the m - k off-cycle points contributes at least k - 2.
inline long long cycle_lower_term(int total_vertices, int cycle_order) {
    if (cycle_order < 3 || total_vertices < cycle_order)
        throw std::invalid_argument("cycle_lower_term: need m >= k >= 3");
    return 1LL * (total_vertices - cycle_order) * (cycle_order - 2);
}

/// Aggregated lower bound from a cycle double cover: every edge lies on
/// exactly two of the cycles, so summing the per-cycle guarantees counts
/// each crossing at most twice. Rounded up; every stock cover here sums
/// even, the ceiling only matters for user-supplied covers.
inline long long double_cover_bound(const Graph& g, const std::vector<Cycle>& cycles) {
    if (!validate_double_cover(g, cycles))
        throw std::invalid_argument("double_cover_bound: cycles do not cover each edge exactly twice");
    long long sum = 0;
    for (const Cycle& c : cycles)
        sum += cycle_lower_term(g.vertex_count, static_cast<int>(c.size()));
    return (sum + 1) / 2;
}

/// Lower bound from a family of four-cycles with overlaps corrected: the
/// per-cycle guarantees can double-count a crossing only through pairs
/// with one point in each of two cycles sharing an edge, 4 pairs per
/// shared edge. The caller supplies the shared-edge count.
inline long long overcount_corrected_bound(const Graph& g,
                                           const std::vector<Cycle>& four_cycles,
                                           int shared_edges) {
    long long sum = 0;
    for (const Cycle& c : four_cycles) {
        if (c.size() != 4)
            throw std::invalid_argument("overcount_corrected_bound: cycle of order != 4");
        g.validate_cycle(c);
        sum += cycle_lower_term(g.vertex_count, 4);
    }
    return sum - 4LL * shared_edges;
}

/// General form of the overcount correction for cycles of mixed orders:
/// an edge shared by cycles of orders k1 and k2 can be overcounted by at
/// most (k1 - 2) * (k2 - 2) pairs. Shared edges are found from the cycle
/// list itself; an edge on more than two of the cycles is rejected.
inline long long overcount_corrected_bound_general(const Graph& g,
                                                   const std::vector<Cycle>& cycles) {
    long long sum = 0;
    std::map<Edge, std::vector<int>> members;
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
        const Cycle& c = cycles[ci];
        g.validate_cycle(c);
        sum += cycle_lower_term(g.vertex_count, static_cast<int>(c.size()));
        for (std::size_t i = 0; i < c.size(); ++i)
            members[make_edge(c[i], c[(i + 1) % c.size()])].push_back(static_cast<int>(ci));
    }
    for (const auto& [e, owners] : members) {
        if (owners.size() > 2)
            throw std::invalid_argument("overcount correction undefined for an edge on 3+ cycles");
        if (owners.size() == 2) {
            const long long k1 = static_cast<long long>(cycles[owners[0]].size());
            const long long k2 = static_cast<long long>(cycles[owners[1]].size());
            sum -= (k1 - 2) * (k2 - 2);
        }
    }
    return sum;
}

/// The prism's canonical double cover: its n four-cycles plus the two
/// n-cycles (rungs lie on two four-cycles, cycle edges on one four-cycle
/// and one n-cycle).
inline std::vector<Cycle> prism_double_cover(int n) {
    const Graph g = generate({Family::prism, n, 1});
    return g.tagged_cycles;
}

/// The ladder's canonical double cover: two long cycles around the two
/// halves of the ladder plus all four-cycles except the middle one the
/// long cycles overlap on. For even n the long cycles both have order
/// n + 2; for odd n they have orders n + 3 and n + 1.
inline std::vector<Cycle> ladder_double_cover(int n) {
    if (n < 3) throw std::invalid_argument("ladder_double_cover: n >= 3");
    const int j = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
    std::vector<Cycle> cover;
    Cycle upper; // columns 0 .. j+1, contains the top rung (0, n)
    for (int i = 0; i <= j + 1; ++i) upper.push_back(i);
    for (int i = j + 1; i >= 0; --i) upper.push_back(n + i);
    Cycle lower; // columns j .. n-1, contains the bottom rung (n-1, 2n-1)
    for (int i = j; i < n; ++i) lower.push_back(i);
    for (int i = n - 1; i >= j; --i) lower.push_back(n + i);
    cover.push_back(upper);
    cover.push_back(lower);
    for (int i = 0; i + 1 < n; ++i)
        if (i != j) cover.push_back(Cycle{i, i + 1, n + i + 1, n + i});
    return cover;
}

/// The value bracket for one family instance. `exact` is set where a
/// closed form is known; otherwise lower/upper carry the certified
/// bracket. Method strings name the producing argument.
struct BoundReport {
    FamilySpec family;
    std::optional<long long> exact;
    long long lower = 0;
    long long upper = 0;
    std::string lower_method;
    std::string upper_method;

    void check_invariants() const {
        if (lower > upper) throw std::logic_error("BoundReport: lower > upper");
        if (exact && (*exact != lower || *exact != upper))
            throw std::logic_error("BoundReport: exact value outside bracket");
    }
};

namespace detail {

inline BoundReport exact_report(const FamilySpec& spec, long long value,
                                const std::string& method) {
    BoundReport r{spec, value, value, value, method, method};
    r.check_invariants();
    return r;
}

} // namespace detail

/// Evaluates every stated closed-form value / bound pair for a family
/// instance.
inline BoundReport formula_value(const FamilySpec& spec) {
    spec.validate();
    using namespace formulas;
    const int n = spec.n, x = spec.x;
    switch (spec.family) {
        case Family::cycle:
            return detail::exact_report(spec, 0, "single cycle in convex position");
        case Family::disjoint_cycles:
            return detail::exact_report(spec, disjoint_cycles_value(n, x),
                                        "closed form n(n-2)x(x-1)");
        case Family::closed_chain:
            return detail::exact_report(spec, closed_chain_value(n, x),
                                        "closed form x(n-2)(xn-x-n)");
        case Family::open_chain:
            return detail::exact_report(spec, open_chain_value(n, x),
                                        "closed form x(x-1)(n-1)(n-2)");
        case Family::triangle_bouquet:
            return detail::exact_report(spec, triangle_bouquet_value(x),
                                        "closed form x(x-1)^2");
        case Family::three_cycles_common_vertex:
            return detail::exact_report(spec, three_cycles_value(n),
                                        "closed form 6(n-1)(n-2)");
        case Family::star_k_n1:
            return detail::exact_report(spec, star_value(n),
                                        "closed form n(n-2)^2/8");
        case Family::prism: {
            BoundReport r;
            r.family = spec;
            const long long dc = prism_double_cover_value(n);
            const long long oc = prism_overcount_value(n);
            r.lower = std::max(dc, oc);
            r.lower_method = (dc >= oc)
                ? "cycle double cover 3n(n-2)"
                : "shared-edge overcount correction 4n(n-3)";
            r.upper = prism_upper(n);
            r.upper_method = n <= 4 ? "small-case drawing"
                                    : (n % 2 == 0 ? "two-color polygon drawing 4n(n-2)"
                                                  : "two-color polygon drawing 4n(n-2)+2");
            r.check_invariants();
            return r;
        }
        case Family::ladder: {
            if (n == 3) return detail::exact_report(spec, 4, "single four-cycle bound, attained");
            if (n == 4) return detail::exact_report(spec, 16, "two disjoint four-cycles bound, attained");
            BoundReport r;
            r.family = spec;
            const long long dc = ladder_double_cover_value(n);
            const long long oc = ladder_overcount_value(n);
            r.lower = std::max(dc, oc);
            r.lower_method = (dc >= oc)
                ? (n % 2 == 0 ? "cycle double cover 3n^2-10n+8"
                              : "cycle double cover 3n^2-10n+7")
                : "shared-edge overcount correction 4(n-2)(n-3)";
            r.upper = ladder_upper(n);
            r.upper_method = n == 5 ? "small-case drawing"
                                    : "two-color polygon drawing 4(n-1)(n-2)";
            r.check_invariants();
            return r;
        }
    }
    throw std::logic_error("unreachable family");
}

} // namespace orchard
