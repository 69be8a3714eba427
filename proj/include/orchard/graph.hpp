#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orchard {

using Edge = std::pair<int, int>; // stored with first < second
using Cycle = std::vector<int>;   // closed walk, consecutive entries adjacent

inline Edge make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// Simple undirected graph: vertex count plus an edge list. Families
/// additionally tag the vertex cycles their counting arguments are built
/// from (the constituent n-cycles, the four-cycle band of a prism, ...).
struct Graph {
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Cycle> tagged_cycles;

    bool has_edge(int a, int b) const {
        if (a == b) return false;
        const Edge e = make_edge(a, b);
        return std::find(edges.begin(), edges.end(), e) != edges.end();
    }

    void add_edge(int a, int b) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        const Edge e = make_edge(a, b);
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw std::invalid_argument("duplicate edge");
        edges.push_back(e);
    }

    /// Checks the structural invariants (index ranges, no duplicates,
    /// tagged cycles are real cycles along existing edges).
    void validate() const {
        std::set<Edge> seen;
        for (const Edge& e : edges) {
            if (e.first == e.second) throw std::invalid_argument("self loop");
            if (e.first < 0 || e.second >= vertex_count || e.first > e.second)
                throw std::invalid_argument("edge endpoint out of range or unnormalized");
            if (!seen.insert(e).second) throw std::invalid_argument("duplicate edge");
        }
        for (const Cycle& c : tagged_cycles) validate_cycle(c);
    }

    /// A tagged cycle must visit at least 3 distinct vertices and close
    /// along existing edges.
    void validate_cycle(const Cycle& c) const {
        if (c.size() < 3) throw std::invalid_argument("cycle shorter than 3");
        std::set<int> distinct(c.begin(), c.end());
        if (distinct.size() != c.size())
            throw std::invalid_argument("cycle repeats a vertex");
        for (std::size_t i = 0; i < c.size(); ++i) {
            const int a = c[i], b = c[(i + 1) % c.size()];
            if (a < 0 || a >= vertex_count)
                throw std::invalid_argument("cycle vertex out of range");
            if (!has_edge(a, b))
                throw std::invalid_argument("cycle uses a missing edge");
        }
    }
};

enum class Family {
    cycle,
    disjoint_cycles,
    closed_chain,
    open_chain,
    triangle_bouquet,
    three_cycles_common_vertex,
    star_k_n1,
    prism,
    ladder,
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::cycle: return "cycle";
        case Family::disjoint_cycles: return "disjoint-cycles";
        case Family::closed_chain: return "closed-chain";
        case Family::open_chain: return "open-chain";
        case Family::triangle_bouquet: return "bouquet";
        case Family::three_cycles_common_vertex: return "three-cycles";
        case Family::star_k_n1: return "star";
        case Family::prism: return "prism";
        case Family::ladder: return "ladder";
    }
    return "?";
}

inline Family family_from_name(const std::string& s) {
    if (s == "cycle") return Family::cycle;
    if (s == "disjoint-cycles" || s == "disjoint_cycles") return Family::disjoint_cycles;
    if (s == "closed-chain" || s == "closed_chain") return Family::closed_chain;
    if (s == "open-chain" || s == "open_chain") return Family::open_chain;
    if (s == "bouquet" || s == "triangle-bouquet") return Family::triangle_bouquet;
    if (s == "three-cycles" || s == "three_cycles") return Family::three_cycles_common_vertex;
    if (s == "star" || s == "star-k-n1") return Family::star_k_n1;
    if (s == "prism") return Family::prism;
    if (s == "ladder") return Family::ladder;
    throw std::invalid_argument("unknown family: " + s);
}

/// Parameters of a graph family: n is a cycle order (or the star/prism/
/// ladder index), x a number of cycles where the family has one.
struct FamilySpec {
    Family family = Family::cycle;
    int n = 0;
    int x = 1;

    void validate() const {
        switch (family) {
            case Family::cycle:
                require(n >= 3, "cycle order n must be >= 3");
                break;
            case Family::disjoint_cycles:
            case Family::open_chain:
                require(n >= 3, "cycle order n must be >= 3");
                require(x >= 1, "cycle count x must be >= 1");
                break;
            case Family::closed_chain:
                require(n >= 3, "cycle order n must be >= 3");
                // A ring of fewer than 3 cycles collapses onto shared edges.
                require(x >= 3, "closed chain needs x >= 3");
                break;
            case Family::triangle_bouquet:
                require(x >= 1, "triangle count x must be >= 1");
                break;
            case Family::three_cycles_common_vertex:
                require(n >= 3, "cycle order n must be >= 3");
                break;
            case Family::star_k_n1:
                require(n >= 2, "star needs n >= 2");
                require(n % 2 == 0, "star value n(n-2)^2/8 needs even n");
                break;
            case Family::prism:
            case Family::ladder:
                require(n >= 3, "prism/ladder index n must be >= 3");
                break;
        }
    }

    bool uses_x() const {
        return family == Family::disjoint_cycles || family == Family::closed_chain ||
               family == Family::open_chain || family == Family::triangle_bouquet;
    }

    std::string describe() const {
        std::string s = family_name(family);
        s += " n=" + std::to_string(n);
        if (uses_x()) s += " x=" + std::to_string(x);
        if (family == Family::triangle_bouquet) s = std::string(family_name(family)) + " x=" + std::to_string(x);
        return s;
    }

private:
    static void require(bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(msg);
    }
};

namespace detail {

inline void push_cycle(Graph& g, const Cycle& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int a = c[i], b = c[(i + 1) % c.size()];
        if (!g.has_edge(a, b)) g.add_edge(a, b);
    }
    g.tagged_cycles.push_back(c);
}

} // namespace detail

/// Builds the family graph with its canonical vertex numbering.
///
/// Canonical numberings (used by the constructions as hull positions):
///  - cycle / disjoint_cycles: cycle c owns the block [c*n, (c+1)*n).
///  - closed_chain: m = x*(n-1) vertices; cycle c runs through positions
///    c*(n-1) .. c*(n-1)+n-1 (mod m); position (c+1)*(n-1) is shared with
///    the next cycle and the two shared vertices of each cycle are joined
///    by a cycle edge (the chain's minimizing variant).
///  - open_chain: same blocks without the wrap, m = x*(n-1)+1.
///  - triangle_bouquet: vertex 0 is the common vertex, triangle c owns
///    {1+2c, 2+2c}.
///  - three_cycles_common_vertex: vertex 0 common, cycle c owns
///    [1+c*(n-1), 1+(c+1)*(n-1)).
///  - star_k_n1: vertex 0 is the center, leaves 1..n.
///  - prism: top cycle 0..n-1, bottom cycle n..2n-1, rungs i -- n+i;
///    tagged: the n four-cycles then the two n-cycles.
///  - ladder: top path 0..n-1, bottom path n..2n-1, rungs i -- n+i;
///    tagged: the n-1 four-cycles.
inline Graph generate(const FamilySpec& spec) {
    spec.validate();
    Graph g;
    const int n = spec.n, x = spec.x;
    switch (spec.family) {
        case Family::cycle: {
            g.vertex_count = n;
            Cycle c(n);
            for (int i = 0; i < n; ++i) c[i] = i;
            detail::push_cycle(g, c);
            break;
        }
        case Family::disjoint_cycles: {
            g.vertex_count = n * x;
            for (int b = 0; b < x; ++b) {
                Cycle c(n);
                for (int i = 0; i < n; ++i) c[i] = b * n + i;
                detail::push_cycle(g, c);
            }
            break;
        }
        case Family::closed_chain: {
            const int m = x * (n - 1);
            g.vertex_count = m;
            for (int b = 0; b < x; ++b) {
                Cycle c(n);
                for (int i = 0; i < n; ++i) c[i] = (b * (n - 1) + i) % m;
                detail::push_cycle(g, c);
            }
            break;
        }
        case Family::open_chain: {
            g.vertex_count = x * (n - 1) + 1;
            for (int b = 0; b < x; ++b) {
                Cycle c(n);
                for (int i = 0; i < n; ++i) c[i] = b * (n - 1) + i;
                detail::push_cycle(g, c);
            }
            break;
        }
        case Family::triangle_bouquet: {
            g.vertex_count = 2 * x + 1;
            for (int b = 0; b < x; ++b)
                detail::push_cycle(g, Cycle{0, 1 + 2 * b, 2 + 2 * b});
            break;
        }
        case Family::three_cycles_common_vertex: {
            g.vertex_count = 3 * (n - 1) + 1;
            for (int b = 0; b < 3; ++b) {
                Cycle c;
                c.push_back(0);
                for (int i = 0; i < n - 1; ++i) c.push_back(1 + b * (n - 1) + i);
                detail::push_cycle(g, c);
            }
            break;
        }
        case Family::star_k_n1: {
            g.vertex_count = n + 1;
            for (int i = 1; i <= n; ++i) g.add_edge(0, i);
            break;
        }
        case Family::prism: {
            g.vertex_count = 2 * n;
            for (int i = 0; i < n; ++i) {
                const int j = (i + 1) % n;
                g.add_edge(i, j);         // top cycle
                g.add_edge(n + i, n + j); // bottom cycle
                g.add_edge(i, n + i);     // rung
            }
            for (int i = 0; i < n; ++i) {
                const int j = (i + 1) % n;
                g.tagged_cycles.push_back(Cycle{i, j, n + j, n + i});
            }
            Cycle top(n), bot(n);
            for (int i = 0; i < n; ++i) { top[i] = i; bot[i] = n + i; }
            g.tagged_cycles.push_back(top);
            g.tagged_cycles.push_back(bot);
            break;
        }
        case Family::ladder: {
            g.vertex_count = 2 * n;
            for (int i = 0; i < n; ++i) {
                if (i + 1 < n) {
                    g.add_edge(i, i + 1);
                    g.add_edge(n + i, n + i + 1);
                }
                g.add_edge(i, n + i);
            }
            for (int i = 0; i + 1 < n; ++i)
                g.tagged_cycles.push_back(Cycle{i, i + 1, n + i + 1, n + i});
            break;
        }
    }
    g.validate();
    return g;
}

/// True iff every edge of g lies on exactly two of the given cycles.
/// Cycles may repeat; a cycle listed twice covers its edges twice.
inline bool validate_double_cover(const Graph& g, const std::vector<Cycle>& cycles) {
    std::map<Edge, int> cover;
    for (const Edge& e : g.edges) cover[e] = 0;
    for (const Cycle& c : cycles) {
        g.validate_cycle(c);
        for (std::size_t i = 0; i < c.size(); ++i) {
            const Edge e = make_edge(c[i], c[(i + 1) % c.size()]);
            auto it = cover.find(e);
            if (it == cover.end()) return false;
            ++it->second;
        }
    }
    for (const auto& [e, k] : cover)
        if (k != 2) return false;
    return true;
}

} // namespace orchard
