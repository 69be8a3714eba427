#include "orchard/graph.hpp"

#include "orchard/bounds.hpp"

#include <gtest/gtest.h>

#include <set>

namespace orchard {
namespace {

TEST(Generate, PrismShape) {
    const Graph g = generate({Family::prism, 5, 1});
    EXPECT_EQ(g.vertex_count, 10);
    EXPECT_EQ(g.edges.size(), 15u); // 3n
    EXPECT_EQ(g.tagged_cycles.size(), 7u); // n four-cycles + two n-cycles
    int fours = 0, fives = 0;
    for (const Cycle& c : g.tagged_cycles) {
        if (c.size() == 4) ++fours;
        if (c.size() == 5) ++fives;
    }
    EXPECT_EQ(fours, 5);
    EXPECT_EQ(fives, 2);
}

TEST(Generate, LadderShape) {
    const Graph g = generate({Family::ladder, 5, 1});
    EXPECT_EQ(g.vertex_count, 10);
    EXPECT_EQ(g.edges.size(), 13u); // 3n - 2, two edges less than the prism
    EXPECT_EQ(g.tagged_cycles.size(), 4u);
    for (const Cycle& c : g.tagged_cycles) EXPECT_EQ(c.size(), 4u);
}

TEST(Generate, DisjointCycles) {
    const Graph g = generate({Family::disjoint_cycles, 4, 3});
    EXPECT_EQ(g.vertex_count, 12);
    EXPECT_EQ(g.edges.size(), 12u);
    EXPECT_EQ(g.tagged_cycles.size(), 3u);
    for (const Cycle& c : g.tagged_cycles) EXPECT_EQ(c.size(), 4u);
}

TEST(Generate, FamilySizeInvariants) {
    for (int n = 3; n <= 7; ++n) {
        EXPECT_EQ(generate({Family::prism, n, 1}).edges.size(), 3u * n);
        EXPECT_EQ(generate({Family::ladder, n, 1}).edges.size(), 3u * n - 2);
        for (int x = 3; x <= 5; ++x) {
            const Graph closed = generate({Family::closed_chain, n, x});
            EXPECT_EQ(closed.vertex_count, x * (n - 1));
            EXPECT_EQ(closed.edges.size(), static_cast<std::size_t>(x) * n);
            const Graph open = generate({Family::open_chain, n, x});
            EXPECT_EQ(open.vertex_count, x * (n - 1) + 1);
            EXPECT_EQ(open.edges.size(), static_cast<std::size_t>(x) * n);
        }
    }
    for (int x = 1; x <= 6; ++x)
        EXPECT_EQ(generate({Family::triangle_bouquet, 3, x}).vertex_count, 2 * x + 1);
}

TEST(Generate, Deterministic) {
    const FamilySpec spec{Family::closed_chain, 5, 4};
    const Graph a = generate(spec), b = generate(spec);
    EXPECT_EQ(a.vertex_count, b.vertex_count);
    EXPECT_EQ(a.edges, b.edges);
    EXPECT_EQ(a.tagged_cycles, b.tagged_cycles);
}

TEST(Generate, LadderConsecutiveCyclesShareOneEdge) {
    const Graph g = generate({Family::ladder, 7, 1});
    auto edge_set = [](const Cycle& c) {
        std::set<Edge> s;
        for (std::size_t i = 0; i < c.size(); ++i)
            s.insert(make_edge(c[i], c[(i + 1) % c.size()]));
        return s;
    };
    for (std::size_t i = 0; i + 1 < g.tagged_cycles.size(); ++i) {
        const auto a = edge_set(g.tagged_cycles[i]);
        const auto b = edge_set(g.tagged_cycles[i + 1]);
        int shared = 0;
        for (const Edge& e : a) shared += b.count(e);
        EXPECT_EQ(shared, 1);
    }
}

TEST(Generate, PrismFourCyclesFormClosedBand) {
    const int n = 6;
    const Graph g = generate({Family::prism, n, 1});
    auto edge_set = [](const Cycle& c) {
        std::set<Edge> s;
        for (std::size_t i = 0; i < c.size(); ++i)
            s.insert(make_edge(c[i], c[(i + 1) % c.size()]));
        return s;
    };
    int shared_total = 0;
    for (int i = 0; i < n; ++i) {
        const auto a = edge_set(g.tagged_cycles[i]);
        const auto b = edge_set(g.tagged_cycles[(i + 1) % n]);
        for (const Edge& e : a) shared_total += b.count(e);
    }
    EXPECT_EQ(shared_total, n);
}

TEST(Generate, ParameterErrors) {
    EXPECT_THROW(generate({Family::cycle, 2, 1}), std::invalid_argument);
    EXPECT_THROW(generate({Family::disjoint_cycles, 4, 0}), std::invalid_argument);
    EXPECT_THROW(generate({Family::closed_chain, 4, 2}), std::invalid_argument);
    EXPECT_THROW(generate({Family::star_k_n1, 5, 1}), std::invalid_argument);
    EXPECT_THROW(generate({Family::prism, 2, 1}), std::invalid_argument);
}

TEST(DoubleCover, PrismCanonicalCoverIsValid) {
    for (int n = 3; n <= 12; ++n) {
        const Graph g = generate({Family::prism, n, 1});
        EXPECT_TRUE(validate_double_cover(g, prism_double_cover(n))) << "n=" << n;
    }
}

TEST(DoubleCover, LadderFourCyclesAloneAreNot) {
    const Graph g = generate({Family::ladder, 6, 1});
    EXPECT_FALSE(validate_double_cover(g, g.tagged_cycles));
}

TEST(DoubleCover, SingleCycleListedTwice) {
    const Graph g = generate({Family::cycle, 5, 1});
    EXPECT_TRUE(validate_double_cover(g, {g.tagged_cycles[0], g.tagged_cycles[0]}));
}

TEST(DoubleCover, LadderCanonicalCoverIsValid) {
    for (int n = 3; n <= 12; ++n) {
        const Graph g = generate({Family::ladder, n, 1});
        const auto cover = ladder_double_cover(n);
        EXPECT_TRUE(validate_double_cover(g, cover)) << "n=" << n;
        // Long-cycle orders per parity: {n+2, n+2} or {n+3, n+1}.
        std::multiset<std::size_t> lengths{cover[0].size(), cover[1].size()};
        if (n % 2 == 0)
            EXPECT_EQ(lengths, (std::multiset<std::size_t>{static_cast<std::size_t>(n) + 2,
                                                           static_cast<std::size_t>(n) + 2}));
        else
            EXPECT_EQ(lengths, (std::multiset<std::size_t>{static_cast<std::size_t>(n) + 1,
                                                           static_cast<std::size_t>(n) + 3}));
        EXPECT_EQ(cover.size(), 2u + (n - 2)); // all four-cycles but one
    }
}

TEST(DoubleCover, RejectsForeignCycle) {
    const Graph g = generate({Family::cycle, 4, 1});
    EXPECT_THROW(validate_double_cover(g, {Cycle{0, 1, 3}}), std::invalid_argument);
}

TEST(FamilySpecJsonNames, RoundTripNames) {
    for (Family f : {Family::cycle, Family::disjoint_cycles, Family::closed_chain,
                     Family::open_chain, Family::triangle_bouquet,
                     Family::three_cycles_common_vertex, Family::star_k_n1, Family::prism,
                     Family::ladder})
        EXPECT_EQ(family_from_name(family_name(f)), f);
    EXPECT_THROW(family_from_name("moebius"), std::invalid_argument);
}

} // namespace
} // namespace orchard
