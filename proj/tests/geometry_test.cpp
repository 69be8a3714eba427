#include "orchard/geometry.hpp"
#include "orchard/rational.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

namespace orchard {
namespace {

using testutil::random_general_points;
using testutil::random_point;

Point P(long long x, long long y) { return Point{Rational(x), Rational(y)}; }

TEST(Rational, StaysNormalized) {
    Rational q(Integer(-6), Integer(4));
    EXPECT_EQ(rat_num(q), Integer(-3));
    EXPECT_EQ(rat_den(q), Integer(2));

    q += Rational(3, 4);
    EXPECT_EQ(q, Rational(-3, 4));
    EXPECT_GT(rat_den(q), 0);

    // Denominator positive and coprime through arithmetic.
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational a = testutil::random_rational(rng);
        Rational b = testutil::random_rational(rng);
        if (b == 0) b = Rational(1, 3);
        const Rational r = (a + b) * (a - b) / b;
        EXPECT_GT(rat_den(r), 0);
        EXPECT_EQ(gcd(abs(rat_num(r)), rat_den(r)), Integer(1));
    }
}

TEST(Orientation, KnownTriples) {
    EXPECT_EQ(orientation(P(0, 0), P(1, 0), P(2, 0)), 0);
    EXPECT_EQ(orientation(P(0, 0), P(1, 0), P(0, 1)), 1);
    EXPECT_EQ(orientation(P(0, 0), P(0, 1), P(1, 0)), -1);
}

TEST(Orientation, AntisymmetricUnderSwaps) {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        const Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
        const int o = orientation(a, b, c);
        EXPECT_EQ(orientation(b, a, c), -o);
        EXPECT_EQ(orientation(a, c, b), -o);
        EXPECT_EQ(orientation(c, b, a), -o);
    }
}

TEST(Orientation, HomogeneousPathAgrees) {
    Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        const Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
        EXPECT_EQ(orientation_hom(homogenize(a), homogenize(b), homogenize(c)),
                  orientation(a, b, c));
    }
}

TEST(StrictlySeparates, KnownCases) {
    EXPECT_TRUE(strictly_separates(P(0, -1), P(0, 1), P(-1, 0), P(1, 0)));
    EXPECT_FALSE(strictly_separates(P(0, -1), P(0, 1), P(1, 0), P(2, 0)));
    // s on the line: strictness keeps it out.
    EXPECT_FALSE(strictly_separates(P(0, 0), P(1, 1), P(2, 2), P(5, 0)));
}

TEST(StrictlySeparates, DegeneratePairThrows) {
    EXPECT_THROW(strictly_separates(P(1, 1), P(1, 1), P(0, 0), P(2, 0)),
                 std::invalid_argument);
}

TEST(StrictlySeparates, SymmetryInBothPairs) {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        const auto pts = random_general_points(rng, 4);
        const bool r = strictly_separates(pts[0], pts[1], pts[2], pts[3]);
        EXPECT_EQ(strictly_separates(pts[1], pts[0], pts[2], pts[3]), r);
        EXPECT_EQ(strictly_separates(pts[0], pts[1], pts[3], pts[2]), r);
    }
}

// Of the three pairings of four points in general position, exactly one
// has mutually separating pairs (crossing segments) when the
// quadrilateral is convex, and none when a point lies in the triangle of
// the others.
TEST(StrictlySeparates, FourPointPairings) {
    Rng rng(19);
    auto crossing = [](const Point& u, const Point& v, const Point& s, const Point& t) {
        return strictly_separates(u, v, s, t) && strictly_separates(s, t, u, v);
    };
    int convex_seen = 0, triangle_seen = 0;
    for (int i = 0; i < 400; ++i) {
        const auto p = random_general_points(rng, 4);
        const int separations = crossing(p[0], p[1], p[2], p[3]) +
                                crossing(p[0], p[2], p[1], p[3]) +
                                crossing(p[0], p[3], p[1], p[2]);
        bool contained = false; // some point inside the triangle of the rest
        for (int j = 0; j < 4 && !contained; ++j) {
            std::vector<Point> tri;
            for (int k = 0; k < 4; ++k)
                if (k != j) tri.push_back(p[k]);
            contained = point_in_polygon(p[j], tri);
        }
        if (contained) {
            EXPECT_EQ(separations, 0);
            ++triangle_seen;
        } else {
            EXPECT_EQ(separations, 1);
            ++convex_seen;
        }
    }
    EXPECT_GT(convex_seen, 0);
    EXPECT_GT(triangle_seen, 0);
}

TEST(GeneralPosition, KnownCases) {
    EXPECT_TRUE(is_general_position({P(0, 0), P(1, 0), P(0, 1)}));
    EXPECT_FALSE(is_general_position({P(0, 0), P(1, 0), P(2, 0)}));
    EXPECT_FALSE(is_general_position({P(0, 0), P(0, 0), P(1, 1)}));
    EXPECT_TRUE(is_general_position(std::vector<Point>{}));
    EXPECT_TRUE(is_general_position({P(3, 4)}));
}

TEST(GeneralPosition, ViolationWitness) {
    const auto dup = find_position_violation(std::vector<Point>{P(5, 5), P(1, 2), P(5, 5)});
    ASSERT_TRUE(dup.has_value());
    EXPECT_TRUE(dup->is_duplicate());
    EXPECT_EQ(dup->i, 0);
    EXPECT_EQ(dup->j, 2);

    const auto col =
        find_position_violation(std::vector<Point>{P(9, 9), P(0, 0), P(1, 1), P(3, 3)});
    ASSERT_TRUE(col.has_value());
    EXPECT_FALSE(col->is_duplicate());
    EXPECT_EQ(orientation(P(9, 9), P(0, 0), P(1, 1)) == 0,
              (col->i == 0 || col->j == 0 || col->k == 0));
}

TEST(GeneralPosition, MatchesNaiveOracle) {
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        // Small coordinate range so collinear triples actually occur.
        std::vector<Point> pts;
        const int n = 3 + static_cast<int>(rng.below(5));
        for (int j = 0; j < n; ++j)
            pts.push_back(Point{Rational(rng.range(-3, 3)), Rational(rng.range(-3, 3))});
        EXPECT_EQ(is_general_position(pts), testutil::general_position_naive(pts));
    }
}

TEST(CirclePoint, KnownParameters) {
    EXPECT_EQ(rational_circle_point(Rational(0)), (P(1, 0)));
    EXPECT_EQ(rational_circle_point(Rational(1)), (P(0, 1)));
    const Point p = rational_circle_point(Rational(1, 2));
    EXPECT_EQ(p.x, Rational(3, 5));
    EXPECT_EQ(p.y, Rational(4, 5));
}

TEST(CirclePoint, OnUnitCircleExactly) {
    Rng rng(29);
    for (int i = 0; i < 200; ++i) {
        const Point p = rational_circle_point(testutil::random_rational(rng, 50));
        EXPECT_EQ(p.x * p.x + p.y * p.y, Rational(1));
    }
}

TEST(CirclePoint, SortedParametersAreConvexAndCcw) {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> ts;
        for (int i = 0; i < 7; ++i) ts.push_back(testutil::random_rational(rng, 20));
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        std::vector<Point> pts;
        for (const Rational& t : ts) pts.push_back(rational_circle_point(t));
        ASSERT_TRUE(is_general_position(pts));
        const int m = static_cast<int>(pts.size());
        for (int i = 0; i < m; ++i)
            EXPECT_EQ(orientation(pts[i], pts[(i + 1) % m], pts[(i + 2) % m]), 1);
    }
}

TEST(PointInPolygon, SquareAndBoundary) {
    const std::vector<Point> square{P(0, 0), P(4, 0), P(4, 4), P(0, 4)};
    EXPECT_TRUE(point_in_polygon(Point{Rational(1), Rational(3, 2)}, square));
    EXPECT_FALSE(point_in_polygon(P(5, 2), square));
    EXPECT_THROW(point_in_polygon(P(2, 0), square), std::invalid_argument);
    EXPECT_THROW(point_in_polygon(P(4, 4), square), std::invalid_argument);
}

TEST(PointInPolygon, NonConvexEvenOdd) {
    // Dart: (0,0) (6,1) (2,2) (1,6) with a reflex notch.
    const std::vector<Point> dart{P(0, 0), P(6, 1), P(2, 2), P(1, 6)};
    EXPECT_TRUE(point_in_polygon(Point{Rational(3, 2), Rational(3, 2)}, dart));
    EXPECT_FALSE(point_in_polygon(P(4, 4), dart));
}

} // namespace
} // namespace orchard
