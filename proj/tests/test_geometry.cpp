#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include <hypmetrics/geometry.hpp>

using namespace hypmetrics;

TEST_CASE("point construction and access") {
    const Point p{1.0, -2.0, 3.0};
    CHECK(p.dim() == 3);
    CHECK(p[0] == 1.0);
    CHECK(p.last() == 3.0);
    CHECK(Point::zero(2) == Point{0.0, 0.0});
    CHECK(Point::unit(3, 1) == Point{0.0, 1.0, 0.0});
    CHECK(p.finite());
    Point q = p;
    q[2] = std::numeric_limits<double>::infinity();
    CHECK_FALSE(q.finite());
}

TEST_CASE("point arithmetic and order") {
    const Point a{1.0, 2.0};
    const Point b{3.0, -1.0};
    CHECK(a + b == Point{4.0, 1.0});
    CHECK(a - b == Point{-2.0, 3.0});
    CHECK(2.0 * a == Point{2.0, 4.0});
    CHECK(a != b);
    CHECK(Point{1.0, 1.0} < Point{1.0, 2.0});
    CHECK(Point{0.0, 9.0} < Point{1.0, 0.0});
    CHECK(dot(a, b) == 1.0);
    CHECK(norm(Point{3.0, 4.0}) == 5.0);
    CHECK(distance(a, b) == std::sqrt(13.0));
    CHECK_THROWS_AS(require_same_dim(a, Point{1.0, 2.0, 3.0}), DimensionError);
}

TEST_CASE("domain factories and flags") {
    CHECK(Domain::half_space(2).convex());
    CHECK(Domain::unit_ball(5).convex());
    CHECK_FALSE(Domain::punctured_space(2).convex());
    CHECK(Domain::half_space(3).dim() == 3);
    CHECK(Domain::half_space(3).kind() == DomainKind::HalfSpace);
    CHECK_THROWS_AS(Domain::half_space(1), ConfigError);
    CHECK_THROWS_AS(Domain::unit_ball(0), ConfigError);
    CHECK_THROWS_AS(Domain::discretized_boundary({}), ConfigError);
    CHECK_THROWS_AS(Domain::discretized_boundary({Point{0.0, 0.0}, Point{1.0, 0.0, 0.0}}),
                    DimensionError);
    const Domain d = Domain::discretized_boundary({Point{0.0, 0.0}}, true);
    CHECK(d.convex());
    CHECK(d.boundary_points().size() == 1);
}

TEST_CASE("membership") {
    const Domain half = Domain::half_space(2);
    CHECK(contains(half, Point{5.0, 0.1}));
    CHECK_FALSE(contains(half, Point{0.0, 0.0}));
    CHECK_FALSE(contains(half, Point{0.0, -1.0}));
    CHECK_FALSE(contains(half, Point{std::nan(""), 1.0}));

    const Domain ball = Domain::unit_ball(2);
    CHECK(contains(ball, Point{0.0, 0.0}));
    CHECK(contains(ball, Point{0.7, 0.7}));
    CHECK_FALSE(contains(ball, Point{0.8, 0.8}));
    CHECK_FALSE(contains(ball, Point{1.0, 0.0}));

    const Domain punct = Domain::punctured_space(2);
    CHECK(contains(punct, Point{1e-300, 0.0}));
    CHECK_FALSE(contains(punct, Point{0.0, 0.0}));

    const Domain disc = Domain::discretized_boundary({Point{0.0, 0.0}, Point{1.0, 0.0}});
    CHECK(contains(disc, Point{0.5, 0.5}));
    CHECK_FALSE(contains(disc, Point{1.0, 0.0}));

    CHECK_THROWS_AS(contains(half, Point{1.0, 1.0, 1.0}), DimensionError);
}

TEST_CASE("boundary distance") {
    CHECK(boundary_distance(Domain::half_space(2), Point{-7.0, 2.5}) == 2.5);
    CHECK(boundary_distance(Domain::unit_ball(2), Point{0.6, 0.0}) == Catch::Approx(0.4));
    CHECK(boundary_distance(Domain::punctured_space(3), Point{0.0, 3.0, 4.0}) == 5.0);
    const Domain disc = Domain::discretized_boundary({Point{0.0, 0.0}, Point{10.0, 0.0}});
    CHECK(boundary_distance(disc, Point{0.0, 1.0}) == 1.0);
    CHECK_THROWS_AS(boundary_distance(Domain::half_space(2), Point{0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(boundary_distance(Domain::unit_ball(2), Point{2.0, 0.0}), DomainError);
}

TEST_CASE("angle at origin") {
    CHECK(angle_at_origin(Point{1.0, 0.0}, Point{0.0, 2.0}) == Catch::Approx(std::acos(0.0)));
    // acos amplifies the ulp-level rounding of dot/(|x||y|) near 1 to ~2e-8
    CHECK(angle_at_origin(Point{1.0, 1.0}, Point{2.0, 2.0}) <= 1e-7);
    CHECK(angle_at_origin(Point{2.0, 0.0}, Point{5.0, 0.0}) == 0.0);
    CHECK(angle_at_origin(Point{1.0, 0.0}, Point{-3.0, 0.0}) ==
          Catch::Approx(3.14159265358979323846));
    CHECK_THROWS_AS(angle_at_origin(Point{0.0, 0.0}, Point{1.0, 0.0}), UndefinedAngleError);
}

TEST_CASE("names") {
    CHECK(std::string(to_string(DomainKind::HalfSpace)) == "half_space");
    CHECK(std::string(to_string(DomainKind::DiscretizedBoundary)) == "discretized_boundary");
    CHECK(std::string(to_string(BranchTag::EquidistantArc)) == "EquidistantArc");
    CHECK(std::string(to_string(BranchTag::PuncturedDirect)) == "PuncturedDirect");
}
