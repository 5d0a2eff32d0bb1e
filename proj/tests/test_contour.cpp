#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstddef>

#include <hypmetrics/contour.hpp>
#include <hypmetrics/metrics.hpp>

#include "support/circle_fit.hpp"

using namespace hypmetrics;

namespace {

std::vector<std::array<double, 2>> all_vertices(const std::vector<ContourPolyline>& loops) {
    std::vector<std::array<double, 2>> out;
    for (const auto& l : loops) out.insert(out.end(), l.vertices.begin(), l.vertices.end());
    return out;
}

} // namespace

TEST_CASE("th(rho/2) contour in the ball is the circle of radius level") {
    const Domain ball = Domain::unit_ball(2);
    const int grid = 128;
    const double spacing = 2.0 / grid;
    const auto loops =
        metric_ball_contour(ball, MetricKind::ThRhoHalf, Point::zero(2), 0.5, grid);
    REQUIRE(!loops.empty());
    std::size_t total = 0;
    for (const auto& l : loops) {
        CHECK(l.closed);
        CHECK(l.level == 0.5);
        CHECK(l.metric == MetricKind::ThRhoHalf);
        total += l.vertices.size();
    }
    CHECK(total > 50);

    const auto verts = all_vertices(loops);
    for (const auto& v : verts)
        CHECK(std::abs(std::hypot(v[0], v[1]) - 0.5) <= spacing);
    const auto fit = testsupport::fit_circle(verts);
    CHECK(std::hypot(fit.cx, fit.cy) <= spacing);
    CHECK(fit.r == Catch::Approx(0.5).margin(spacing));
    CHECK(fit.max_residual < 2.0 * spacing);
}

TEST_CASE("rho contour in the half-plane is a Euclidean circle") {
    const Domain half = Domain::half_space(2);
    const int grid = 128;
    const double R = 0.8;
    const double spacing = 2.4 * std::sinh(R) / grid;
    const auto loops = metric_ball_contour(half, MetricKind::Rho, Point{0.0, 1.0}, R, grid);
    REQUIRE(!loops.empty());
    for (const auto& l : loops) CHECK(l.closed);

    const auto verts = all_vertices(loops);
    REQUIRE(verts.size() > 50);
    for (const auto& v : verts) CHECK(v[1] > 0.0);
    const auto fit = testsupport::fit_circle(verts);
    CHECK(std::abs(fit.cx) <= 2.0 * spacing);
    CHECK(fit.cy == Catch::Approx(std::cosh(R)).margin(2.0 * spacing));
    CHECK(fit.r == Catch::Approx(std::sinh(R)).margin(2.0 * spacing));
    CHECK(fit.max_residual < 2.0 * spacing);
}

TEST_CASE("ctilde contour vertices have s between level/2 and level") {
    const Domain ball = Domain::unit_ball(2);
    const Point center{0.5, 0.0};
    const double level = 0.3;
    const auto loops = metric_ball_contour(ball, MetricKind::CTilde, center, level, 96);
    REQUIRE(!loops.empty());
    std::size_t total = 0;
    for (const auto& l : loops) {
        CHECK(l.closed);
        total += l.vertices.size();
    }
    CHECK(total > 30);
    for (const auto& v : all_vertices(loops)) {
        const double s = s_metric(ball, center, Point{v[0], v[1]}).value;
        CHECK(s >= 0.5 * level - 0.01);
        CHECK(s <= level + 0.01);
    }
}

TEST_CASE("j contour in the punctured plane stays on the level set") {
    const Domain punct = Domain::punctured_space(2);
    const Point center{1.0, 0.0};
    const double level = std::log(2.0);
    const auto loops = metric_ball_contour(punct, MetricKind::J, center, level, 96);
    REQUIRE(!loops.empty());
    for (const auto& l : loops) CHECK(l.closed);
    for (const auto& v : all_vertices(loops))
        CHECK(j_metric(punct, center, Point{v[0], v[1]}) == Catch::Approx(level).margin(0.05));
}

TEST_CASE("contour argument validation") {
    const Domain ball = Domain::unit_ball(2);
    const Point c = Point::zero(2);
    REQUIRE_THROWS_AS(metric_ball_contour(ball, MetricKind::CTilde, c, 2.5, 64), ConfigError);
    REQUIRE_THROWS_AS(metric_ball_contour(ball, MetricKind::CTilde, c, 0.0, 64), ConfigError);
    REQUIRE_THROWS_AS(metric_ball_contour(ball, MetricKind::S, c, 1.0, 64), ConfigError);
    REQUIRE_THROWS_AS(metric_ball_contour(ball, MetricKind::CTilde, c, 0.5, 4), ConfigError);
    REQUIRE_THROWS_AS(
        metric_ball_contour(Domain::unit_ball(3), MetricKind::CTilde, Point::zero(3), 0.5, 64),
        ConfigError);
    REQUIRE_THROWS_AS(metric_ball_contour(ball, MetricKind::CTilde, Point{1.0, 0.0}, 0.5, 64),
                      DomainError);
    REQUIRE_THROWS_AS(
        metric_ball_contour(Domain::punctured_space(2), MetricKind::Rho, Point{1.0, 0.0}, 0.5, 64),
        DomainError);
}

TEST_CASE("contours are deterministic") {
    const Domain ball = Domain::unit_ball(2);
    const auto a = metric_ball_contour(ball, MetricKind::JStar, Point{0.2, 0.1}, 0.4, 48);
    const auto b = metric_ball_contour(ball, MetricKind::JStar, Point{0.2, 0.1}, 0.4, 48);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].vertices.size() == b[i].vertices.size());
        CHECK(a[i].closed == b[i].closed);
        for (std::size_t k = 0; k < a[i].vertices.size(); ++k) {
            CHECK(a[i].vertices[k][0] == b[i].vertices[k][0]);
            CHECK(a[i].vertices[k][1] == b[i].vertices[k][1]);
        }
    }
}
