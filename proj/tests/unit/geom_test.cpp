#include <doctest.h>

#include <cmath>
#include <random>

#include "evacsim/geom.hpp"

using namespace evacsim;

TEST_CASE("point_segment_distance: point on the segment") {
    const Segment s{{0, 0}, {0, 10}};
    const auto proj = project_point_on_segment({0, 5}, s);
    CHECK(proj.distance == doctest::Approx(0.0));
    CHECK(proj.closest.x == doctest::Approx(0.0));
    CHECK(proj.closest.y == doctest::Approx(5.0));
}

TEST_CASE("point_segment_distance: perpendicular foot") {
    const Segment s{{0, 0}, {10, 0}};
    const auto proj = project_point_on_segment({5, 5}, s);
    CHECK(proj.distance == doctest::Approx(5.0));
    CHECK(proj.closest.x == doctest::Approx(5.0));
    CHECK(proj.closest.y == doctest::Approx(0.0));
}

TEST_CASE("point_segment_distance: foot clamps to the endpoint") {
    const Segment s{{0, 0}, {6, 0}};
    const auto proj = project_point_on_segment({12, 12}, s);
    CHECK(proj.distance == doctest::Approx(std::sqrt(180.0)));
    CHECK(proj.closest.x == doctest::Approx(6.0));
    CHECK(proj.closest.y == doctest::Approx(0.0));
}

TEST_CASE("point_segment_distance: symmetric under endpoint swap, zero iff on segment") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> coord(-20.0, 20.0);
    for (int i = 0; i < 1000; ++i) {
        const Vec2 a{coord(gen), coord(gen)};
        Vec2 b{coord(gen), coord(gen)};
        if (norm(b - a) < 1e-6) b.x += 1.0;
        const Vec2 p{coord(gen), coord(gen)};

        const double forward = point_segment_distance(p, {a, b});
        const double backward = point_segment_distance(p, {b, a});
        CHECK(forward == doctest::Approx(backward).epsilon(1e-12));

        // A point interpolated on the segment is at distance ~0.
        std::uniform_real_distribution<double> t01(0.0, 1.0);
        const double t = t01(gen);
        const Vec2 on = a + t * (b - a);
        CHECK(point_segment_distance(on, {a, b}) < 1e-9);
    }
}

TEST_CASE("normalize: unit results and the zero convention") {
    const Vec2 u = normalize({3, 4});
    CHECK(u.x == doctest::Approx(0.6));
    CHECK(u.y == doctest::Approx(0.8));

    const Vec2 zero = normalize({0, 0});
    CHECK(zero.x == 0.0);
    CHECK(zero.y == 0.0);

    const Vec2 down = normalize({0, -2});
    CHECK(down.x == doctest::Approx(0.0));
    CHECK(down.y == doctest::Approx(-1.0));

    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> coord(-50.0, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const Vec2 v{coord(gen), coord(gen)};
        if (norm(v) == 0.0) continue;
        CHECK(norm(normalize(v)) == doctest::Approx(1.0).epsilon(1e-9));
    }
}
