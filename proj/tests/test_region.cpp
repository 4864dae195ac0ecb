#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "wiretap/region.hpp"

using namespace wiretap;
using Catch::Approx;

namespace {

bool has_vertex(const RateRegion& r, double r1, double r2, double tol = 1e-12) {
    for (const auto& v : r.vertices)
        if (std::abs(v.r1 - r1) <= tol && std::abs(v.r2 - r2) <= tol) return true;
    return false;
}

double bounds_violation(const RateBounds& b, const RatePoint& p) {
    const double a = std::max(b.a, 0.0), bb = std::max(b.b, 0.0);
    const double c = std::min(std::max(b.c, 0.0), a + bb);
    double v = 0.0;
    v = std::max(v, p.r1 - a);
    v = std::max(v, p.r2 - bb);
    v = std::max(v, p.r1 + p.r2 - c);
    v = std::max(v, -p.r1);
    v = std::max(v, -p.r2);
    return v;
}

}  // namespace

TEST_CASE("pentagon canonical shapes") {
    SECTION("sum bound inactive: unit square") {
        const auto r = pentagon({1.0, 1.0, 2.0});
        REQUIRE(r.vertices.size() == 4);
        CHECK(has_vertex(r, 0, 0));
        CHECK(has_vertex(r, 1, 0));
        CHECK(has_vertex(r, 1, 1));
        CHECK(has_vertex(r, 0, 1));
    }
    SECTION("active sum bound: pentagon") {
        const auto r = pentagon({1.0, 1.0, 1.5});
        REQUIRE(r.vertices.size() == 5);
        CHECK(has_vertex(r, 0, 0));
        CHECK(has_vertex(r, 1, 0));
        CHECK(has_vertex(r, 1, 0.5));
        CHECK(has_vertex(r, 0.5, 1));
        CHECK(has_vertex(r, 0, 1));
    }
    SECTION("zero R2 bound: segment") {
        const auto r = pentagon({1.0, 0.0, 1.0});
        REQUIRE(r.vertices.size() == 2);
        CHECK(has_vertex(r, 0, 0));
        CHECK(has_vertex(r, 1, 0));
    }
    SECTION("negative sum bound clips to the origin") {
        const auto r = pentagon({1.0, 1.0, -0.3});
        REQUIRE(r.vertices.size() == 1);
        CHECK(has_vertex(r, 0, 0));
    }
    SECTION("sum bound below both individual bounds: triangle") {
        const auto r = pentagon({1.0, 1.0, 0.5});
        REQUIRE(r.vertices.size() == 3);
        CHECK(has_vertex(r, 0.5, 0));
        CHECK(has_vertex(r, 0, 0.5));
    }
}

TEST_CASE("pentagon vertices satisfy their bounds tightly") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const RateBounds b{u(gen), u(gen), 2.0 * u(gen) - 0.3};
        for (const auto& v : pentagon(b).vertices)
            CHECK(bounds_violation(b, v) <= 1e-12);
    }
}

TEST_CASE("pentagon equals its brute-force grid") {
    std::mt19937_64 gen(32);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int rep = 0; rep < 5; ++rep) {
        const RateBounds b{u(gen), u(gen), 1.6 * u(gen)};
        const auto region = pentagon(b);
        const double step = 1e-3;
        for (double x = 0.0; x <= b.a + step; x += step)
            for (double y = 0.0; y <= b.b + step; y += step) {
                if (x <= b.a && y <= b.b && x + y <= std::max(b.c, 0.0)) {
                    if (!contains(region, {x, y}, 1e-9)) {
                        CAPTURE(b.a, b.b, b.c, x, y);
                        FAIL("feasible grid point outside pentagon");
                    }
                }
            }
    }
}

TEST_CASE("convex hull basics") {
    SECTION("single point hulls to a segment with its projections") {
        const auto r = convex_hull({{1.0, 0.0}});
        REQUIRE(r.vertices.size() == 2);
        CHECK(has_vertex(r, 0, 0));
        CHECK(has_vertex(r, 1, 0));
    }
    SECTION("time sharing triangle") {
        const auto r = convex_hull({{1.0, 0.0}, {0.0, 1.0}});
        REQUIRE(r.vertices.size() == 3);
    }
    SECTION("collinear interior points are pruned") {
        std::vector<RatePoint> pts;
        for (int i = 0; i <= 10; ++i)
            pts.push_back({i / 10.0, 1.0 - i / 10.0});
        const auto r = convex_hull(pts);
        REQUIRE(r.vertices.size() == 3);
        CHECK(has_vertex(r, 0, 0));
        CHECK(has_vertex(r, 1, 0));
        CHECK(has_vertex(r, 0, 1));
    }
    CHECK_THROWS_AS(convex_hull({}), std::invalid_argument);
    CHECK_THROWS_AS(convex_hull({{-0.5, 0.2}}), std::domain_error);
}

TEST_CASE("convex hull output is convex and covers its inputs") {
    std::mt19937_64 gen(33);
    std::uniform_real_distribution<double> u(0.0, 4.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<RatePoint> pts;
        const int n = 3 + static_cast<int>(gen() % 40);
        for (int i = 0; i < n; ++i) pts.push_back({u(gen), u(gen)});
        const auto r = convex_hull(pts);
        // Consecutive cross products all non-negative: counterclockwise convex.
        const auto& v = r.vertices;
        if (v.size() >= 3) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                const auto& a = v[i];
                const auto& b = v[(i + 1) % v.size()];
                const auto& c = v[(i + 2) % v.size()];
                const double cr = (b.r1 - a.r1) * (c.r2 - a.r2) - (b.r2 - a.r2) * (c.r1 - a.r1);
                CHECK(cr > 0.0);
            }
        }
        for (const auto& p : pts) CHECK(contains(r, p, 1e-9));
        CHECK(contains(r, {0.0, 0.0}, 0.0));
    }
}

TEST_CASE("union region is idempotent and monotone") {
    std::mt19937_64 gen(34);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<RateRegion> regions;
    for (int i = 0; i < 8; ++i) regions.push_back(pentagon({u(gen), u(gen), 1.5 * u(gen)}));
    const auto all = union_region(regions);
    for (const auto& r : regions)
        for (const auto& v : r.vertices) CHECK(contains(all, v, 1e-12));
    const auto again = union_region({all, all});
    REQUIRE(again.vertices.size() == all.vertices.size());
    for (const auto& v : all.vertices) CHECK(has_vertex(again, v.r1, v.r2));
    CHECK_THROWS_AS(union_region({}), std::invalid_argument);
}

TEST_CASE("containment with tolerance") {
    const auto sq = pentagon({1.0, 1.0, 2.0});
    CHECK(contains(sq, {0.5, 0.5}, 0.0));
    CHECK(contains(sq, {1.0, 1.0}, 0.0));
    CHECK_FALSE(contains(sq, {1.1, 0.0}, 0.05));
    CHECK(contains(sq, {1.04, 0.0}, 0.05));
    // Outside a corner the Euclidean distance governs.
    CHECK_FALSE(contains(sq, {1.08, 1.08}, 0.1));
    CHECK(contains(sq, {1.06, 1.06}, 0.1));
    CHECK_THROWS_AS(contains(sq, {0, 0}, -1.0), std::invalid_argument);
}

TEST_CASE("boundary samples trace the upper-right boundary") {
    const auto pent = pentagon({1.0, 1.0, 1.5});
    const auto pts = boundary_samples(pent, 33);
    REQUIRE(pts.size() == 33);
    CHECK(pts.front().r1 == Approx(1.0));
    CHECK(pts.front().r2 == Approx(0.0));
    CHECK(pts.back().r1 == Approx(0.0));
    CHECK(pts.back().r2 == Approx(1.0));
    // Monotone progress along the boundary: r2 never decreases.
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].r2 >= pts[i - 1].r2 - 1e-12);
    // Arc-length spacing: chords never exceed the arc step, and on a straight
    // stretch of boundary they attain it.
    // Upper-right boundary of this pentagon: (1,0) -> (1,0.5) -> (0.5,1) -> (0,1).
    const double total = 0.5 + std::hypot(0.5, 0.5) + 0.5;
    const double step = total / (pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double chord =
            std::hypot(pts[i + 1].r1 - pts[i].r1, pts[i + 1].r2 - pts[i].r2);
        CHECK(chord <= step + 1e-12);
    }
    const double first_chord = std::hypot(pts[1].r1 - pts[0].r1, pts[1].r2 - pts[0].r2);
    CHECK(first_chord == Approx(step).margin(1e-12));
    CHECK_THROWS_AS(boundary_samples(pent, 1), std::invalid_argument);
}

TEST_CASE("boundary samples on degenerate regions") {
    const auto seg = pentagon({1.0, 0.0, 1.0});
    const auto pts = boundary_samples(seg, 5);
    REQUIRE(pts.size() == 5);
    CHECK(pts.front().r1 == Approx(1.0));
    CHECK(pts.back().r1 == Approx(0.0));
    for (const auto& p : pts) CHECK(p.r2 == 0.0);

    const auto origin = pentagon({0.0, 0.0, 0.0});
    const auto opts = boundary_samples(origin, 4);
    REQUIRE(opts.size() == 4);
    for (const auto& p : opts) {
        CHECK(p.r1 == 0.0);
        CHECK(p.r2 == 0.0);
    }
}

TEST_CASE("hull accumulator matches one-shot hull") {
    std::mt19937_64 gen(35);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    HullAccumulator acc(64);  // force several compressions
    std::vector<RatePoint> pts;
    for (int i = 0; i < 5000; ++i) {
        const RatePoint p{u(gen), u(gen)};
        pts.push_back(p);
        acc.add(p);
    }
    const auto streamed = acc.finish();
    const auto direct = convex_hull(pts);
    REQUIRE(streamed.vertices.size() == direct.vertices.size());
    for (const auto& v : direct.vertices) CHECK(has_vertex(streamed, v.r1, v.r2));
}
