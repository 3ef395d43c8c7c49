// SPDX-License-Identifier: Apache-2.0

#include "mpm/geometry.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace mpm;

namespace {

double dist(Point2 p, Point2 q)
{
    return std::hypot(p.x - q.x, p.y - q.y);
}

} // namespace

TEST_CASE("ellipse parameters")
{
    const auto e = make_ellipse(100.0, 100.0, 3);
    CHECK(e.semi_major == doctest::Approx(oracle::kEllipseA).epsilon(1e-9));
    CHECK(e.semi_minor == doctest::Approx(oracle::kEllipseB).epsilon(1e-9));
    CHECK(e.eccentricity == doctest::Approx(oracle::kEllipseE).epsilon(1e-8));
    CHECK(e.focal_half_distance == 50.0);
    CHECK(e.tap_index == 3);
    CHECK(e.semi_major == doctest::Approx((100.0 + oracle::kC * 100e-9) / 2.0).epsilon(1e-15));

    // the focal radius perpendicular to the axis is the semi-latus rectum
    CHECK(focal_radius(e, 90.0) == doctest::Approx(oracle::kEllipseSemiLatus).epsilon(1e-9));
    CHECK(focal_radius(e, 0.0) == doctest::Approx(e.semi_major + e.focal_half_distance).epsilon(1e-14));
    CHECK(focal_radius(e, 180.0) == doctest::Approx(e.semi_major - e.focal_half_distance).epsilon(1e-12));

    CHECK_THROWS_AS(make_ellipse(0.0, 10.0, 0), std::domain_error);
    CHECK_THROWS_AS(make_ellipse(100.0, 0.0, 0), std::domain_error);
    CHECK_THROWS_AS(make_ellipse(-1.0, 10.0, 0), std::domain_error);
}

TEST_CASE("tiny excess delay keeps full precision")
{
    const auto e = make_ellipse(200.0, 1e-6, 0);  // 0.3 mm excess path
    const double b2 = e.semi_major * e.semi_major - e.focal_half_distance * e.focal_half_distance;
    CHECK(e.semi_minor * e.semi_minor == doctest::Approx(b2).epsilon(1e-6));
    for (double th : {0.0, 1.0, 45.0, 179.0}) {
        const Point2 s = scatterer_position(e, th);
        const double sum = dist(s, e.tx()) + dist(s, e.rx());
        CHECK(std::abs(sum - 2.0 * e.semi_major) <= 1e-9 * 2.0 * e.semi_major);
    }
}

TEST_CASE("scatterers agree with a direct ray intersection")
{
    for (double tau : {1.0, 13.0, 100.0, 2500.0}) {
        const auto e = make_ellipse(100.0, tau, 0);
        for (double th = -179.5; th <= 180.0; th += 7.25) {
            const auto hit = oracle::ray_ellipse(e.semi_major, e.semi_minor, th);
            const Point2 s = scatterer_position(e, th);
            CHECK(s.x == doctest::Approx(hit.x).epsilon(1e-8).scale(e.semi_major));
            CHECK(s.y == doctest::Approx(hit.y).epsilon(1e-8).scale(e.semi_major));
            CHECK(departure_to_arrival(e, th) ==
                  doctest::Approx(oracle::arrival_deg(e.focal_half_distance, hit)).epsilon(1e-9).scale(180.0));
        }
    }
}

TEST_CASE("co-vertex maps to the mirrored co-vertex direction")
{
    const auto e = make_ellipse(100.0, 100.0, 0);
    const double theta = std::atan2(e.semi_minor, e.focal_half_distance) * 180.0 / std::numbers::pi;
    CHECK(theta == doctest::Approx(oracle::kCoVertexArrivalDeg).epsilon(1e-9));
    CHECK(departure_to_arrival(e, theta) == doctest::Approx(-oracle::kCoVertexArrivalDeg).epsilon(1e-9));
    CHECK(departure_to_arrival(e, 0.0) == 180.0);
    CHECK(std::abs(departure_to_arrival(e, 180.0)) < 1e-9);
}

TEST_CASE("path-sum property on random pairs")
{
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> d_dist(1.0, 1000.0), tau_dist(0.01, 3000.0), th_dist(-180.0, 180.0);
    for (int i = 0; i < 20000; ++i) {
        const auto e = make_ellipse(d_dist(gen), tau_dist(gen), 0);
        const Point2 s = scatterer_position(e, th_dist(gen));
        const double sum = dist(s, e.tx()) + dist(s, e.rx());
        REQUIRE(std::abs(sum - 2.0 * e.semi_major) <= 1e-9 * 2.0 * e.semi_major);
    }
}

TEST_CASE("mirror symmetry is exact")
{
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> th_dist(-180.0, 180.0);
    const auto e = make_ellipse(50.0, 37.0, 0);
    for (int i = 0; i < 10000; ++i) {
        const double th = th_dist(gen);
        REQUIRE(departure_to_arrival(e, -th) == -departure_to_arrival(e, th));
    }
}

TEST_CASE("departure to arrival is a monotone bijection of each half-plane")
{
    const auto e = make_ellipse(100.0, 61.0, 0);
    double prev = departure_to_arrival(e, 0.01);
    CHECK(prev < -179.0);
    for (double th = 0.02; th < 180.0; th += 0.01) {
        const double phi = departure_to_arrival(e, th);
        REQUIRE(phi > prev);
        REQUIRE(phi < 0.0);
        prev = phi;
    }
    CHECK(prev > -1.0);

    // arrivals from a dense departure grid leave no gap on the circle
    std::vector<double> arrivals;
    for (double th = -180.0; th < 180.0; th += 0.01)
        arrivals.push_back(departure_to_arrival(e, th));
    std::sort(arrivals.begin(), arrivals.end());
    double gap = arrivals.front() + 360.0 - arrivals.back();
    for (std::size_t i = 1; i < arrivals.size(); ++i)
        gap = std::max(gap, arrivals[i] - arrivals[i - 1]);
    CHECK(gap < 0.5);
}

TEST_CASE("ellipses nest with delay")
{
    const auto inner = make_ellipse(100.0, 10.0, 0);
    const auto outer = make_ellipse(100.0, 11.0, 1);
    for (double th = -180.0; th <= 180.0; th += 1.0)
        CHECK(focal_radius(outer, th) > focal_radius(inner, th));
}

TEST_CASE("ellipse set from a delay line")
{
    const auto tdl = scale_delays(load_tdl_profile(TdlProfile::A, MPM_TEST_DATA_DIR), 61.0);
    const auto set = build_ellipses(tdl, 100.0);
    CHECK(set.distance_m == 100.0);
    REQUIRE(set.ellipses.size() == tdl.size() - 1);
    CHECK(set.tap_weights.size() == tdl.size());
    for (const auto& e : set.ellipses) {
        const auto& tap = tdl[static_cast<std::size_t>(e.tap_index)];
        CHECK(e.semi_major == doctest::Approx((100.0 + oracle::kC * tap.delay * 1e-9) / 2.0));
    }
    for (std::size_t i = 1; i < set.ellipses.size(); ++i)
        CHECK(set.ellipses[i].semi_major > set.ellipses[i - 1].semi_major);
    CHECK_THROWS_AS(build_ellipses(tdl, 0.0), std::domain_error);
}
