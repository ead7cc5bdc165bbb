#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mws/pg.hpp"

using namespace mws;

TEST_CASE("theta") {
    CHECK(theta(2, 2) == 7);
    CHECK(theta(3, 2) == 13);
    CHECK(theta(3, 1) == 4);
    CHECK(theta(2, -1) == 0);
    CHECK(theta(5, 0) == 1);
    CHECK(theta(5, 3) == 156);
}

TEST_CASE("point enumeration is canonical, complete and deterministic") {
    Field f2(2);
    auto pts = enumerate_points(f2, 2);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].coords == std::vector<uint32_t>{0, 1});
    CHECK(pts[1].coords == std::vector<uint32_t>{1, 0});
    CHECK(pts[2].coords == std::vector<uint32_t>{1, 1});

    Field f3(3);
    CHECK(enumerate_points(f3, 2).size() == 4);
    auto pts13 = enumerate_points(f3, 3);
    CHECK(BigInt(pts13.size()) == theta(3, 2));
    for (const auto& p : pts13) CHECK(is_canonical_coords(f3, p.coords));
    CHECK(enumerate_points(f3, 3) == pts13);  // idempotent

    auto hyps = enumerate_hyperplanes(f3, 3);
    REQUIRE(hyps.size() == pts13.size());
    for (std::size_t i = 0; i < hyps.size(); ++i) CHECK(hyps[i].normal == pts13[i].coords);
}

TEST_CASE("each hyperplane of PG(k-1,q) carries theta_q(k-2) points") {
    for (uint32_t q : {2u, 3u, 4u}) {
        Field F(q);
        for (int k : {2, 3}) {
            auto pts = enumerate_points(F, k);
            for (const auto& H : enumerate_hyperplanes(F, k)) {
                std::int64_t on = 0;
                for (const auto& P : pts)
                    if (incident(F, H, P)) ++on;
                CHECK(BigInt(on) == theta(q, k - 2));
            }
        }
    }
}

TEST_CASE("canonicalize_coords") {
    Field f5(5);
    CHECK(canonicalize_coords(f5, {2, 3, 0}) == std::vector<uint32_t>{1, 4, 0});
    CHECK(canonicalize_coords(f5, {0, 3, 1}) == std::vector<uint32_t>{0, 1, 2});
    CHECK_THROWS_AS(canonicalize_coords(f5, {0, 0, 0}), NonCanonicalPoint);
}

TEST_CASE("system character and span") {
    // Fano triangle with multiplicities 1, 2, 4: seven line characters 0..6
    Field f2(2);
    ProjectiveSystem sys(f2, 3);
    sys.add_point({{1, 0, 0}}, 1);
    sys.add_point({{0, 1, 0}}, 2);
    sys.add_point({{0, 0, 1}}, 4);
    CHECK(sys.n() == 7);
    std::vector<BigInt> chars;
    for (const auto& H : enumerate_hyperplanes(f2, 3)) chars.push_back(character(sys, H));
    std::sort(chars.begin(), chars.end());
    CHECK(chars == std::vector<BigInt>{0, 1, 2, 3, 4, 5, 6});
    CHECK(spans(sys));

    // two points only: does not span the plane
    ProjectiveSystem flat(f2, 3);
    flat.add_point({{1, 0, 0}}, 1);
    flat.add_point({{0, 1, 0}}, 1);
    CHECK_FALSE(spans(flat));

    // a single point of PG(1,q) never spans
    ProjectiveSystem pt(f2, 2);
    pt.add_point({{1, 0}}, 5);
    CHECK_FALSE(spans(pt));
}

TEST_CASE("every hyperplane of the all-ones system on PG(1,q) has character 1") {
    for (uint32_t q : {3u, 4u, 5u}) {
        Field F(q);
        ProjectiveSystem sys(F, 2);
        for (const auto& pt : enumerate_points(F, 2)) sys.add_point(pt, 1);
        for (const auto& H : enumerate_hyperplanes(F, 2)) CHECK(character(sys, H) == 1);
    }
}

TEST_CASE("double counting: sum of characters = n * theta_q(k-2)") {
    Field f3(3);
    ProjectiveSystem sys(f3, 3);
    BigInt mult = 1;
    for (const auto& pt : enumerate_points(f3, 3)) {
        sys.add_point(pt, mult);
        mult *= 3;
    }
    BigInt total = 0;
    for (const auto& H : enumerate_hyperplanes(f3, 3)) total += character(sys, H);
    CHECK(total == sys.n() * theta(3, 1));
}

TEST_CASE("dimension mismatch is rejected") {
    Field f3(3);
    ProjectiveSystem sys(f3, 3);
    sys.add_point({{1, 0, 0}}, 1);
    CHECK_THROWS_AS(character(sys, Hyperplane{{1, 0}}), DimensionMismatch);
    CHECK_THROWS_AS(sys.add_point({{1, 0}}, 1), DimensionMismatch);
    CHECK_THROWS_AS(sys.add_point({{0, 2, 0}}, 1), NonCanonicalPoint);
}
