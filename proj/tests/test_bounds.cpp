#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mws/bounds.hpp"
#include "mws/construct.hpp"

using namespace mws;

TEST_CASE("general length lower bound") {
    CHECK(lower_bound(3, 2) == 6);
    CHECK(lower_bound(2, 3) == 7);
    CHECK(lower_bound(3, 3) == 20);
    // sharp at k=2: met with equality by the k=2 construction
    for (uint32_t q : {2u, 3u, 4u, 5u}) CHECK(optimal_k2(q).n() == lower_bound(q, 2));
    // met by the Fano construction at q=2, k=3
    CHECK(fano_732().n() == lower_bound(2, 3));
    // consistent with the [32,3]_3 plane
    CHECK(lower_bound(3, 3) <= plane_3233().n());
}

TEST_CASE("property (A) length lower bound") {
    // q=2: coincides with theta_2(k-1) = 2^k - 1
    for (int k : {2, 3, 4, 5, 6}) CHECK(lower_bound_propA(2, k) == theta(2, k - 1));
    CHECK(lower_bound_propA(3, 2) == 10);
    CHECK(lower_bound_propA(3, 3) == 30);
}

TEST_CASE("D and R bounds") {
    CHECK(d_bound(3, 2) == 52);
    CHECK(r_bound(3, 2) == 104);
    CHECK(d_bound(3, 1) == 7);
    // the worked example's deduplicated normals stay within the bound
    auto problem = build_avoidance_problem(make_code(Field(3), {{1, 2, 2, 0, 0, 0, 0}, {1, 1, 1, 2, 2, 2, 2}}));
    CHECK(BigInt(problem.normals.size()) <= d_bound(3, 2));
}

TEST_CASE("recurrence estimates") {
    auto rec = recurrence_estimates(3, 4);
    REQUIRE(rec.size() == 4);
    CHECK(rec[0].n_rec == 1);
    CHECK(rec[0].T_rec == 2);
    // n_rec(2) = (q-1) R^(1) n^(1) + 1 = 2*3*1 + 1 = 7, the worked example's length
    CHECK(rec[1].n_rec == 7);
    // strictly increasing in k
    for (std::size_t i = 1; i < rec.size(); ++i) CHECK(rec[i].n_rec > rec[i - 1].n_rec);
}

TEST_CASE("pipeline lengths respect the general bound") {
    for (uint32_t q : {3u, 4u}) {
        auto states = algebraic(q, 2);
        CHECK(BigInt(states.back().code.n) >= lower_bound(q, 2));
    }
}

TEST_CASE("an (A)-satisfying MWS code obeys the corollary's logic") {
    // 2n+1 >= lower_bound(q, k+1) for the worked example's C_2(r)
    LinearCode Cr = repetition_code(make_code(Field(3), {{1, 2, 2, 0, 0, 0, 0}, {1, 1, 1, 2, 2, 2, 2}}), {{1, 6}});
    REQUIRE(property_A(Cr));
    REQUIRE(is_mws(Cr));
    CHECK(BigInt(2 * Cr.n + 1) >= lower_bound(3, 3));
    CHECK(BigInt(Cr.n) >= lower_bound_propA(3, 2));
}

TEST_CASE("bounds report") {
    auto rep = bounds_report(3, 2);
    CHECK(rep.theta_val == 4);
    CHECK(rep.lb_general == 6);
    REQUIRE(rep.geometric_n.has_value());
    CHECK(*rep.geometric_n == 15);
    CHECK(rep.D_k == 52);
    CHECK(rep.R_k == 104);

    auto rep33 = bounds_report(3, 3);
    REQUIRE(rep33.triangle_n.has_value());
    CHECK(*rep33.triangle_n == 39);  // formula value; the actual construction delegates to the plane for q=3
    REQUIRE(rep33.lift_chain_n.has_value());
    CHECK(*rep33.lift_chain_n == pow_big(BigInt(3), 4));
}
