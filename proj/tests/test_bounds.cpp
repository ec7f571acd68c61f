#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrc/bounds.hpp"

using namespace lrc;

TEST_CASE("ceil_div is exact, including negative numerators") {
    CHECK(ceil_div(8, 3) == 3);
    CHECK(ceil_div(9, 3) == 3);
    CHECK(ceil_div(0, 5) == 0);
    CHECK(ceil_div(-1, 2) == 0);
    CHECK(ceil_div(-4, 3) == -1);
    CHECK_THROWS_AS((void)ceil_div(1, 0), std::invalid_argument);
}

TEST_CASE("r-local bound") {
    CHECK(bound_r_local(14, 8, 3).value == 5);
    CHECK(bound_r_local(16, 8, 2).value == 6);
    SUBCASE("r = k degenerates to Singleton") {
        for (long long n = 4; n <= 12; ++n)
            for (long long k = 1; k < n; ++k) CHECK(bound_r_local(n, k, k).value == n - k + 1);
    }
    CHECK_THROWS_AS((void)bound_r_local(5, 6, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)bound_r_local(5, 3, 0), std::invalid_argument);
}

TEST_CASE("(r, delta) bound") {
    CHECK(bound_r_delta(18, 8, 3, 3).value == 7);
    CHECK(bound_r_delta(14, 8, 8, 2).value == 7);  // one local group: Singleton
    SUBCASE("delta = 2 coincides with the r-local bound") {
        for (long long n = 4; n <= 14; ++n)
            for (long long k = 1; k < n; ++k)
                for (long long r = 1; r <= k; ++r) {
                    BoundResult a = bound_r_delta(n, k, r, 2);
                    BoundResult b = bound_r_local(n, k, r);
                    CHECK(a.applicable == b.applicable);
                    if (a.applicable) CHECK(a.value == b.value);
                }
    }
}

TEST_CASE("information-profile bound") {
    std::vector<long long> ks{0, 4, 4};  // k_2 = 4, k_3 = 4
    CHECK(bound_info_profile(14, 8, ks).value == 4);
    SUBCASE("all mass at locality r equals the r-local bound") {
        std::vector<long long> mass{0, 0, 8};
        CHECK(bound_info_profile(14, 8, mass).value == bound_r_local(14, 8, 3).value);
    }
    SUBCASE("locality 1 for everything") {
        std::vector<long long> ones{5};
        CHECK(bound_info_profile(12, 5, ones).value == 12 - 10 + 2);
    }
    std::vector<long long> off_by_one{0, 4, 3};
    CHECK_THROWS_AS((void)bound_info_profile(14, 8, off_by_one), std::invalid_argument);
    std::vector<long long> zero_tail{8, 0};
    CHECK_THROWS_AS((void)bound_info_profile(14, 8, zero_tail), std::invalid_argument);
}

TEST_CASE("multi-locality bound (delta = 2 per group)") {
    std::vector<PartR> parts{{6, 2}, {8, 3}};
    BoundResult b = bound_ml(14, 8, parts);
    REQUIRE(b.applicable);
    CHECK(b.value == 4);

    SUBCASE("empty first part degenerates to the r-local bound") {
        std::vector<PartR> degen{{0, 2}, {14, 3}};
        CHECK(bound_ml(14, 8, degen).value == bound_r_local(14, 8, 3).value);
    }
    SUBCASE("the strict condition is checked") {
        BoundResult tight = bound_ml(14, 5, parts);  // 4 < 4 fails
        CHECK_FALSE(tight.applicable);
        CHECK(tight.reason.find("not <") != std::string::npos);
    }
    SUBCASE("ordering violations are structural errors") {
        std::vector<PartR> equal_r{{6, 3}, {8, 3}};
        CHECK_THROWS_AS((void)bound_ml(14, 8, equal_r), std::invalid_argument);
    }
}

TEST_CASE("two-locality bound") {
    SUBCASE("main value") {
        BoundResult b = bound_two_locality(18, 8, {8, 2, 3}, {10, 3, 2});
        REQUIRE(b.applicable);
        CHECK(b.formula == BoundFormula::two_locality);
        CHECK(b.value == 6);
    }
    SUBCASE("delta = 2 on both parts reduces to the multi-locality bound") {
        BoundResult b = bound_two_locality(14, 8, {6, 2, 2}, {8, 3, 2});
        std::vector<PartR> parts{{6, 2}, {8, 3}};
        REQUIRE(b.applicable);
        CHECK(b.value == 4);
        CHECK(b.value == bound_ml(14, 8, parts).value);
    }
    SUBCASE("first condition failing switches to the (r1, delta1) fallback") {
        BoundResult b = bound_two_locality(18, 4, {8, 2, 3}, {10, 3, 2});
        REQUIRE(b.applicable);
        CHECK(b.formula == BoundFormula::r_delta_fallback);
        CHECK(b.value == 13);
        CHECK(b.value == bound_r_delta(18, 4, 2, 3).value);
    }
    SUBCASE("ordering violations throw") {
        CHECK_THROWS_AS((void)bound_two_locality(18, 8, {8, 3, 3}, {10, 2, 2}),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)bound_two_locality(18, 8, {8, 2, 2}, {10, 3, 3}),
                        std::invalid_argument);
    }
}

TEST_CASE("multi (r_i, delta_i) bound") {
    SUBCASE("s = 2 agrees with the two-locality bound") {
        std::vector<PartRD> parts{{8, 2, 3}, {10, 3, 2}};
        BoundResult b = bound_multi(18, 8, parts);
        REQUIRE(b.applicable);
        CHECK(b.value == 6);
    }
    SUBCASE("all deltas 2 equals the multi-locality bound") {
        std::vector<PartRD> parts{{6, 2, 2}, {8, 3, 2}};
        std::vector<PartR> plain{{6, 2}, {8, 3}};
        CHECK(bound_multi(14, 8, parts).value == bound_ml(14, 8, plain).value);
    }
    SUBCASE("three parts with failing conditions are reported by name") {
        // leading parts cover 1*2 + 2*2 = 6 > k - 1 = 5, and part 1 fails the
        // gap condition; the per-part check fires first
        std::vector<PartRD> parts{{4, 1, 3}, {8, 2, 3}, {5, 3, 2}};
        BoundResult b = bound_multi(17, 6, parts);
        CHECK_FALSE(b.applicable);
        CHECK(b.reason.find("condition") != std::string::npos);
    }
    SUBCASE("a valid three-part instance") {
        std::vector<PartRD> parts{{6, 2, 3}, {8, 3, 3}, {10, 4, 2}};
        // m = (2, 2); covered = 2*2 + 3*2 = 10 <= k-1; gaps: part1 4-0-1=3:
        // 2*ceil(3/2)+3 = 7 > 6 fails -> not applicable
        BoundResult b = bound_multi(24, 11, parts);
        CHECK_FALSE(b.applicable);
    }
    SUBCASE("divisible part sizes satisfy the gap conditions") {
        std::vector<PartRD> parts{{8, 2, 3}, {10, 3, 3}};
        BoundResult b = bound_multi(18, 7, parts);
        // m1 = 2, covered = 4 <= 6; gap = 4 - 1 = 3: 2*2 + 3 = 7 < 8 holds
        REQUIRE(b.applicable);
        CHECK(b.value == 18 - 7 + 1 - 4 - (1 - 1) * 2);
    }
}

TEST_CASE("equal-delta corollary") {
    std::vector<PartR> parts{{8, 2}, {10, 3}};
    SUBCASE("stated example: Gamma = 4") {
        BoundResult b = bound_equal_delta(18, 8, parts, 3);
        REQUIRE(b.applicable);
        CHECK(b.value == 5);
    }
    SUBCASE("delta = 2 equals the multi-locality bound") {
        std::vector<PartR> p2{{6, 2}, {8, 3}};
        CHECK(bound_equal_delta(14, 8, p2, 2).value == 4);
        CHECK(bound_equal_delta(14, 8, p2, 2).value == bound_ml(14, 8, p2).value);
    }
}

TEST_CASE("piecewise Phi upper bound") {
    std::vector<PartRD> two{{8, 2, 3}, {10, 3, 2}};
    CHECK(phi_locality_upper(0, two, 8) == 0);
    CHECK(phi_locality_upper(4, two, 8) == 8);   // x = Delta_1: 2*ceil(4/2) + 4
    CHECK(phi_locality_upper(5, two, 8) == 12);  // last piece: 4 + 3*1 + 5
    SUBCASE("conditions are enforced") {
        std::vector<PartRD> bad{{7, 2, 3}, {10, 3, 2}};  // 4 does not divide 7: gap check fails
        CHECK_THROWS_AS((void)phi_locality_upper(1, bad, 8), std::invalid_argument);
    }
}

TEST_CASE("reduction identities over a parameter sweep") {
    // delta = 2 cases of the refined bounds all collapse to the coarser ones
    std::size_t checked = 0;
    for (long long n1 = 3; n1 <= 9; ++n1) {
        for (long long r1 = 1; r1 <= 3; ++r1) {
            for (long long n2 = 4; n2 <= 10; ++n2) {
                for (long long r2 = r1 + 1; r2 <= 5; ++r2) {
                    long long n = n1 + n2;
                    for (long long k = 2; k < n; ++k) {
                        BoundResult eq5 = bound_two_locality(n, k, {n1, r1, 2}, {n2, r2, 2});
                        std::vector<PartRD> rd{{n1, r1, 2}, {n2, r2, 2}};
                        BoundResult eq7 = bound_multi(n, k, rd);
                        std::vector<PartR> pr{{n1, r1}, {n2, r2}};
                        BoundResult eq8 = bound_equal_delta(n, k, pr, 2);
                        BoundResult eq4 = bound_ml(n, k, pr);
                        CHECK(eq7.applicable == eq8.applicable);
                        if (eq7.applicable) CHECK(eq7.value == eq8.value);
                        if (eq5.formula == BoundFormula::two_locality && eq5.applicable &&
                            eq7.applicable)
                            CHECK(eq5.value == eq7.value);
                        if (eq4.applicable && eq7.applicable) {
                            CHECK(eq4.value == eq7.value);
                            ++checked;
                        }
                    }
                }
            }
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("bounds are non-increasing in k") {
    for (long long n = 6; n <= 16; ++n) {
        for (long long r = 1; r <= 4; ++r) {
            long long prev1 = 1 << 20, prev2 = 1 << 20;
            for (long long k = 1; k < n; ++k) {
                BoundResult b1 = bound_r_local(n, k, r);
                if (b1.applicable) {
                    CHECK(b1.value <= prev1);
                    prev1 = b1.value;
                }
                BoundResult b2 = bound_r_delta(n, k, r, 3);
                if (b2.applicable) {
                    CHECK(b2.value <= prev2);
                    prev2 = b2.value;
                }
            }
        }
    }
}

TEST_CASE("the multi bound dominates the plain (r_s, delta_s) bound") {
    for (long long n1 = 4; n1 <= 10; ++n1)
        for (long long r1 = 1; r1 <= 3; ++r1)
            for (long long d1 = 2; d1 <= 4; ++d1)
                for (long long n2 = 4; n2 <= 10; ++n2)
                    for (long long r2 = r1; r2 <= 4; ++r2)
                        for (long long d2 = 2; d2 <= d1; ++d2) {
                            long long n = n1 + n2;
                            for (long long k = 2; k < n; k += 2) {
                                std::vector<PartRD> parts{{n1, r1, d1}, {n2, r2, d2}};
                                BoundResult whole = bound_multi(n, k, parts);
                                BoundResult plain = bound_r_delta(n, k, r2, d2);
                                if (whole.applicable && plain.applicable)
                                    CHECK(whole.value <= plain.value);
                            }
                        }
}
