#include "doctest.h"
#include "test_util.hpp"

#include "dynheight/fatou.hpp"
#include "dynheight/fixtures.hpp"

#include <algorithm>

using namespace dynheight;

namespace {
Real tol10() { return Real(1) / 10000000000; }

RationalMap squaring() { return RationalMap::from_affine({1, 0, 0}, {1}); }
}

TEST_CASE("attracting cycles of the squaring map") {
    auto cycles = attracting_cycles_arch(squaring(), 2, tol10());
    REQUIRE(cycles.size() == 2);  // 0 and infinity; 1 and the 2-cycle are repelling
    for (const AttractingCycle& c : cycles) {
        CHECK(c.period == 1);
        CHECK(c.exact);
        CHECK(c.multiplier_exact == 0);
        REQUIRE(c.rational_points.size() == 1);
    }
    bool has_zero = false, has_inf = false;
    for (const AttractingCycle& c : cycles) {
        if (c.rational_points[0] == ProjPointQ(0, 1)) has_zero = true;
        if (c.rational_points[0].is_infinity()) has_inf = true;
    }
    CHECK(has_zero);
    CHECK(has_inf);
}

TEST_CASE("superattracting 2-cycle of z^2 - 1") {
    // the fixed point at infinity plus the 2-cycle {0, -1}
    auto cycles = attracting_cycles_arch(fixtures::example2(), 2, tol10());
    REQUIRE(cycles.size() == 2);
    const AttractingCycle* two = nullptr;
    for (const AttractingCycle& c : cycles) {
        CHECK(c.exact);
        CHECK(c.multiplier_exact == 0);
        if (c.period == 1)
            CHECK(c.rational_points[0].is_infinity());
        else
            two = &c;
    }
    REQUIRE(two != nullptr);
    CHECK(two->period == 2);
    REQUIRE(two->rational_points.size() == 2);
    bool has_zero = false, has_m1 = false;
    for (const ProjPointQ& p : two->rational_points) {
        if (p == ProjPointQ(0, 1)) has_zero = true;
        if (p == ProjPointQ(-1, 1)) has_m1 = true;
    }
    CHECK(has_zero);
    CHECK(has_m1);
}

TEST_CASE("fixed point multipliers of psi") {
    // psi(z) = (z^2 - z)/2: fixed points 0 (multiplier -1/2), 3 (5/2), infinity (0)
    auto cycles = attracting_cycles_arch(fixtures::psi(), 1, tol10());
    REQUIRE(cycles.size() == 2);
    std::vector<Rat> mults;
    for (const AttractingCycle& c : cycles) {
        CHECK(c.period == 1);
        CHECK(c.exact);
        mults.push_back(c.multiplier_exact);
    }
    std::sort(mults.begin(), mults.end());
    CHECK(mults[0] == Rat(-1, 2));
    CHECK(mults[1] == 0);
}

TEST_CASE("multipliers are invariant under conjugation") {
    // example3 is psi conjugated by a Moebius map, so the multiplier
    // multiset at fixed points matches
    auto cycles = attracting_cycles_arch(fixtures::example3(), 1, tol10());
    REQUIRE(cycles.size() == 2);
    std::vector<Rat> mults;
    for (const AttractingCycle& c : cycles) {
        CHECK(c.exact);
        mults.push_back(c.multiplier_exact);
    }
    std::sort(mults.begin(), mults.end());
    CHECK(mults[0] == Rat(-1, 2));
    CHECK(mults[1] == 0);
}

TEST_CASE("irrational attracting fixed point of (4z^2 - 1)/4") {
    // fixed points (1 +- sqrt 2)/2 with multipliers 1 +- sqrt 2, plus
    // superattracting infinity
    RationalMap map = RationalMap::from_affine({4, 0, -1}, {4});
    auto cycles = attracting_cycles_arch(map, 1, tol10());
    REQUIRE(cycles.size() == 2);
    const AttractingCycle* irr = nullptr;
    for (const AttractingCycle& c : cycles) {
        if (c.exact) {
            CHECK(c.multiplier_exact == 0);
            CHECK(c.rational_points[0].is_infinity());
        } else {
            irr = &c;
        }
    }
    REQUIRE(irr != nullptr);
    CHECK(irr->period == 1);
    Real expect = sqrt(Real(2)) - 1;
    CHECK(abs(irr->multiplier_abs.mid - expect) < irr->multiplier_abs.rad + tol10());
}

TEST_CASE("basin certificates") {
    Real t = tol10();
    SUBCASE("orbit of infinity under example1 falls into the basin of 0") {
        BasinCertificate b =
            basin_certificate_arch(fixtures::example1(), ProjPointQ::infinity(), t);
        CHECK(b.certified);
        CHECK(b.period == 1);
        CHECK(b.contraction < 1);
        CHECK(b.steps >= 1);
    }
    SUBCASE("a point already on an attracting cycle certifies immediately") {
        BasinCertificate b = basin_certificate_arch(fixtures::example2(), ProjPointQ(0, 1), t);
        CHECK(b.certified);
        CHECK(b.period == 2);
        CHECK(b.steps <= 1);  // the disc sits at one of the two cycle points
    }
    SUBCASE("a Julia-set point of the squaring map is never certified") {
        BasinCertificate b = basin_certificate_arch(squaring(), ProjPointQ(1, 1), t);
        CHECK(!b.certified);
        CHECK(!b.note.empty());
    }
    SUBCASE("escape to the superattracting point at infinity") {
        BasinCertificate b = basin_certificate_arch(squaring(), ProjPointQ(2, 1), t);
        CHECK(b.certified);
        CHECK(b.in_w_chart);
        BasinCertificate b2 = basin_certificate_arch(squaring(), ProjPointQ(1, 3), t);
        CHECK(b2.certified);
        CHECK(!b2.in_w_chart);
    }
    SUBCASE("convergence to an irrational fixed point") {
        RationalMap map = RationalMap::from_affine({4, 0, -1}, {4});
        BasinCertificate b = basin_certificate_arch(map, ProjPointQ(0, 1), t);
        CHECK(b.certified);
        CHECK(b.period == 1);
    }
}

TEST_CASE("per-place Fatou reports") {
    Real t = tol10();
    SUBCASE("example1 has good reduction everywhere: certified at every place") {
        FatouReport r = totally_fatou_report(fixtures::example1(), ProjPointQ::infinity(),
                                             Int(20), t);
        REQUIRE(r.per_place.count(Place::arch()) == 1);
        CHECK(r.per_place[Place::arch()].certified);
        for (long p : {2, 3, 5, 7, 11, 13, 17, 19}) {
            REQUIRE(r.per_place.count(Place::prime(p)) == 1);
            CHECK(r.per_place[Place::prime(p)].certified);
        }
        CHECK(r.per_place.size() == 9);
        CHECK(r.others_certified);
    }
    SUBCASE("example3 at infinity: not certified at its bad prime 2") {
        FatouReport r = totally_fatou_report(fixtures::example3(), ProjPointQ::infinity(),
                                             Int(10), t);
        CHECK(r.per_place[Place::arch()].certified);
        CHECK(!r.per_place[Place::prime(2)].certified);
        CHECK(r.per_place[Place::prime(3)].certified);
        CHECK(r.per_place[Place::prime(5)].certified);
        CHECK(r.per_place[Place::prime(7)].certified);
    }
    SUBCASE("maps with good reduction everywhere certify every listed prime") {
        FatouReport r = totally_fatou_report(squaring(), ProjPointQ(0, 1), Int(10), t);
        CHECK(r.per_place[Place::arch()].certified);
        for (long p : {2, 3, 5, 7})
            CHECK(r.per_place[Place::prime(p)].certified);
        CHECK(r.per_place.size() == 5);
    }
    SUBCASE("bad primes above the budget are still reported") {
        // psi has bad reduction only at 2; shrink the budget below it
        FatouReport r = totally_fatou_report(fixtures::psi(), ProjPointQ::infinity(),
                                             Int(1), t);
        REQUIRE(r.per_place.count(Place::prime(2)) == 1);
        CHECK(!r.per_place[Place::prime(2)].certified);
    }
}

TEST_CASE("attracting cycle argument validation") {
    CHECK_THROWS_AS(attracting_cycles_arch(squaring(), 0, tol10()), algebra_error);
    CHECK_THROWS_AS(attracting_cycles_arch(squaring(), 1, Real(0)), algebra_error);
}
