#include "doctest.h"
#include "test_util.hpp"

#include "dynheight/fixtures.hpp"
#include "dynheight/preperiodic.hpp"

using namespace dynheight;
using dhtest::hf;

namespace {
Real tol8() { return Real(1) / 100000000; }

RationalMap squaring() { return RationalMap::from_affine({1, 0, 0}, {1}); }
}

TEST_CASE("catalog of the squaring map") {
    SUBCASE("max_m = 1: fixed points 0, 1, infinity") {
        PreperiodicCatalog cat = enumerate_preperiodic_sets(squaring(), 1);
        REQUIRE(cat.entries.size() == 1);
        CHECK(cat.entries[0].m == 1);
        CHECK(cat.entries[0].n == 0);
        CHECK(cat.entries[0].set.size() == 3);
        CHECK(cat.entries[0].set.contains_infinity());
        CHECK(cat.cumulative_size == 3);
        CHECK(!cat.budget_exceeded);
        auto pts = cat.entries[0].set.rational_points();
        REQUIRE(pts.size() == 3);
    }
    SUBCASE("max_m = 2 adds primitive cube roots and -1") {
        PreperiodicCatalog cat = enumerate_preperiodic_sets(squaring(), 2);
        REQUIRE(cat.entries.size() == 3);
        // (2,0) batch: primitive cube roots of unity
        CHECK(cat.entries[1].m == 2);
        CHECK(cat.entries[1].n == 0);
        CHECK(cat.entries[1].set.size() == 2);
        CHECK(cat.entries[1].set.form() == hf({1, 1, 1}));
        // (2,1) batch: the point -1
        CHECK(cat.entries[2].m == 2);
        CHECK(cat.entries[2].n == 1);
        CHECK(cat.entries[2].set.size() == 1);
        auto pts = cat.entries[2].set.rational_points();
        REQUIRE(pts.size() == 1);
        CHECK(pts[0] == ProjPointQ(-1, 1));
        CHECK(cat.cumulative_size == 6);
    }
}

TEST_CASE("catalog batches are pairwise disjoint and sizes add up") {
    for (const std::string& name : {"example1", "example2", "example3"}) {
        PreperiodicCatalog cat = enumerate_preperiodic_sets(fixtures::by_name(name), 3);
        CHECK(!cat.budget_exceeded);
        int total = 0;
        for (size_t i = 0; i < cat.entries.size(); ++i) {
            const CatalogEntry& e = cat.entries[i];
            total += e.set.size();
            CHECK(e.set.size() >= 1);
            CHECK(e.raw_degree >= e.set.size());
            // raw degree never exceeds d^m + d^n
            Int bound = pow(Int(fixtures::by_name(name).degree()), e.m) +
                        pow(Int(fixtures::by_name(name).degree()), e.n);
            CHECK(Int(e.raw_degree) <= bound);
            for (size_t j = 0; j < i; ++j)
                CHECK(form_gcd(e.set.form(), cat.entries[j].set.form()).degree() == 0);
        }
        CHECK(total == cat.cumulative_size);
    }
}

TEST_CASE("catalog entries cover confirmed rational preperiodic points") {
    RationalMap map = fixtures::example2();  // z^2 - 1
    PreperiodicCatalog cat = enumerate_preperiodic_sets(map, 3);
    bool found0 = false, found1 = false, foundm1 = false, foundinf = false;
    for (const CatalogEntry& e : cat.entries) {
        for (const ProjPointQ& p : e.set.rational_points()) {
            CHECK(decide_preperiodic_rational(map, p).status ==
                  OrbitRecord::Status::Preperiodic);
            if (p == ProjPointQ(0, 1)) found0 = true;
            if (p == ProjPointQ(1, 1)) found1 = true;
            if (p == ProjPointQ(-1, 1)) foundm1 = true;
            if (p.is_infinity()) foundinf = true;
        }
    }
    CHECK(found0);
    CHECK(found1);
    CHECK(foundm1);
    CHECK(foundinf);
}

TEST_CASE("algebraic integer detection on single forms") {
    CHECK(all_algebraic_integers(AlgebraicSet(hf({1, -7}))));        // z = 7
    CHECK(!all_algebraic_integers(AlgebraicSet(hf({2, -1}))));       // z = 1/2
    CHECK(all_algebraic_integers(AlgebraicSet(hf({0, 1}))));         // infinity only
    CHECK(all_algebraic_integers(AlgebraicSet(hf({0, 1, -2}))));     // infinity and z = 2
    CHECK(!all_algebraic_integers(AlgebraicSet(hf({0, 2, -1}))));    // infinity and z = 1/2
    CHECK(all_algebraic_integers(AlgebraicSet(hf({1, 1, 1}))));      // cube roots of unity
    CHECK(!all_algebraic_integers(AlgebraicSet(hf({4, 5, 1}))));     // -1/4 and -1
}

TEST_CASE("integer filter splits the catalog") {
    SUBCASE("every preperiodic point of z^2 - 1 is an algebraic integer") {
        PreperiodicCatalog cat = enumerate_preperiodic_sets(fixtures::example2(), 3);
        IntegerFilterResult f = algebraic_integer_filter(cat);
        CHECK(f.non_integral.empty());
        CHECK(f.integral.size() == cat.entries.size());
        for (const CatalogEntry& e : cat.entries) CHECK(e.all_integral);
    }
    SUBCASE("the fixed point -1/4 of example3 is not integral") {
        PreperiodicCatalog cat = enumerate_preperiodic_sets(fixtures::example3(), 1);
        REQUIRE(cat.entries.size() == 1);
        CHECK(!cat.entries[0].all_integral);
        IntegerFilterResult f = algebraic_integer_filter(cat);
        REQUIRE(f.non_integral.size() == 1);
        CHECK(f.non_integral[0] == 0);
    }
}

TEST_CASE("equidistribution trend rows") {
    Real t = tol8();
    RationalMap map = fixtures::example1();
    PreperiodicCatalog cat = enumerate_preperiodic_sets(map, 2);
    std::vector<TrendRow> rows =
        equidistribution_report(map, ProjPointQ::infinity(), cat, Real(10), t);
    REQUIRE(rows.size() == cat.entries.size());
    int prev = 0;
    for (const TrendRow& r : rows) {
        CHECK(r.cumulative_degree > prev);
        prev = r.cumulative_degree;
        CHECK(r.truncated_average.rad < Real(1) / 100);
    }

    // a point inside one of the sets is rejected
    CHECK_THROWS_AS(equidistribution_report(map, ProjPointQ(0, 1), cat, Real(10), t),
                    green_error);
}
