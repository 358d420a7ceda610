#include "doctest.h"
#include "test_util.hpp"

#include "dynheight/fixtures.hpp"
#include "dynheight/heights.hpp"

using namespace dynheight;
using dhtest::hf;

namespace {
Real tol9() { return Real(1) / 1000000000; }
}

TEST_CASE("weil height of rational points") {
    CHECK(weil_height_point(ProjPointQ(1, 1)) == 0);
    CHECK(abs(weil_height_point(ProjPointQ(2, 1)) - log(Real(2))) < tol9());
    CHECK(weil_height_point(ProjPointQ::infinity()) == 0);
}

TEST_CASE("average weil height of algebraic sets") {
    Real t = tol9();
    RBall h1 = weil_height_set(AlgebraicSet(hf({1, -2})), t);
    CHECK(abs(h1.mid - log(Real(2))) < h1.rad + t);

    RBall h2 = weil_height_set(AlgebraicSet(hf({1, 0, -2})), t);
    CHECK(abs(h2.mid - log(Real(2)) / 2) < h2.rad + t);

    RBall h3 = weil_height_set(AlgebraicSet(hf({0, 1, -1, 0})), t);
    CHECK(abs(h3.mid) < h3.rad + t);
}

TEST_CASE("archimedean escape rate of the squaring map") {
    RationalMap sq = RationalMap::from_affine({1, 0, 0}, {1});
    Real t = tol9();

    EscapeRateResult g21 = escape_rate_arch(sq, CBall::of_int(2), CBall::of_int(1), t);
    CHECK(abs(g21.value - log(Real(2))) < g21.error_bound + t);

    EscapeRateResult g11 = escape_rate_arch(sq, CBall::of_int(1), CBall::of_int(1), t);
    CHECK(abs(g11.value) < g11.error_bound + t);
}

TEST_CASE("escape rate scales by log of the lift scalar") {
    Real t = tol9();
    for (const auto& map : {fixtures::example1(), fixtures::psi()}) {
        EscapeRateResult base = escape_rate_arch(map, CBall::of_int(3), CBall::of_int(2), t);
        for (long lam : {2, 7, -5}) {
            EscapeRateResult scaled =
                escape_rate_arch(map, CBall::of_int(3 * lam), CBall::of_int(2 * lam), t);
            Real want = base.value + log(abs(Real(lam)));
            CHECK(abs(scaled.value - want) < base.error_bound + scaled.error_bound + t);
        }
    }
}

TEST_CASE("eta is invariant under lift scaling") {
    Real t = tol9();
    RationalMap m = fixtures::example1();
    RBall base = eta_arch(m, CBall::of_int(5), CBall::of_int(3), t);
    for (long lam : {3, -11}) {
        RBall scaled = eta_arch(m, CBall::of_int(5 * lam), CBall::of_int(3 * lam), t);
        CHECK(abs(scaled.mid - base.mid) < scaled.rad + base.rad + 2 * t);
    }
}

TEST_CASE("p-adic escape rates of rational points") {
    Real t = tol9();
    SUBCASE("good reduction is exactly zero") {
        EscapeRateResult r =
            escape_rate_padic_rational(fixtures::example1(), 5, ProjPointQ(7, 3), t);
        CHECK(r.value == 0);
        CHECK(r.error_bound == 0);
        CHECK(r.has_exact);
        CHECK(r.rat_coeff == 0);
    }
    SUBCASE("(z^2-z)/2 at p=2, point 1: partial sums -(2^n - 1)/2^n log 2") {
        EscapeRateResult r = escape_rate_padic_rational(fixtures::psi(), 2, ProjPointQ(1, 1), t);
        CHECK(r.has_exact);
        CHECK(abs(r.value + log(Real(2))) < r.error_bound + t);
        // the exact coefficient is a partial sum -(2^K - 1)/2^K
        Rat c = r.rat_coeff;
        CHECK(c < 0);
        CHECK(c > -1);
        CHECK(abs(to_real(c) + 1) * log(Real(2)) <= r.error_bound * (1 + round_eps()) + t);
    }
    SUBCASE("(z^2-z)/2 at p=2, point 0: the lift (0,1) maps to (0,2) forever") {
        EscapeRateResult r = escape_rate_padic_rational(fixtures::psi(), 2, ProjPointQ(0, 1), t);
        CHECK(abs(r.value + log(Real(2))) < r.error_bound + t);
    }
}

TEST_CASE("canonical height by the defining limit") {
    Real t = tol9();
    RationalMap sq = RationalMap::from_affine({1, 0, 0}, {1});
    CanonicalHeightResult h2 = canonical_height_limit(sq, ProjPointQ(2, 1), t);
    CHECK(abs(h2.value - log(Real(2))) < h2.error_bound + t);

    CanonicalHeightResult h0 = canonical_height_limit(fixtures::example1(), ProjPointQ(0, 1), t);
    CHECK(abs(h0.value) < h0.error_bound + t);
}

TEST_CASE("canonical height by local escape rates") {
    Real t = tol9();
    RationalMap sq = RationalMap::from_affine({1, 0, 0}, {1});
    CanonicalHeightResult h2 = canonical_height_local(sq, ProjPointQ(2, 1), t);
    CHECK(abs(h2.value - log(Real(2))) < h2.error_bound + t);

    CanonicalHeightResult h1 = canonical_height_local(fixtures::psi(), ProjPointQ(1, 1), t);
    CHECK(abs(h1.value) < h1.error_bound + t);
}

TEST_CASE("the two canonical height methods agree") {
    Real t = tol9();
    for (const auto& map :
         {fixtures::example1(), fixtures::example2(), fixtures::example3(), fixtures::psi()}) {
        for (const ProjPointQ& p :
             {ProjPointQ::infinity(), ProjPointQ(2, 1), ProjPointQ(-3, 5), ProjPointQ(7, 2)}) {
            CanonicalHeightResult a = canonical_height_limit(map, p, t);
            CanonicalHeightResult b = canonical_height_local(map, p, t);
            CHECK(abs(a.value - b.value) <= a.error_bound + b.error_bound);
            CHECK(a.value >= -a.error_bound);
            CHECK(b.value >= -b.error_bound);
        }
    }
}

TEST_CASE("functional equation of the canonical height") {
    Real t = tol9();
    for (const auto& map : {fixtures::example1(), fixtures::example3()}) {
        for (const ProjPointQ& p : {ProjPointQ(1, 1), ProjPointQ(3, 2)}) {
            CanonicalHeightResult hp = canonical_height_limit(map, p, t);
            CanonicalHeightResult hfp = canonical_height_limit(map, map.apply(p), t);
            Real gap = abs(hfp.value - map.degree() * hp.value);
            CHECK(gap <= hfp.error_bound + map.degree() * hp.error_bound);
        }
    }
}

TEST_CASE("canonical height vanishes on confirmed preperiodic points") {
    Real t = tol9();
    RationalMap m = fixtures::example2();
    for (const ProjPointQ& p : {ProjPointQ(0, 1), ProjPointQ(1, 1), ProjPointQ(-1, 1),
                                ProjPointQ::infinity()}) {
        REQUIRE(decide_preperiodic_rational(m, p).status == OrbitRecord::Status::Preperiodic);
        CanonicalHeightResult h = canonical_height_limit(m, p, t);
        CHECK(abs(h.value) <= h.error_bound);
    }
}
