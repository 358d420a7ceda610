#include "doctest.h"
#include "test_util.hpp"

#include "dynheight/factor.hpp"
#include "dynheight/fixtures.hpp"

#include <algorithm>

using namespace dynheight;
using dhtest::hf;

TEST_CASE("map validation") {
    RationalMap m1 = fixtures::example1();
    CHECK(m1.degree() == 2);
    CHECK(m1.res() == 1);

    CHECK_THROWS_AS(RationalMap::validate(hf({1, 0, 0}), hf({0, 1, 0})), map_error);
    CHECK_THROWS_AS(RationalMap::validate(hf({1, 0}), hf({0, 1})), map_error);
    try {
        RationalMap::validate(hf({1, 0}), hf({0, 1}));
    } catch (const map_error& e) {
        CHECK(e.kind == MapErrorKind::DegreeTooSmall);
    }
    try {
        RationalMap::validate(hf({1, 0, 0}), hf({0, 1, 0}));
    } catch (const map_error& e) {
        CHECK(e.kind == MapErrorKind::DegenerateMap);
    }
    // joint content is stripped
    RationalMap m = RationalMap::validate(hf({2, 0, 0}), hf({0, 0, 2}));
    CHECK(m.F() == hf({1, 0, 0}));
    CHECK(m.G() == hf({0, 0, 1}));
}

TEST_CASE("iteration as homogeneous pairs") {
    RationalMap sq = RationalMap::from_affine({1, 0, 0}, {1});
    auto [f0, g0] = iterate_pair(sq, 0);
    CHECK(f0 == HomForm::z0());
    CHECK(g0 == HomForm::z1());
    auto [f1, g1] = iterate_pair(sq, 1);
    CHECK(f1 == sq.F());
    CHECK(g1 == sq.G());
    auto [f2, g2] = iterate_pair(sq, 2);
    CHECK(f2 == hf({1, 0, 0, 0, 0}));
    CHECK(g2 == hf({0, 0, 0, 0, 1}));

    RationalMap m2 = fixtures::example2();
    for (int n = 0; n <= 4; ++n) {
        auto [fn, gn] = iterate_pair(m2, n);
        Int want = pow(Int(2), static_cast<unsigned>(n));
        CHECK(fn.degree() == want);
        CHECK(gn.degree() == want);
    }
}

TEST_CASE("preperiodicity sets") {
    RationalMap sq = RationalMap::from_affine({1, 0, 0}, {1});
    AlgebraicSet z10 = preperiodicity_set(sq, 1, 0);
    CHECK(z10.form() == hf({0, 1, -1, 0}));
    auto pts = z10.rational_points();
    REQUIRE(pts.size() == 3);
    CHECK(std::find(pts.begin(), pts.end(), ProjPointQ(0, 1)) != pts.end());
    CHECK(std::find(pts.begin(), pts.end(), ProjPointQ(1, 1)) != pts.end());
    CHECK(std::find(pts.begin(), pts.end(), ProjPointQ::infinity()) != pts.end());

    AlgebraicSet e10 = preperiodicity_set(fixtures::example1(), 1, 0);
    CHECK(e10.form() == hf({1, 3, 1, 0}));
    auto epts = e10.rational_points();
    REQUIRE(epts.size() == 1);
    CHECK(epts[0] == ProjPointQ(0, 1));

    // the 2-cycle 0 -> -1 -> 0 satisfies phi^2 = identity on its points
    AlgebraicSet c21 = preperiodicity_set(fixtures::example2(), 2, 0);
    auto cpts = c21.rational_points();
    CHECK(std::find(cpts.begin(), cpts.end(), ProjPointQ(0, 1)) != cpts.end());
    CHECK(std::find(cpts.begin(), cpts.end(), ProjPointQ(-1, 1)) != cpts.end());
}

TEST_CASE("bad primes") {
    CHECK(bad_primes(fixtures::example1()).empty());
    CHECK(bad_primes(fixtures::example3()) == std::set<Int>{2});
    CHECK(bad_primes(fixtures::psi()) == std::set<Int>{2});
}

TEST_CASE("rational preperiodicity decisions") {
    RationalMap m1 = fixtures::example1();
    OrbitRecord zero = decide_preperiodic_rational(m1, ProjPointQ(0, 1));
    CHECK(zero.status == OrbitRecord::Status::Preperiodic);
    CHECK(zero.tail_length == 0);
    CHECK(zero.cycle_length == 1);

    OrbitRecord inf = decide_preperiodic_rational(m1, ProjPointQ::infinity());
    CHECK(inf.status == OrbitRecord::Status::NotPreperiodic);

    OrbitRecord one = decide_preperiodic_rational(fixtures::example2(), ProjPointQ(1, 1));
    CHECK(one.status == OrbitRecord::Status::Preperiodic);
    CHECK(one.tail_length == 1);
    CHECK(one.cycle_length == 2);
}

TEST_CASE("rational points of preperiodicity sets are confirmed preperiodic") {
    for (const auto& map : {fixtures::example1(), fixtures::example2(), fixtures::psi()}) {
        for (auto [m, n] : {std::pair{1, 0}, std::pair{2, 0}, std::pair{2, 1}}) {
            AlgebraicSet z = preperiodicity_set(map, m, n);
            for (const ProjPointQ& p : z.rational_points()) {
                OrbitRecord rec = decide_preperiodic_rational(map, p);
                CHECK(rec.status == OrbitRecord::Status::Preperiodic);
            }
        }
    }
}

TEST_CASE("moebius conjugation") {
    fixtures::Mobius f = fixtures::example3_conjugator();
    RationalMap conj = conjugate_by_mobius(fixtures::psi(), f.a, f.b, f.c, f.d);
    CHECK(conj == fixtures::example3());

    RationalMap same = conjugate_by_mobius(fixtures::example1(), 1, 0, 0, 1);
    CHECK(same == fixtures::example1());

    // conjugating by f then adj(f) recovers the original map
    RationalMap back = conjugate_by_mobius(conj, f.d, -f.b, -f.c, f.a);
    CHECK(back == fixtures::psi());

    CHECK_THROWS_AS(conjugate_by_mobius(fixtures::psi(), 1, 2, 2, 4), algebra_error);
}

TEST_CASE("bad primes of a conjugate divide the original data") {
    fixtures::Mobius f = fixtures::example3_conjugator();
    Int det = f.a * f.d - f.b * f.c;
    for (const auto& map : {fixtures::example1(), fixtures::example2(), fixtures::psi()}) {
        RationalMap conj = conjugate_by_mobius(map, f.a, f.b, f.c, f.d);
        std::set<Int> allowed = bad_primes(map);
        for (const auto& [p, e] : factorize(det == 0 ? Int(1) : det)) allowed.insert(p);
        for (const Int& p : bad_primes(conj)) CHECK(allowed.count(p) == 1);
    }
}

TEST_CASE("preperiodic images stay preperiodic (divisibility of iterated sets)") {
    // roots of Phi_{1,0} map into roots of Phi_{2,1}: the squarefree part of
    // Phi_{1,0} divides Phi_{2,1} composed with nothing (phi of a fixed point
    // is the point itself), checked by exact division of the raw forms
    RationalMap m = fixtures::example2();
    auto [f2, g2] = iterate_pair(m, 2);
    auto [f1, g1] = iterate_pair(m, 1);
    HomForm phi21 = f2 * g1 - f1 * g2;
    HomForm phi10 = f1 * HomForm::z1() - HomForm::z0() * g1;
    HomForm q = exact_divide(phi21, squarefree_primitive_part(phi10));
    CHECK(q.degree() == phi21.degree() - squarefree_primitive_part(phi10).degree());
}
