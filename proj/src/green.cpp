#include "dynheight/green.hpp"

#include "dynheight/factor.hpp"
#include "dynheight/newton_polygon.hpp"
#include "dynheight/roots.hpp"

#include <algorithm>

namespace dynheight {

namespace {

RBall euclid_norm(const CBall& z0, const CBall& z1) {
    RBall a = z0.abs(), b = z1.abs();
    return rb_sqrt(a * a + b * b);
}

Int wedge(const ProjPointQ& p, const ProjPointQ& q) {
    return p.a() * q.b() - p.b() * q.a();
}

void require_disjoint(const AlgebraicSet& a, const AlgebraicSet& b) {
    if (form_gcd(a.form(), b.form()).degree() > 0)
        throw green_error(GreenErrorKind::SharedPoint, "the two sets share a point");
}

// lifts of the certified projective roots of a form: (alpha, 1) for finite
// roots, (1, 0) for the root at infinity
std::vector<std::pair<CBall, CBall>> root_lifts(const AlgebraicSet& s, const Real& target) {
    std::vector<std::pair<CBall, CBall>> out;
    for (const auto& r : complex_roots_certified(s.form(), target)) {
        if (r.at_infinity)
            out.emplace_back(CBall::of_int(1), CBall::of_int(0));
        else
            out.emplace_back(r.disc, CBall::of_int(1));
    }
    return out;
}

struct ArchPairData {
    std::vector<std::pair<CBall, CBall>> zl, pl;
    std::vector<RBall> ze, pe;  // eta per root
};

ArchPairData arch_pair_data(const RationalMap& map, const AlgebraicSet& z,
                            const AlgebraicSet& porbit, const Real& tol) {
    require_disjoint(z, porbit);
    // the escape-rate iteration magnifies a root disc by the orbit's
    // expansion factor, so force the refinement all the way down to the
    // precision floor instead of stopping at the tolerance
    Real target = tol / 16;
    Real floor_guess = pow(Real(2), -static_cast<long>(precision_bits()) / 2);
    if (target > floor_guess) target = floor_guess;
    Real sub = tol / 4;
    ArchPairData d;
    d.zl = root_lifts(z, target);
    d.pl = root_lifts(porbit, target);
    for (const auto& [u0, u1] : d.zl) d.ze.push_back(eta_arch(map, u0, u1, sub));
    for (const auto& [u0, u1] : d.pl) d.pe.push_back(eta_arch(map, u0, u1, sub));
    return d;
}

RBall pair_green_arch(const ArchPairData& d, size_t i, size_t j) {
    const auto& [z0, z1] = d.zl[i];
    const auto& [w0, w1] = d.pl[j];
    return d.ze[i] + d.pe[j] - rb_log(proj_metric_arch(z0, z1, w0, w1));
}

}  // namespace

Rat proj_metric_padic(const Int& p, const ProjPointQ& pt, const ProjPointQ& q) {
    if (!is_prime(p)) throw algebra_error("proj_metric_padic: p not prime");
    Int w = wedge(pt, q);
    if (w == 0) return 0;  // equal points
    long v = valuation(w, p);
    if (v >= 0) return Rat(1, pow(p, static_cast<unsigned>(v)));
    return Rat(pow(p, static_cast<unsigned>(-v)));
}

RBall proj_metric_arch(const CBall& z0, const CBall& z1, const CBall& w0, const CBall& w1) {
    RBall num = (z0 * w1 - z1 * w0).abs();
    return num / (euclid_norm(z0, z1) * euclid_norm(w0, w1));
}

RBall proj_metric(const Place& v, const ProjPointQ& p, const ProjPointQ& q) {
    if (v.archimedean)
        return proj_metric_arch(CBall::of_int(p.a()), CBall::of_int(p.b()),
                                CBall::of_int(q.a()), CBall::of_int(q.b()));
    return RBall(to_real(proj_metric_padic(v.p, p, q)));
}

RBall green_pair(const RationalMap& map, const Place& v, const ProjPointQ& p,
                 const ProjPointQ& q, const Real& tol) {
    if (p == q)
        throw green_error(GreenErrorKind::EqualPoints, "green pairing diverges on the diagonal");
    if (v.archimedean) {
        CBall p0 = CBall::of_int(p.a()), p1 = CBall::of_int(p.b());
        CBall q0 = CBall::of_int(q.a()), q1 = CBall::of_int(q.b());
        return eta_arch(map, p0, p1, tol / 4) + eta_arch(map, q0, q1, tol / 4) -
               rb_log(proj_metric_arch(p0, p1, q0, q1));
    }
    // eta_p of a coprime lift is the p-adic escape rate (||lift||_p = 1)
    EscapeRateResult gp = escape_rate_padic_rational(map, v.p, p, tol / 4);
    EscapeRateResult gq = escape_rate_padic_rational(map, v.p, q, tol / 4);
    Int w = wedge(p, q);
    Real logd = valuation(w, v.p) * log(to_real(v.p));
    Real mid = gp.value + gq.value + logd;
    return RBall(mid, gp.error_bound + gq.error_bound + (abs(mid) + 1) * round_eps());
}

PlaceValue orbit_green_sum_good_prime(const AlgebraicSet& a, const AlgebraicSet& b,
                                      const Int& p) {
    if (!is_prime(p)) throw algebra_error("orbit_green_sum_good_prime: p not prime");
    require_disjoint(a, b);
    Int res = resultant(a.form(), b.form());
    return PlaceValue{Rat(valuation(res, p)), p};
}

GammaContribution gamma_place(const RationalMap& map, const AlgebraicSet& z,
                              const AlgebraicSet& porbit, const Place& v, const Real& tol) {
    require_disjoint(z, porbit);
    long nm = static_cast<long>(z.size()) * porbit.size();
    GammaContribution out;
    if (v.archimedean) {
        ArchPairData d = arch_pair_data(map, z, porbit, tol);
        RBall acc;
        for (size_t i = 0; i < d.zl.size(); ++i)
            for (size_t j = 0; j < d.pl.size(); ++j) acc = acc + pair_green_arch(d, i, j);
        out.value = acc * RBall(Real(1) / nm, round_eps());
        return out;
    }
    const Int& p = v.p;
    std::set<Int> bad = bad_primes(map);
    if (bad.count(p) == 0) {
        PlaceValue pv = orbit_green_sum_good_prime(z, porbit, p);
        out.has_exact = true;
        out.coeff = pv.coeff / nm;
        Real mid = to_real(out.coeff) * log(to_real(p));
        out.value = RBall(mid, (abs(mid) + 1) * round_eps());
        return out;
    }
    // bad prime: exact valuation iteration needs rational points
    if (!z.all_rational() || !porbit.all_rational())
        throw green_error(GreenErrorKind::UnsupportedPlacePoint,
                          "bad prime with non-rational conjugates is unsupported");
    auto zp = z.rational_points();
    auto pp = porbit.rational_points();
    Rat coeff = 0;
    Real err = 0;
    Real sub = tol / (2 * nm);
    std::map<ProjPointQ, EscapeRateResult> cache;
    auto escape = [&](const ProjPointQ& q) {
        auto it = cache.find(q);
        if (it == cache.end())
            it = cache.emplace(q, escape_rate_padic_rational(map, p, q, sub)).first;
        return it->second;
    };
    for (const ProjPointQ& a : zp) {
        for (const ProjPointQ& b : pp) {
            EscapeRateResult ga = escape(a), gb = escape(b);
            coeff += ga.rat_coeff + gb.rat_coeff + Rat(valuation(wedge(a, b), p));
            err += ga.error_bound + gb.error_bound;
        }
    }
    out.has_exact = true;
    out.coeff = coeff / nm;
    Real mid = to_real(out.coeff) * log(to_real(p));
    out.value = RBall(mid, err / nm + (abs(mid) + 1) * round_eps());
    return out;
}

GreenReport gamma_total(const RationalMap& map, const AlgebraicSet& z,
                        const AlgebraicSet& porbit, const Real& tol) {
    require_disjoint(z, porbit);
    GreenReport rep;
    rep.set_size = z.size();
    rep.orbit_size = porbit.size();

    std::set<Int> primes = bad_primes(map);
    Int res = resultant(z.form(), porbit.form());
    for (const auto& [p, e] : factorize(res)) primes.insert(p);

    GammaContribution arch = gamma_place(map, z, porbit, Place::arch(), tol);
    rep.per_place[Place::arch()] = arch.value;
    RBall total = arch.value;
    for (const Int& p : primes) {
        GammaContribution c = gamma_place(map, z, porbit, Place::prime(p), tol);
        rep.per_place[Place::prime(p)] = c.value;
        if (c.has_exact) rep.exact[Place::prime(p)] = c.coeff;
        total = total + c.value;
    }
    rep.total = total;
    return rep;
}

IntegralityVerdict s_integral_test(const RationalMap& map, const AlgebraicSet& z,
                                   const AlgebraicSet& porbit, const std::set<Int>& s_primes) {
    (void)map;
    require_disjoint(z, porbit);
    Int res = resultant(z.form(), porbit.form());
    IntegralityVerdict v;
    for (const auto& [p, e] : factorize(res)) {
        if (s_primes.count(p)) continue;
        v.witnesses.emplace_back(p, e);
    }
    v.integral = v.witnesses.empty();
    return v;
}

RBall truncated_green_average(const RationalMap& map, const AlgebraicSet& z,
                              const AlgebraicSet& porbit, const Real& m, const Real& tol) {
    if (m <= 0) throw algebra_error("truncated_green_average: M <= 0");
    ArchPairData d = arch_pair_data(map, z, porbit, tol);
    RBall mball{m};
    RBall acc;
    for (size_t i = 0; i < d.zl.size(); ++i) {
        RBall f;
        for (size_t j = 0; j < d.pl.size(); ++j) f = f + pair_green_arch(d, i, j);
        f = f * RBall(Real(1) / static_cast<long>(d.pl.size()), round_eps());
        acc = acc + rb_min(f, mball);
    }
    return acc * RBall(Real(1) / static_cast<long>(d.zl.size()), round_eps());
}

}  // namespace dynheight
