#include "dynheight/heights.hpp"

#include "dynheight/newton_polygon.hpp"
#include "dynheight/roots.hpp"

#include <algorithm>

namespace dynheight {

namespace {

RBall rb_of_exact(const Real& x) { return RBall(x); }

// d^(-k) as a ball
RBall inv_pow(int d, int k) {
    Real v = pow(Real(d), -k);
    return RBall(v, v * round_eps());
}

RBall euclid_norm(const CBall& z0, const CBall& z1) {
    RBall a = z0.abs(), b = z1.abs();
    return rb_sqrt(a * a + b * b);
}

}  // namespace

Real weil_height_point(const ProjPointQ& p) {
    Int m = std::max(Int(abs(p.a())), Int(abs(p.b())));
    return log(to_real(m));
}

RBall weil_height_set(const AlgebraicSet& z, const Real& tol) {
    if (tol <= 0) throw algebra_error("weil_height_set: tol <= 0");
    int n = z.size();
    Real target = tol / (8 * (n + 1));
    auto roots = complex_roots_certified(z.form(), target);
    RBall acc = rb_log(RBall::of_int(abs(z.form().leading())));
    RBall one(Real(1));
    for (const auto& r : roots) {
        if (r.at_infinity) continue;  // h(infinity) = 0
        acc = acc + rb_log(rb_max(one, r.disc.abs()));
    }
    return acc * RBall(Real(1) / n, round_eps());
}

EscapeRateResult escape_rate_arch(const RationalMap& map, const CBall& z0,
                                  const CBall& z1, const Real& tol) {
    if (tol <= 0) throw algebra_error("escape_rate_arch: tol <= 0");
    if (z0.contains_zero() && z1.contains_zero())
        throw algebra_error("escape_rate_arch: lift may be (0,0)");
    MapBounds mb = map_bounds(map);
    int d = map.degree();

    // after K steps the dropped remainder is d^{-K} * Ghat(v_K) with
    // ||v_K|| in [e^-C * 2^-d, e^C * 2^d]; |Ghat(w)| <= |log||w||| + C/(d-1)
    Real slack = mb.c_arch + mb.c_arch / (d - 1) + d;
    int K = 1;
    Real t = slack / d;
    while (t > tol / 2 && K < 100000) {
        t /= d;
        ++K;
    }
    Real tail = t;

    RBall acc;
    CBall u0 = z0, u1 = z1;
    for (int k = 0; k < K; ++k) {
        Real s = std::max(u0.abs_upper(), u1.abs_upper());
        // include the Euclidean norm of (u0,u1)/s in the logged scalar:
        // log s_k with s_k = s * ||u/s||, accumulated as a ball
        CBall w0 = cb_div_exact(u0, s);
        CBall w1 = cb_div_exact(u1, s);
        RBall nrm = euclid_norm(w0, w1);
        RBall logs = rb_log(rb_of_exact(s)) + rb_log(nrm);
        acc = acc + inv_pow(d, k) * logs;
        // renormalize to Euclidean norm ~1 and apply the lift
        Real nm = nrm.mid;
        w0 = cb_div_exact(w0, nm);
        w1 = cb_div_exact(w1, nm);
        auto [f, g] = map.apply_lift(w0, w1);
        u0 = f;
        u1 = g;
        if (u0.rad > Real(1) / 4 || u1.rad > Real(1) / 4)
            throw numeric_error("escape_rate_arch: ball radius blew up; raise precision");
    }
    EscapeRateResult out;
    out.place = Place::arch();
    out.value = acc.mid;
    out.error_bound = acc.rad + tail;
    return out;
}

RBall eta_arch(const RationalMap& map, const CBall& z0, const CBall& z1,
               const Real& tol) {
    EscapeRateResult g = escape_rate_arch(map, z0, z1, tol);
    RBall gb(g.value, g.error_bound);
    return gb - rb_log(euclid_norm(z0, z1));
}

EscapeRateResult escape_rate_padic_rational(const RationalMap& map, const Int& p,
                                            const ProjPointQ& pt, const Real& tol) {
    if (!is_prime(p)) throw algebra_error("escape_rate_padic_rational: p not prime");
    if (tol <= 0) throw algebra_error("escape_rate_padic_rational: tol <= 0");
    EscapeRateResult out;
    out.place = Place::prime(p);
    out.has_exact = true;
    long vres = valuation(map.res(), p);
    if (vres == 0) {
        // good reduction: Gauss-norm equality makes every term vanish
        out.value = 0;
        out.error_bound = 0;
        out.rat_coeff = 0;
        return out;
    }
    int d = map.degree();
    Real logp = log(to_real(p));
    // tail after K terms: vres * log p / (d^K (d-1))
    int K = 1;
    Real t = Real(vres) * logp / (d - 1) / d;
    while (t > tol && K < 100000) {
        t /= d;
        ++K;
    }

    // modular valuation tracking: residues of the coprime orbit lift
    long bexp = vres * static_cast<long>(K + 2) + 4;
    Int modulus = pow(p, static_cast<unsigned>(bexp));
    Int a = pt.a() % modulus, b = pt.b() % modulus;
    if (a < 0) a += modulus;
    if (b < 0) b += modulus;
    Rat sum = 0;
    Rat dk(1, d);
    long mod_exp = bexp;
    for (int k = 0; k < K; ++k) {
        Int fa = map.F().eval(a, b) % modulus;
        Int fb = map.G().eval(a, b) % modulus;
        long va = (fa == 0) ? mod_exp : valuation(fa, p);
        long vb = (fb == 0) ? mod_exp : valuation(fb, p);
        long m = std::min(va, vb);
        if (m > vres)
            throw numeric_error("escape_rate_padic_rational: valuation exceeds v_p(Res)");
        sum += -Rat(m) * dk;
        dk /= d;
        if (m > 0) {
            Int pm = pow(p, static_cast<unsigned>(m));
            mod_exp -= m;
            modulus /= pm;
            fa /= pm;
            fb /= pm;
            fa %= modulus;
            fb %= modulus;
        }
        a = fa;
        b = fb;
    }
    out.rat_coeff = sum;
    out.value = to_real(sum) * logp;
    out.error_bound = t + abs(out.value) * round_eps();
    return out;
}

CanonicalHeightResult canonical_height_limit(const RationalMap& map,
                                             const ProjPointQ& pt, const Real& tol) {
    if (tol <= 0) throw algebra_error("canonical_height_limit: tol <= 0");
    MapBounds mb = map_bounds(map);
    int d = map.degree();
    // |h(phi^n P)/d^n - hhat(P)| <= c_naive / (d^n (d-1))
    int n = 0;
    Real t = mb.c_naive / (d - 1);
    while (t > tol / 2 && n < 100000) {
        t /= d;
        ++n;
    }

    // The orbit heights are tracked as (float unit vector, log-scale):
    // the exact coprime representative is u * e^lambda, with the gcd of
    // each raw image recovered exactly from per-bad-prime residues
    // (gcd(F(u), G(u)) is supported on primes dividing Res).
    struct PrimeTrack {
        Int p;
        long vres;
        Int modulus;
        long mod_exp;
        Int a, b;
    };
    std::vector<PrimeTrack> tracks;
    for (const Int& p : bad_primes(map)) {
        PrimeTrack tr;
        tr.p = p;
        tr.vres = valuation(map.res(), p);
        tr.mod_exp = tr.vres * static_cast<long>(n + 2) + 4;
        tr.modulus = pow(p, static_cast<unsigned>(tr.mod_exp));
        tr.a = ((pt.a() % tr.modulus) + tr.modulus) % tr.modulus;
        tr.b = ((pt.b() % tr.modulus) + tr.modulus) % tr.modulus;
        tracks.push_back(std::move(tr));
    }

    CBall u0 = CBall::of_int(pt.a());
    CBall u1 = CBall::of_int(pt.b());
    RBall lambda;
    RBall dball{Real(d)};
    for (int k = 0; k < n; ++k) {
        // exact gcd of the raw image, from the modular tracks
        Int g = 1;
        for (auto& tr : tracks) {
            Int fa = map.F().eval(tr.a, tr.b) % tr.modulus;
            Int fb = map.G().eval(tr.a, tr.b) % tr.modulus;
            long va = (fa == 0) ? tr.mod_exp : valuation(fa, tr.p);
            long vb = (fb == 0) ? tr.mod_exp : valuation(fb, tr.p);
            long m = std::min(va, vb);
            if (m > tr.vres)
                throw numeric_error("canonical_height_limit: valuation exceeds v_p(Res)");
            Int pm = pow(tr.p, static_cast<unsigned>(m));
            g *= pm;
            tr.mod_exp -= m;
            tr.modulus /= pm;
            tr.a = (fa / pm) % tr.modulus;
            tr.b = (fb / pm) % tr.modulus;
        }
        // other-prime parts of g are invertible in each track; divide them out
        for (auto& tr : tracks) {
            Int pm = pow(tr.p, static_cast<unsigned>(valuation(g, tr.p)));
            Int rest = g / pm;
            if (rest != 1) {
                Int inv;
                if (mpz_invert(inv.backend().data(), Int(rest % tr.modulus).backend().data(),
                               tr.modulus.backend().data()) == 0)
                    throw numeric_error("canonical_height_limit: non-invertible cofactor");
                tr.a = (tr.a * inv) % tr.modulus;
                tr.b = (tr.b * inv) % tr.modulus;
            }
        }
        auto [w0, w1] = map.apply_lift(u0, u1);
        Real s = std::max(w0.abs_upper(), w1.abs_upper());
        if (s == 0) throw numeric_error("canonical_height_limit: zero image");
        u0 = cb_div_exact(w0, s);
        u1 = cb_div_exact(w1, s);
        lambda = lambda * dball + rb_log(RBall(s)) - rb_log(RBall::of_int(g));
        if (u0.rad > Real(1) / 4 || u1.rad > Real(1) / 4)
            throw numeric_error("canonical_height_limit: ball radius blew up; raise precision");
    }
    RBall h = lambda + rb_log(rb_max(u0.abs(), u1.abs()));
    RBall val = h * inv_pow(d, n);

    CanonicalHeightResult out;
    out.method = CanonicalHeightResult::Method::Limit;
    out.value = val.mid;
    out.error_bound = val.rad + t;
    return out;
}

CanonicalHeightResult canonical_height_local(const RationalMap& map,
                                             const ProjPointQ& pt, const Real& tol) {
    if (tol <= 0) throw algebra_error("canonical_height_local: tol <= 0");
    auto primes = bad_primes(map);
    size_t parts = primes.size() + 1;
    Real sub_tol = tol / static_cast<long>(2 * parts);

    EscapeRateResult arch = escape_rate_arch(map, CBall::of_int(pt.a()),
                                             CBall::of_int(pt.b()), sub_tol);
    Real value = arch.value;
    Real err = arch.error_bound;
    for (const Int& p : primes) {
        EscapeRateResult er = escape_rate_padic_rational(map, p, pt, sub_tol);
        value += er.value;
        err += er.error_bound + abs(value) * round_eps();
    }
    CanonicalHeightResult out;
    out.method = CanonicalHeightResult::Method::LocalSum;
    out.value = value;
    out.error_bound = err;
    return out;
}

}  // namespace dynheight
