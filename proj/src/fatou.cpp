#include "dynheight/fatou.hpp"

#include "dynheight/newton_polygon.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace dynheight {

namespace {

// Affine coordinate of a point: v in the z-chart, or v = 1/z when w_chart
// (so the point at infinity is w_chart with v = 0).
struct ChartVal {
    CBall v;
    bool w_chart = false;
};

struct ChartValQ {
    Rat v;
    bool w_chart = false;
};

ChartValQ chart_of(const ProjPointQ& p) {
    if (p.b() != 0 && abs(p.a()) <= abs(p.b())) return {Rat(p.a(), p.b()), false};
    return {Rat(p.b(), p.a()), true};
}

ChartVal to_ball(const ChartValQ& c) { return {CBall::of_rat(c.v), c.w_chart}; }

std::pair<CBall, CBall> lift_of(const ChartVal& c) {
    if (c.w_chart) return {CBall::of_int(1), c.v};
    return {c.v, CBall::of_int(1)};
}

// One application of the map in affine charts, together with the derivative
// of the chart-to-chart expression of the map at the input.
struct Step {
    ChartVal out;
    CBall deriv;
};

Step step_ball(const RationalMap& map, const ChartVal& in, std::optional<bool> force_w = {}) {
    auto [l0, l1] = lift_of(in);
    CBall fv = map.F().eval(l0, l1);
    CBall gv = map.G().eval(l0, l1);
    bool fz = fv.contains_zero(), gz = gv.contains_zero();
    bool outw;
    if (force_w)
        outw = *force_w;
    else if (gz && fz)
        throw numeric_error("fatou step: image chart undecidable; raise precision");
    else if (gz)
        outw = true;
    else if (fz)
        outw = false;
    else
        outw = c_abs(fv.mid) > c_abs(gv.mid);

    CBall df, dg;
    if (!in.w_chart) {
        df = eval_coeffs(map.F().derivative_z0(), l0, l1);
        dg = eval_coeffs(map.G().derivative_z0(), l0, l1);
    } else {
        df = eval_coeffs(map.F().derivative_z1(), l0, l1);
        dg = eval_coeffs(map.G().derivative_z1(), l0, l1);
    }
    Step s;
    if (!outw) {
        s.out = {fv / gv, false};
        s.deriv = (df * gv - fv * dg) / (gv * gv);
    } else {
        s.out = {gv / fv, true};
        s.deriv = (dg * fv - gv * df) / (fv * fv);
    }
    return s;
}

struct StepQ {
    ChartValQ out;
    Rat deriv;
};

StepQ step_exact(const RationalMap& map, const ChartValQ& in, std::optional<bool> force_w = {}) {
    Rat l0 = in.w_chart ? Rat(1) : in.v;
    Rat l1 = in.w_chart ? in.v : Rat(1);
    Rat fv = eval_coeffs(map.F().coeffs(), l0, l1);
    Rat gv = eval_coeffs(map.G().coeffs(), l0, l1);
    bool outw;
    if (force_w)
        outw = *force_w;
    else if (gv == 0)
        outw = true;
    else if (fv == 0)
        outw = false;
    else
        outw = abs(fv) > abs(gv);

    Rat df, dg;
    if (!in.w_chart) {
        df = eval_coeffs(map.F().derivative_z0(), l0, l1);
        dg = eval_coeffs(map.G().derivative_z0(), l0, l1);
    } else {
        df = eval_coeffs(map.F().derivative_z1(), l0, l1);
        dg = eval_coeffs(map.G().derivative_z1(), l0, l1);
    }
    StepQ s;
    if (!outw) {
        s.out = {fv / gv, false};
        s.deriv = (df * gv - fv * dg) / (gv * gv);
    } else {
        s.out = {gv / fv, true};
        s.deriv = (dg * fv - gv * df) / (fv * fv);
    }
    return s;
}

std::pair<CBall, CBall> root_lift(const CertifiedRoot& r) {
    if (r.at_infinity) return {CBall::of_int(1), CBall::of_int(0)};
    return {r.disc, CBall::of_int(1)};
}

// true when the two lifts may represent the same projective point
bool maybe_equal(const std::pair<CBall, CBall>& a, const std::pair<CBall, CBall>& b) {
    CBall w = a.first * b.second - a.second * b.first;
    return w.abs_lower() == 0;
}

ChartVal root_chart(const CertifiedRoot& r) {
    if (r.at_infinity) return {CBall::of_int(0), true};
    if (c_abs(r.disc.mid) <= 1) return {r.disc, false};
    return {CBall::of_int(1) / r.disc, true};
}

// contraction disc around the first cycle point certifying local attraction
struct Contraction {
    bool in_w_chart = false;
    Complex center;
    Real radius;
    Real q;
};

std::optional<Contraction> find_contraction(const RationalMap& map, int period,
                                            const ChartVal& at) {
    Real r = Real(1) / 4;
    for (int attempt = 0; attempt < 60; ++attempt, r /= 2) {
        if (r < 4 * at.v.rad) break;
        try {
            ChartVal disc{CBall(at.v.mid, r), at.w_chart};
            RBall dprod{Real(1)};
            for (int i = 0; i < period; ++i) {
                Step s = step_ball(map, disc, i + 1 == period
                                                  ? std::optional<bool>(at.w_chart)
                                                  : std::nullopt);
                dprod = dprod * s.deriv.abs();
                disc = s.out;
            }
            Real q = dprod.upper();
            if (!(q < 1)) continue;
            // displacement of the center under the return map
            ChartVal c{CBall(at.v.mid, at.v.rad), at.w_chart};
            for (int i = 0; i < period; ++i)
                c = step_ball(map, c, i + 1 == period ? std::optional<bool>(at.w_chart)
                                                      : std::nullopt)
                        .out;
            Real disp = (c.v - CBall(at.v.mid)).abs_upper();
            if (disp <= (1 - q) * r) return Contraction{at.w_chart, at.v.mid, r, q};
        } catch (const numeric_error&) {
            continue;  // pole or undecidable chart inside the disc; shrink
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<AttractingCycle> attracting_cycles_arch(const RationalMap& map, int max_period,
                                                    const Real& tol) {
    if (max_period < 1) throw algebra_error("attracting_cycles_arch: max_period < 1");
    if (tol <= 0) throw algebra_error("attracting_cycles_arch: tol <= 0");
    Real target = tol / 16;
    Real cap = pow(Real(2), -48);
    if (target > cap) target = cap;

    std::vector<AttractingCycle> out;
    std::set<ProjPointQ> seen_rational;
    std::vector<std::pair<CBall, CBall>> seen_lifts;  // includes irrational cycles

    auto already = [&](const std::pair<CBall, CBall>& lift) {
        for (const auto& s : seen_lifts)
            if (maybe_equal(lift, s)) return true;
        return false;
    };

    for (int k = 1; k <= max_period; ++k) {
        AlgebraicSet s;
        try {
            s = preperiodicity_set(map, k, 0);
        } catch (const map_error& e) {
            if (e.kind == MapErrorKind::ZeroForm) continue;
            throw;
        }

        // rational cycles, handled exactly
        for (const ProjPointQ& start : s.rational_points()) {
            if (seen_rational.count(start)) continue;
            std::vector<ProjPointQ> cycle{start};
            ProjPointQ cur = map.apply(start);
            while (!(cur == start)) {
                cycle.push_back(cur);
                cur = map.apply(cur);
                if (static_cast<int>(cycle.size()) > k)
                    throw numeric_error("attracting_cycles_arch: non-periodic rational root");
            }
            for (const ProjPointQ& q : cycle) {
                seen_rational.insert(q);
                ChartValQ c = chart_of(q);
                seen_lifts.push_back(lift_of(to_ball(c)));
            }
            ChartValQ c0 = chart_of(start);
            Rat mult = 1;
            ChartValQ cur_c = c0;
            for (size_t i = 0; i < cycle.size(); ++i) {
                StepQ st = step_exact(map, cur_c,
                                      i + 1 == cycle.size() ? std::optional<bool>(c0.w_chart)
                                                            : std::nullopt);
                mult *= st.deriv;
                cur_c = st.out;
            }
            if (abs(mult) >= 1) continue;
            AttractingCycle ac;
            ac.period = static_cast<int>(cycle.size());
            ac.exact = true;
            ac.multiplier_exact = mult;
            Real mr = abs(to_real(mult));
            ac.multiplier_abs = RBall(mr, (mr + 1) * round_eps());
            ac.rational_points = cycle;
            for (const ProjPointQ& q : cycle) {
                if (q.is_infinity())
                    ac.points.push_back({CBall(), true});
                else
                    ac.points.push_back({CBall::of_rat(q.affine()), false});
            }
            out.push_back(std::move(ac));
        }

        // remaining (irrational) cycles via certified root discs
        auto roots = complex_roots_certified(s.form(), target);
        std::vector<bool> used(roots.size(), false);
        auto match = [&](const std::pair<CBall, CBall>& lift) -> size_t {
            size_t found = roots.size();
            for (size_t j = 0; j < roots.size(); ++j) {
                if (!maybe_equal(lift, root_lift(roots[j]))) continue;
                if (found != roots.size())
                    throw numeric_error("attracting_cycles_arch: ambiguous orbit match");
                found = j;
            }
            if (found == roots.size())
                throw numeric_error("attracting_cycles_arch: orbit left the root set");
            return found;
        };
        for (size_t i = 0; i < roots.size(); ++i) {
            if (used[i] || already(root_lift(roots[i]))) continue;
            std::vector<size_t> cyc{i};
            ChartVal c0 = root_chart(roots[i]);
            ChartVal cur = c0;
            RBall mult{Real(1)};
            for (int step = 1; step <= k; ++step) {
                Step st = step_ball(map, cur,
                                    step == k ? std::optional<bool>(c0.w_chart) : std::nullopt);
                mult = mult * st.deriv.abs();
                cur = st.out;
                size_t j = match(lift_of(cur));
                if (j == i) break;
                cyc.push_back(j);
            }
            for (size_t j : cyc) {
                used[j] = true;
                seen_lifts.push_back(root_lift(roots[j]));
            }
            if (static_cast<int>(cyc.size()) != k) continue;  // lower period, seen earlier
            if (!(mult.upper() < 1)) continue;
            AttractingCycle ac;
            ac.period = k;
            ac.multiplier_abs = mult;
            for (size_t j : cyc) ac.points.push_back(roots[j]);
            out.push_back(std::move(ac));
        }
    }
    return out;
}

BasinCertificate basin_certificate_arch(const RationalMap& map, const ProjPointQ& p,
                                        const Real& tol, int budget, int max_period) {
    BasinCertificate cert;
    std::vector<AttractingCycle> cycles = attracting_cycles_arch(map, max_period, tol);
    if (cycles.empty()) {
        cert.note = "no attracting cycle found up to the period bound";
        return cert;
    }
    struct Disc {
        Contraction c;
        int period;
    };
    std::vector<Disc> discs;
    for (const auto& cyc : cycles) {
        ChartVal at = cyc.exact ? to_ball(chart_of(cyc.rational_points[0]))
                                : root_chart(cyc.points[0]);
        if (auto c = find_contraction(map, cyc.period, at)) discs.push_back({*c, cyc.period});
    }
    if (discs.empty()) {
        cert.note = "no contraction disc certified around the attracting cycles";
        return cert;
    }

    ChartVal cur = to_ball(chart_of(p));
    for (int step = 0; step <= budget; ++step) {
        for (const Disc& d : discs) {
            ChartVal probe = cur;
            if (probe.w_chart != d.c.in_w_chart) {
                if (probe.v.contains_zero()) continue;
                probe = {CBall::of_int(1) / probe.v, !probe.w_chart};
            }
            Real dist = (probe.v - CBall(d.c.center)).abs_upper();
            if (dist <= d.c.radius) {
                cert.certified = true;
                cert.period = d.period;
                cert.in_w_chart = d.c.in_w_chart;
                cert.center = d.c.center;
                cert.radius = d.c.radius;
                cert.contraction = d.c.q;
                cert.steps = step;
                cert.note = "orbit entered a verified contraction disc";
                return cert;
            }
        }
        if (step == budget) break;
        try {
            cur = step_ball(map, cur).out;
        } catch (const numeric_error&) {
            cert.note = "orbit evaluation lost precision before certification";
            return cert;
        }
        if (cur.v.rad > Real(1) / 4) {
            cert.note = "orbit enclosure degraded before certification";
            return cert;
        }
    }
    cert.note = "iteration budget exhausted without entering a contraction disc";
    return cert;
}

FatouReport totally_fatou_report(const RationalMap& map, const ProjPointQ& p,
                                 const Int& prime_budget, const Real& tol) {
    FatouReport rep;
    std::set<Int> bad = bad_primes(map);
    for (Int q = 2; q <= prime_budget; ++q) {
        if (!is_prime(q)) continue;
        FatouReport::Entry e;
        if (bad.count(q)) {
            e.certified = false;
            e.note = "bad reduction; no certificate issued";
        } else {
            e.certified = true;
            e.note = "good reduction";
        }
        rep.per_place[Place::prime(q)] = e;
    }
    for (const Int& q : bad) {
        if (q <= prime_budget) continue;
        rep.per_place[Place::prime(q)] = {false, "bad reduction; no certificate issued"};
    }

    BasinCertificate b = basin_certificate_arch(map, p, tol);
    rep.per_place[Place::arch()] = {b.certified, b.note};
    return rep;
}

}  // namespace dynheight
