#include "dynheight/rational_map.hpp"

#include "dynheight/factor.hpp"

#include <algorithm>
#include <map>

namespace dynheight {

namespace {

// joint content of two forms
Int joint_content(const HomForm& f, const HomForm& g) {
    Int c = f.content();
    c = gcd(c, g.content());
    return c;
}

std::pair<HomForm, HomForm> normalize_pair(const HomForm& f, const HomForm& g) {
    Int c = joint_content(f, g);
    std::vector<Int> fc = f.coeffs(), gc = g.coeffs();
    for (Int& x : fc) x /= c;
    for (Int& x : gc) x /= c;
    // sign: first nonzero coefficient of the concatenation positive
    int sign = 0;
    for (const Int& x : fc)
        if (x != 0) { sign = (x > 0) ? 1 : -1; break; }
    if (sign == 0)
        for (const Int& x : gc)
            if (x != 0) { sign = (x > 0) ? 1 : -1; break; }
    if (sign < 0) {
        for (Int& x : fc) x = -x;
        for (Int& x : gc) x = -x;
    }
    return {HomForm(std::move(fc)), HomForm(std::move(gc))};
}

// F(A, B) for a form F of degree d and forms A, B of equal degree
HomForm compose_form(const HomForm& outer, const HomForm& a, const HomForm& b) {
    int d = outer.degree();
    int inner = a.degree();
    size_t out_len = static_cast<size_t>(d * inner) + 1;
    std::vector<Int> acc(out_len, Int(0));
    // powers
    std::vector<HomForm> apow, bpow;
    apow.reserve(static_cast<size_t>(d) + 1);
    bpow.reserve(static_cast<size_t>(d) + 1);
    HomForm one;  // constant 1
    apow.push_back(one);
    bpow.push_back(one);
    for (int k = 1; k <= d; ++k) {
        apow.push_back(apow.back() * a);
        bpow.push_back(bpow.back() * b);
    }
    for (int j = 0; j <= d; ++j) {
        const Int& cj = outer.coeff(j);
        if (cj == 0) continue;
        HomForm term = apow[static_cast<size_t>(d - j)] * bpow[static_cast<size_t>(j)];
        size_t offset = out_len - term.coeffs().size();
        // term has degree d*inner already when both powers nonconstant;
        // constants (degree 0) need explicit alignment
        for (size_t i = 0; i < term.coeffs().size(); ++i)
            acc[i + (term.coeffs().size() == out_len ? 0 : offset)] += cj * term.coeffs()[i];
    }
    if (std::all_of(acc.begin(), acc.end(), [](const Int& x) { return x == 0; }))
        throw algebra_error("compose_form: zero composition");
    return HomForm(std::move(acc));
}

}  // namespace

RationalMap RationalMap::validate(const HomForm& f, const HomForm& g) {
    if (f.degree() != g.degree())
        throw map_error(MapErrorKind::DegreeMismatch, "numerator and denominator degrees differ");
    if (f.degree() < 2)
        throw map_error(MapErrorKind::DegreeTooSmall, "map degree must be at least 2");
    auto [fn, gn] = normalize_pair(f, g);
    Int res = resultant(fn, gn);
    if (res == 0)
        throw map_error(MapErrorKind::DegenerateMap, "resultant vanishes: the pair shares a root");
    return RationalMap(std::move(fn), std::move(gn), std::move(res));
}

RationalMap RationalMap::from_affine(const std::vector<Int>& num, const std::vector<Int>& den) {
    auto eff_deg = [](const std::vector<Int>& v) {
        size_t i = 0;
        while (i < v.size() && v[i] == 0) ++i;
        if (i == v.size()) throw map_error(MapErrorKind::ZeroForm, "zero polynomial");
        return static_cast<int>(v.size() - i) - 1;
    };
    int d = std::max(eff_deg(num), eff_deg(den));
    return validate(HomForm::homogenize(num, d), HomForm::homogenize(den, d));
}

ProjPointQ RationalMap::apply(const ProjPointQ& p) const {
    auto [x, y] = apply_lift(p.a(), p.b());
    return ProjPointQ(x, y);
}

std::pair<Int, Int> RationalMap::apply_lift(const Int& a, const Int& b) const {
    return {f_.eval(a, b), g_.eval(a, b)};
}

std::pair<CBall, CBall> RationalMap::apply_lift(const CBall& a, const CBall& b) const {
    return {f_.eval(a, b), g_.eval(a, b)};
}

MapBounds map_bounds(const RationalMap& map) {
    int d = map.degree();
    auto co0 = resultant_cofactors(map.F(), map.G(), 0);
    auto co1 = resultant_cofactors(map.F(), map.G(), 1);
    Int max_co = std::max(co0.max_abs(), co1.max_abs());
    Int maxc = std::max(map.F().max_abs_coeff(), map.G().max_abs_coeff());

    Real eps = round_eps();
    auto log_up = [&](const Real& x) { return log(x) * (1 + eps) + eps; };

    Real up = log_up(Real(d + 1) * to_real(maxc));
    Real lo = log_up(2 * Real(d) * to_real(max_co));
    MapBounds b;
    b.res = map.res();
    b.max_cofactor = max_co;
    b.c_naive = std::max(std::max(up, lo), Real(0));

    Real up_a = log_up(sqrt(Real(2)) * Real(d + 1) * to_real(maxc));
    Real lo_a = log_up(pow(Real(2), Real(2 * d + 1) / 2) * Real(d) * to_real(max_co) /
                       to_real(Int(abs(map.res()))));
    b.c_arch = std::max(std::max(up_a, lo_a), Real(0));
    return b;
}

AlgebraicSet::AlgebraicSet(const HomForm& form) : form_(squarefree_primitive_part(form)) {}

AlgebraicSet AlgebraicSet::of_point(const ProjPointQ& p) {
    return AlgebraicSet(p.vanishing_form());
}

std::vector<ProjPointQ> AlgebraicSet::rational_points() const {
    std::vector<ProjPointQ> pts;
    if (contains_infinity()) pts.push_back(ProjPointQ::infinity());
    int e = form_.infinity_root_multiplicity();
    int d = form_.degree();
    if (d == e) return pts;
    // rational roots of the dehomogenization: p/q with p | constant, q | lead
    std::vector<Int> h(form_.coeffs().begin() + e, form_.coeffs().end());
    // strip zero root
    if (h.back() == 0) {
        pts.emplace_back(0, 1);
        h.pop_back();
    }
    if (h.size() <= 1) return pts;
    Int lead = h.front(), tail = h.back();
    auto divisors = [](const Int& n) {
        std::vector<Int> divs{1};
        for (const auto& [p, e2] : factorize(n)) {
            size_t cur = divs.size();
            Int pk = 1;
            for (long k = 1; k <= e2; ++k) {
                pk *= p;
                for (size_t i = 0; i < cur; ++i) divs.push_back(divs[i] * pk);
            }
        }
        return divs;
    };
    auto eval_h = [&](const Rat& x) {
        Rat acc = 0;
        for (const Int& c : h) acc = acc * x + Rat(c);
        return acc;
    };
    for (const Int& q : divisors(lead)) {
        for (const Int& p : divisors(tail)) {
            for (int s : {1, -1}) {
                Rat cand(s * p, q);
                if (eval_h(cand) == 0) {
                    ProjPointQ pt = ProjPointQ::from_affine(cand);
                    if (std::find(pts.begin(), pts.end(), pt) == pts.end()) pts.push_back(pt);
                }
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

bool AlgebraicSet::all_rational() const {
    return static_cast<int>(rational_points().size()) == size();
}

std::pair<HomForm, HomForm> iterate_pair(const RationalMap& map, int n, long max_coeff_bits) {
    if (n < 0) throw algebra_error("iterate_pair: negative n");
    HomForm fn = HomForm::z0(), gn = HomForm::z1();
    for (int k = 0; k < n; ++k) {
        HomForm f2 = compose_form(map.F(), fn, gn);
        HomForm g2 = compose_form(map.G(), fn, gn);
        auto [fp, gp] = normalize_pair(f2, g2);
        fn = std::move(fp);
        gn = std::move(gp);
        Int m = std::max(fn.max_abs_coeff(), gn.max_abs_coeff());
        if (static_cast<long>(msb(m)) > max_coeff_bits)
            throw map_error(MapErrorKind::Budget, "iterate_pair: coefficient budget exceeded");
    }
    return {fn, gn};
}

AlgebraicSet preperiodicity_set(const RationalMap& map, int m, int n) {
    if (!(m > n && n >= 0)) throw algebra_error("preperiodicity_set: need m > n >= 0");
    auto [fm, gm] = iterate_pair(map, m);
    auto [fn, gn] = iterate_pair(map, n);
    // Phi = F_m G_n - F_n G_m, degree d^m + d^n; compare on aligned degrees
    HomForm a = fm * gn;
    HomForm b = fn * gm;
    if (a == b)
        throw map_error(MapErrorKind::ZeroForm, "preperiodicity_set: phi^m and phi^n agree as maps");
    return AlgebraicSet(a - b);
}

std::set<Int> bad_primes(const RationalMap& map) {
    std::set<Int> out;
    Int r = abs(map.res());
    if (r == 1) return out;
    for (const auto& [p, e] : factorize(r)) out.insert(p);
    return out;
}

OrbitRecord decide_preperiodic_rational(const RationalMap& map, const ProjPointQ& p, int budget) {
    MapBounds mb = map_bounds(map);
    OrbitRecord rec;
    rec.height_bound = mb.c_naive / (map.degree() - 1);
    auto naive_height = [](const ProjPointQ& q) {
        Int m = std::max(Int(abs(q.a())), Int(abs(q.b())));
        return log(to_real(m));
    };
    std::map<ProjPointQ, int> seen;
    ProjPointQ cur = p;
    for (int k = 0; k <= budget; ++k) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            rec.status = OrbitRecord::Status::Preperiodic;
            rec.tail_length = it->second;
            rec.cycle_length = k - it->second;
            return rec;
        }
        if (naive_height(cur) > rec.height_bound) {
            // any iterate above the bound cannot be preperiodic, hence P is not
            rec.points.push_back(cur);
            rec.status = OrbitRecord::Status::NotPreperiodic;
            return rec;
        }
        seen[cur] = k;
        rec.points.push_back(cur);
        cur = map.apply(cur);
    }
    rec.status = OrbitRecord::Status::Undecided;
    return rec;
}

RationalMap conjugate_by_mobius(const RationalMap& map, const Int& a, const Int& b,
                                const Int& c, const Int& d) {
    if (a * d - b * c == 0) throw algebra_error("conjugate_by_mobius: singular matrix");
    HomForm fm = map.F().substitute(a, b, c, d);
    HomForm gm = map.G().substitute(a, b, c, d);
    // apply adj(M) = [[d,-b],[-c,a]] to the image pair
    std::vector<Int> fc(fm.coeffs().size()), gc(fm.coeffs().size());
    for (size_t i = 0; i < fc.size(); ++i) {
        fc[i] = d * fm.coeffs()[i] - b * gm.coeffs()[i];
        gc[i] = -c * fm.coeffs()[i] + a * gm.coeffs()[i];
    }
    return RationalMap::validate(HomForm(std::move(fc)), HomForm(std::move(gc)));
}

ProjPointQ mobius_apply(const ProjPointQ& p, const Int& a, const Int& b,
                        const Int& c, const Int& d) {
    return ProjPointQ(a * p.a() + b * p.b(), c * p.a() + d * p.b());
}

}  // namespace dynheight
