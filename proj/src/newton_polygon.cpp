#include "dynheight/newton_polygon.hpp"

namespace dynheight {

int ValuationMultiset::total_multiplicity() const {
    int t = zero_roots + infinity_roots;
    for (const auto& e : entries) t += e.second;
    return t;
}

Rat ValuationMultiset::valuation_sum() const {
    Rat s = 0;
    for (const auto& e : entries) s += e.first * e.second;
    return s;
}

Rat ValuationMultiset::min0_sum() const {
    Rat s = 0;
    for (const auto& e : entries)
        if (e.first < 0) s += e.first * e.second;
    return s;
}

long valuation(const Int& n, const Int& p) {
    if (n == 0) throw algebra_error("valuation of zero");
    Int m = abs(n);
    long v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

long valuation_rat(const Rat& q, const Int& p) {
    return valuation(numerator(q), p) - valuation(denominator(q), p);
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.backend().data(), 40) != 0;
}

ValuationMultiset newton_polygon_root_valuations(const HomForm& a, const Int& p) {
    if (!is_prime(p)) throw algebra_error("newton_polygon_root_valuations: p is not prime");
    ValuationMultiset out;
    out.infinity_roots = a.infinity_root_multiplicity();
    out.zero_roots = a.zero_root_multiplicity();

    // dehomogenize and strip the zero roots: a(x) = sum c_i x^i with c_0 != 0
    int d = a.degree();
    int lo = out.zero_roots;                  // x^lo divides a(x)
    int hi = d - out.infinity_roots;          // degree of a(x)
    if (hi <= lo) return out;                 // no finite nonzero roots

    // points (i, v_p(c_i)) for i = lo..hi; coefficient of x^i is coeffs[d-i]
    std::vector<std::pair<long, long>> pts;
    for (int i = lo; i <= hi; ++i) {
        const Int& c = a.coeff(d - i);
        if (c != 0) pts.emplace_back(i, valuation(c, p));
    }
    // lower convex hull, left to right (monotone chain on the lower side)
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& q1 = hull[hull.size() - 2];
            auto& q2 = hull[hull.size() - 1];
            // keep q2 only if it is strictly below segment q1--pt
            if ((q2.second - q1.second) * (pt.first - q1.first) >=
                (pt.second - q1.second) * (q2.first - q1.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    // slopes: segment from (i1,v1) to (i2,v2) gives i2-i1 roots of
    // valuation -(v2-v1)/(i2-i1)
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        long di = hull[k + 1].first - hull[k].first;
        long dv = hull[k + 1].second - hull[k].second;
        out.entries.emplace_back(Rat(-dv, di), static_cast<int>(di));
    }
    return out;
}

}  // namespace dynheight
