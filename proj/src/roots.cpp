#include "dynheight/roots.hpp"

#include <boost/math/constants/constants.hpp>

namespace dynheight {

namespace {

Complex horner(const std::vector<Real>& c, const Complex& z) {
    Complex acc(c[0]);
    for (size_t i = 1; i < c.size(); ++i) acc = acc * z + Complex(c[i]);
    return acc;
}

}  // namespace

std::vector<CertifiedRoot> complex_roots_certified(const HomForm& a,
                                                   const Real& target_radius) {
    if (target_radius <= 0) throw algebra_error("complex_roots_certified: target_radius <= 0");
    if (!(squarefree_primitive_part(a).degree() == a.degree()))
        throw algebra_error("complex_roots_certified: form is not squarefree");

    std::vector<CertifiedRoot> out;
    int e = a.infinity_root_multiplicity();
    for (int i = 0; i < e; ++i) out.push_back({CBall(), true});

    int d = a.degree();
    size_t n = static_cast<size_t>(d - e);  // degree of the dehomogenization
    if (n == 0) return out;

    // exact integer coefficients of h(x) = a(x,1), descending
    std::vector<Int> hc(a.coeffs().begin() + e, a.coeffs().end());
    if (n == 1) {
        // exact rational root
        Rat r = Rat(-hc[1], hc[0]);
        out.push_back({CBall::of_rat(r), false});
        return out;
    }

    std::vector<Real> c(hc.size()), cd(hc.size() - 1);
    for (size_t i = 0; i < hc.size(); ++i) c[i] = to_real(hc[i]);
    for (size_t i = 0; i + 1 < hc.size(); ++i)
        cd[i] = c[i] * static_cast<long>(n - i);

    // Cauchy bound for initial guesses on a circle
    Real bound = 0;
    for (size_t i = 1; i < c.size(); ++i) bound = std::max(bound, Real(abs(c[i] / c[0])));
    Real r0 = 1 + bound;
    const Real pi = boost::math::constants::pi<Real>();
    std::vector<Complex> z(n);
    for (size_t k = 0; k < n; ++k) {
        Real theta = 2 * pi * (Real(static_cast<long>(k)) + Real(1) / 4) / static_cast<long>(n) + Real(7) / 1000;
        z[k] = Complex(r0 * cos(theta), r0 * sin(theta));
    }

    auto certify = [&](std::vector<CBall>& discs) -> bool {
        // Weierstrass inclusion: every root of h lies in the union of the
        // discs D(z_i, n * |W_i|), W_i = h(z_i) / (lead * prod_{j!=i} (z_i - z_j));
        // pairwise disjoint discs each contain exactly one root.
        discs.clear();
        CBall lead = CBall::of_int(hc[0]);
        for (size_t i = 0; i < n; ++i) {
            CBall num = CBall(Complex(Real(1)));
            for (size_t k = 0; k < hc.size(); ++k) {
                if (k == 0) num = CBall::of_int(hc[0]);
                else num = num * CBall(z[i]) + CBall::of_int(hc[k]);
            }
            CBall den = lead;
            for (size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                den = den * (CBall(z[i]) - CBall(z[j]));
            }
            if (den.abs_lower() == 0) return false;
            CBall w = num / den;
            Real rad = w.abs_upper() * static_cast<long>(n);
            discs.emplace_back(z[i], rad);
        }
        for (size_t i = 0; i < n; ++i) {
            if (discs[i].rad > target_radius) return false;
            for (size_t j = i + 1; j < n; ++j)
                if (!cb_disjoint(discs[i], discs[j])) return false;
        }
        return true;
    };

    std::vector<CBall> discs;
    int max_rounds = 400 + 40 * static_cast<int>(n);
    for (int round = 0; round < max_rounds; ++round) {
        // one Aberth-Ehrlich sweep
        for (size_t i = 0; i < n; ++i) {
            Complex p = horner(c, z[i]);
            Complex dp = horner(cd, z[i]);
            Complex newton = (c_abs(dp) == 0) ? Complex(Real(0)) : p / dp;
            Complex s;
            for (size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                s = s + Complex(Real(1)) / (z[i] - z[j]);
            }
            Complex denom = Complex(Real(1)) - newton * s;
            if (c_abs(denom) == 0) continue;
            z[i] = z[i] - newton / denom;
        }
        if (round >= 3 && round % 2 == 1 && certify(discs)) {
            for (size_t i = 0; i < n; ++i) out.push_back({discs[i], false});
            return out;
        }
    }
    if (certify(discs)) {
        for (size_t i = 0; i < n; ++i) out.push_back({discs[i], false});
        return out;
    }
    throw numeric_error("complex_roots_certified: certification did not converge; raise precision");
}

}  // namespace dynheight
