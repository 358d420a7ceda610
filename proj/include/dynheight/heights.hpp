#ifndef DYNHEIGHT_HEIGHTS_HPP
#define DYNHEIGHT_HEIGHTS_HPP

#include "dynheight/rational_map.hpp"

#include <string>

namespace dynheight {

// A place of Q: the archimedean absolute value or a prime p, normalized
// so the product formula holds with exponent 1.
struct Place {
    bool archimedean = true;
    Int p = 0;

    static Place arch() { return Place{true, 0}; }
    static Place prime(Int q) { return Place{false, std::move(q)}; }

    std::string key() const { return archimedean ? "inf" : p.str(); }
    bool operator<(const Place& o) const {
        if (archimedean != o.archimedean) return archimedean;  // "inf" sorts first
        return p < o.p;
    }
    bool operator==(const Place& o) const {
        return archimedean == o.archimedean && p == o.p;
    }
};

// Local escape rate G_v of a lift.  Non-archimedean values are exact
// rational multiples of log p (error_bound = 0 at good reduction; at bad
// primes the value is an exact partial sum with a rigorous tail bound).
struct EscapeRateResult {
    Real value;
    Real error_bound;
    Place place;
    bool has_exact = false;  // non-archimedean: value == rat_coeff * log p
    Rat rat_coeff = 0;
};

struct CanonicalHeightResult {
    Real value;
    Real error_bound;
    enum class Method { Limit, LocalSum } method;
};

// log max(|a|, |b|) for the normalized coprime representative
Real weil_height_point(const ProjPointQ& p);

// average Weil height of the members of a Galois-stable set, via
// certified complex roots (Mahler-measure form of the height)
RBall weil_height_set(const AlgebraicSet& z, const Real& tol);

// Archimedean escape rate of a lift, with the Euclidean norm.
// The lift is a complex ball pair (exact for integer lifts).
EscapeRateResult escape_rate_arch(const RationalMap& map, const CBall& z0,
                                  const CBall& z1, const Real& tol);

// Scale-invariant archimedean potential eta(u) = G_arch(u) - log||u||.
RBall eta_arch(const RationalMap& map, const CBall& z0, const CBall& z1,
               const Real& tol);

// Exact p-adic escape rate of the coprime lift of a rational point.
// Zero at good-reduction primes; at bad primes an exact valuation
// iteration truncated below tol.
EscapeRateResult escape_rate_padic_rational(const RationalMap& map, const Int& p,
                                            const ProjPointQ& pt, const Real& tol);

// hhat via the defining limit h(phi^n P)/d^n, n chosen from the explicit
// telescoping constant so the truncation error is below tol.
CanonicalHeightResult canonical_height_limit(const RationalMap& map,
                                             const ProjPointQ& pt, const Real& tol);

// hhat as the sum of local escape rates of a coprime lift:
// G_arch + sum over bad primes of G_p.
CanonicalHeightResult canonical_height_local(const RationalMap& map,
                                             const ProjPointQ& pt, const Real& tol);

}  // namespace dynheight

#endif
