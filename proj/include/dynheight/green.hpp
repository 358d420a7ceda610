#ifndef DYNHEIGHT_GREEN_HPP
#define DYNHEIGHT_GREEN_HPP

#include "dynheight/heights.hpp"

#include <map>

namespace dynheight {

enum class GreenErrorKind { EqualPoints, SharedPoint, UnsupportedPlacePoint };

struct green_error : algebra_error {
    GreenErrorKind kind;
    green_error(GreenErrorKind k, const std::string& what) : algebra_error(what), kind(k) {}
};

// delta_p(P,Q) = p^{-v_p(wedge)} for normalized coprime lifts (max norm)
Rat proj_metric_padic(const Int& p, const ProjPointQ& P, const ProjPointQ& Q);

// delta_inf = |z0 w1 - z1 w0| / (||z|| ||w||) with the Euclidean norm
RBall proj_metric_arch(const CBall& z0, const CBall& z1, const CBall& w0, const CBall& w1);

RBall proj_metric(const Place& v, const ProjPointQ& P, const ProjPointQ& Q);

// Scale-invariant Green pairing for distinct rational points:
// g(P,Q) = eta_v(P) + eta_v(Q) - log delta_v(P,Q).
// At good-reduction primes this is exactly -log delta_p.
RBall green_pair(const RationalMap& map, const Place& v, const ProjPointQ& P,
                 const ProjPointQ& Q, const Real& tol);

// An exact non-archimedean quantity: coeff * log p.
struct PlaceValue {
    Rat coeff;
    Int p;
};

// Sum over all conjugate pairs of -log delta_p at a good-reduction prime,
// collapsed to v_p(Res(A,B)) * log p for primitive forms.
PlaceValue orbit_green_sum_good_prime(const AlgebraicSet& a, const AlgebraicSet& b,
                                      const Int& p);

struct GammaContribution {
    RBall value;
    bool has_exact = false;  // non-archimedean: value = coeff * log p up to tail
    Rat coeff = 0;
};

// Average Green pairing over all conjugate pairs of Z x Porbit at one place.
GammaContribution gamma_place(const RationalMap& map, const AlgebraicSet& z,
                              const AlgebraicSet& porbit, const Place& v, const Real& tol);

struct GreenReport {
    std::map<Place, RBall> per_place;
    std::map<Place, Rat> exact;  // exact log-p coefficients of non-archimedean entries
    RBall total;
    int set_size = 0;
    int orbit_size = 0;
};

// Assembles the finitely many nonzero place contributions; when Z consists
// of preperiodic points the total equals the average canonical height over
// the points of porbit.
GreenReport gamma_total(const RationalMap& map, const AlgebraicSet& z,
                        const AlgebraicSet& porbit, const Real& tol);

struct IntegralityVerdict {
    bool integral = true;
    std::vector<std::pair<Int, long>> witnesses;  // (prime, valuation of Res)
};

// Z is S-integral with respect to porbit iff no conjugate pair shares a
// residue at any prime outside S: v_p(Res(formZ, formP)) = 0 for p not in S.
IntegralityVerdict s_integral_test(const RationalMap& map, const AlgebraicSet& z,
                                   const AlgebraicSet& porbit, const std::set<Int>& s_primes);

// (1/|Z|) sum over Z-roots of min(F(R), M), where F(R) is the average
// archimedean Green pairing of R against the points of porbit.
RBall truncated_green_average(const RationalMap& map, const AlgebraicSet& z,
                              const AlgebraicSet& porbit, const Real& m, const Real& tol);

}  // namespace dynheight

#endif
