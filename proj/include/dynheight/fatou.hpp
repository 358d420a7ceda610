#ifndef DYNHEIGHT_FATOU_HPP
#define DYNHEIGHT_FATOU_HPP

#include "dynheight/heights.hpp"
#include "dynheight/roots.hpp"

#include <map>
#include <string>
#include <vector>

namespace dynheight {

// A periodic cycle with |multiplier| < 1 at the archimedean place.
struct AttractingCycle {
    int period = 0;
    std::vector<CertifiedRoot> points;
    RBall multiplier_abs;               // enclosure of |multiplier|
    bool exact = false;                 // all cycle points rational
    Rat multiplier_exact = 0;           // set when exact
    std::vector<ProjPointQ> rational_points;  // set when exact
};

// Cycles among the roots of the period-k equations for k <= max_period,
// filtered to certified |multiplier| < 1.  Multipliers are chart-aware
// derivative products along the cycle (exact for rational cycles).
std::vector<AttractingCycle> attracting_cycles_arch(const RationalMap& map, int max_period,
                                                    const Real& tol);

// Machine-checkable evidence of attraction: on the disc of the given radius
// around the cycle point (in the stated affine chart, w = 1/z when
// in_w_chart), the return map has |derivative| <= contraction < 1 and maps
// the disc into itself; the orbit of the start point enters the disc after
// `steps` iterations.
struct BasinCertificate {
    bool certified = false;
    int period = 0;
    bool in_w_chart = false;
    Complex center;
    Real radius;
    Real contraction;
    int steps = 0;
    std::string note;
};

BasinCertificate basin_certificate_arch(const RationalMap& map, const ProjPointQ& p,
                                        const Real& tol, int budget = 200, int max_period = 3);

// Per-place Fatou membership certificates for a rational point: good
// reduction certifies every such prime, bad primes are never certified,
// the archimedean place uses the basin certificate.
struct FatouReport {
    struct Entry {
        bool certified = false;
        std::string note;
    };
    std::map<Place, Entry> per_place;
    bool others_certified = true;  // every prime not listed has good reduction
};

FatouReport totally_fatou_report(const RationalMap& map, const ProjPointQ& p,
                                 const Int& prime_budget, const Real& tol);

}  // namespace dynheight

#endif
