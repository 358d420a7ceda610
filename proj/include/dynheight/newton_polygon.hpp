#ifndef DYNHEIGHT_NEWTON_POLYGON_HPP
#define DYNHEIGHT_NEWTON_POLYGON_HPP

#include "dynheight/hom_form.hpp"

#include <vector>

namespace dynheight {

// p-adic valuations of the roots of a form, read off the lower convex hull
// of the coefficient valuations.  Finite nonzero roots carry a rational
// valuation; roots at (0:1) and (1:0) are counted separately (their
// valuations are +infinity resp. the valuation of a projective point at
// infinity, which has no affine reading).
struct ValuationMultiset {
    std::vector<std::pair<Rat, int>> entries;  // (valuation, multiplicity), sorted
    int zero_roots = 0;                        // multiplicity of the root 0
    int infinity_roots = 0;                    // multiplicity of the root (1:0)

    int total_multiplicity() const;
    // sum of valuations of the finite nonzero roots
    Rat valuation_sum() const;
    // sum over finite nonzero roots of min(0, valuation); zero roots add 0
    Rat min0_sum() const;
};

long valuation(const Int& n, const Int& p);  // v_p(n); throws on n == 0
long valuation_rat(const Rat& q, const Int& p);

bool is_prime(const Int& n);

ValuationMultiset newton_polygon_root_valuations(const HomForm& a, const Int& p);

}  // namespace dynheight

#endif
