#ifndef DYNHEIGHT_ROOTS_HPP
#define DYNHEIGHT_ROOTS_HPP

#include "dynheight/hom_form.hpp"

#include <vector>

namespace dynheight {

// One projective root: either the exact point (1:0) or a disc in C that
// contains exactly one root of the source form.
struct CertifiedRoot {
    CBall disc;
    bool at_infinity = false;
};

// All projective roots of a squarefree form as certified discs.
// Refinement continues until every radius is <= target_radius; throws
// numeric_error when the iteration budget is exhausted (signals that the
// working precision must be raised).
std::vector<CertifiedRoot> complex_roots_certified(const HomForm& a,
                                                   const Real& target_radius);

}  // namespace dynheight

#endif
