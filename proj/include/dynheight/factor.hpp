#ifndef DYNHEIGHT_FACTOR_HPP
#define DYNHEIGHT_FACTOR_HPP

#include "dynheight/numeric.hpp"

#include <map>

namespace dynheight {

// Prime factorization of |n|, n != 0.  Trial division + Pollard rho;
// sized for resultants of desk-scale maps.
std::map<Int, long> factorize(const Int& n);

}  // namespace dynheight

#endif
