#ifndef DYNHEIGHT_FIXTURES_HPP
#define DYNHEIGHT_FIXTURES_HPP

#include "dynheight/rational_map.hpp"

#include <string>
#include <vector>

namespace dynheight::fixtures {

// Built-in maps used throughout the test suite and selectable from the CLI.
RationalMap example1();  // z^2 / (z^2 + 4z + 1), good reduction everywhere
RationalMap example2();  // z^2 - 1
RationalMap example3();  // 2z^2 / (4z^2 + 7z + 1), bad reduction at 2
RationalMap psi();       // (z^2 - z) / 2, conjugate to example3

// Integer Moebius matrix [[a,b],[c,d]] acting as z -> (az+b)/(cz+d).
struct Mobius {
    Int a, b, c, d;
};

// f(z) = (4z + 1)/z; conjugating psi by f yields example3
Mobius example3_conjugator();

RationalMap by_name(const std::string& name);  // throws algebra_error on unknown
std::vector<std::string> names();

}  // namespace dynheight::fixtures

#endif
