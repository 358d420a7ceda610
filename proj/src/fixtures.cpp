#include "dynheight/fixtures.hpp"

namespace dynheight::fixtures {

RationalMap example1() { return RationalMap::from_affine({1, 0, 0}, {1, 4, 1}); }

RationalMap example2() { return RationalMap::from_affine({1, 0, -1}, {1}); }

RationalMap example3() { return RationalMap::from_affine({2, 0, 0}, {4, 7, 1}); }

RationalMap psi() { return RationalMap::from_affine({1, -1, 0}, {2}); }

Mobius example3_conjugator() { return Mobius{4, 1, 1, 0}; }

RationalMap by_name(const std::string& name) {
    if (name == "example1") return example1();
    if (name == "example2") return example2();
    if (name == "example3") return example3();
    if (name == "psi") return psi();
    throw algebra_error("unknown fixture: " + name);
}

std::vector<std::string> names() { return {"example1", "example2", "example3", "psi"}; }

}  // namespace dynheight::fixtures
