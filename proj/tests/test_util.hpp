#ifndef DYNHEIGHT_TEST_UTIL_HPP
#define DYNHEIGHT_TEST_UTIL_HPP

#include "dynheight/hom_form.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace dhtest {

inline dynheight::HomForm hf(std::initializer_list<long> cs) {
    std::vector<dynheight::Int> v;
    for (long c : cs) v.emplace_back(c);
    return dynheight::HomForm(std::move(v));
}

// nonzero random form of the given degree with small coefficients
inline dynheight::HomForm random_form(std::mt19937_64& rng, int degree, long amp = 5) {
    std::uniform_int_distribution<long> dist(-amp, amp);
    for (;;) {
        std::vector<dynheight::Int> v;
        bool nonzero = false;
        for (int j = 0; j <= degree; ++j) {
            long c = dist(rng);
            if (c != 0) nonzero = true;
            v.emplace_back(c);
        }
        if (nonzero) return dynheight::HomForm(std::move(v));
    }
}

}  // namespace dhtest

#endif
