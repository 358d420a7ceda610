#ifndef DYNHEIGHT_PREPERIODIC_HPP
#define DYNHEIGHT_PREPERIODIC_HPP

#include "dynheight/green.hpp"

#include <optional>
#include <vector>

namespace dynheight {

// One batch of new preperiodic points: the part of the (m,n) equation's
// root set that did not already appear for earlier parameter pairs.
struct CatalogEntry {
    int m = 0;
    int n = 0;
    AlgebraicSet set;
    int raw_degree = 0;  // degree of the undivided squarefree form
    bool all_integral = false;  // finite points are algebraic integers
};

struct PreperiodicCatalog {
    std::vector<CatalogEntry> entries;
    int cumulative_size = 0;
    bool budget_exceeded = false;  // enumeration stopped early
};

// Emits disjoint Galois-stable sets of preperiodic points for all
// 0 <= n < m <= max_m, (m, n) in lexicographic order with n ascending.
PreperiodicCatalog enumerate_preperiodic_sets(const RationalMap& map, int max_m);

// True when every finite point of the set is an algebraic integer: after
// removing the factor carrying the point at infinity, the dehomogenized
// primitive form is monic up to sign.
bool all_algebraic_integers(const AlgebraicSet& s);

struct IntegerFilterResult {
    std::vector<size_t> integral;      // entry indices whose finite points pass
    std::vector<size_t> non_integral;
};

IntegerFilterResult algebraic_integer_filter(const PreperiodicCatalog& catalog);

struct TrendRow {
    int cumulative_degree = 0;
    RBall truncated_average;
};

// Archimedean truncated Green averages of growing cumulative unions of the
// catalog sets against the orbit point.
std::vector<TrendRow> equidistribution_report(const RationalMap& map, const ProjPointQ& p,
                                              const PreperiodicCatalog& catalog, const Real& m,
                                              const Real& tol);

}  // namespace dynheight

#endif
