#ifndef DYNHEIGHT_RATIONAL_MAP_HPP
#define DYNHEIGHT_RATIONAL_MAP_HPP

#include "dynheight/hom_form.hpp"

#include <optional>
#include <set>
#include <vector>

namespace dynheight {

enum class MapErrorKind { DegenerateMap, DegreeTooSmall, DegreeMismatch, ZeroForm, Budget };

struct map_error : algebra_error {
    MapErrorKind kind;
    map_error(MapErrorKind k, const std::string& what) : algebra_error(what), kind(k) {}
};

// A morphism P^1 -> P^1 of degree d >= 2 over Q, held as a jointly
// primitive pair of integer forms with nonzero resultant.
class RationalMap {
public:
    // normalizes (joint content, sign); throws map_error
    static RationalMap validate(const HomForm& f, const HomForm& g);
    // from affine numerator/denominator coefficients in descending powers
    static RationalMap from_affine(const std::vector<Int>& num,
                                   const std::vector<Int>& den);

    const HomForm& F() const { return f_; }
    const HomForm& G() const { return g_; }
    int degree() const { return f_.degree(); }
    const Int& res() const { return res_; }

    ProjPointQ apply(const ProjPointQ& p) const;
    // un-normalized lift image (F(a,b), G(a,b))
    std::pair<Int, Int> apply_lift(const Int& a, const Int& b) const;
    std::pair<CBall, CBall> apply_lift(const CBall& a, const CBall& b) const;

    bool operator==(const RationalMap& o) const { return f_ == o.f_ && g_ == o.g_; }

private:
    RationalMap(HomForm f, HomForm g, Int res)
        : f_(std::move(f)), g_(std::move(g)), res_(std::move(res)) {}
    HomForm f_, g_;
    Int res_;
};

// Explicit constants attached to a map, used for rigorous height and
// escape-rate truncation bounds.  All Real fields are safe upper bounds
// at the current working precision.
struct MapBounds {
    Int res;
    Int max_cofactor;  // max |coefficient| over both cofactor identities
    Real c_naive;      // |h(phi(P)) - d h(P)| <= c_naive on P^1(Q)
    Real c_arch;       // |log||Ftilde(u)|| - d log||u||| <= c_arch on C^2\{0}
};

MapBounds map_bounds(const RationalMap& map);

// Galois-stable finite subset of P^1(Qbar): a primitive squarefree form.
class AlgebraicSet {
public:
    AlgebraicSet() = default;  // the empty set (constant form)
    explicit AlgebraicSet(const HomForm& form);
    static AlgebraicSet of_point(const ProjPointQ& p);

    const HomForm& form() const { return form_; }
    int size() const { return form_.degree(); }
    bool contains_infinity() const { return form_.infinity_root_multiplicity() > 0; }

    // rational members, found exactly (rational root extraction)
    std::vector<ProjPointQ> rational_points() const;
    // true when every member is rational (the form splits into linear factors)
    bool all_rational() const;

private:
    HomForm form_;
};

struct OrbitRecord {
    enum class Status { Preperiodic, NotPreperiodic, Undecided };
    Status status = Status::Undecided;
    std::vector<ProjPointQ> points;  // P, phi(P), ... as far as computed
    int tail_length = -1;            // set when preperiodic
    int cycle_length = -1;
    Real height_bound;               // explicit bound h <= bound for preperiodic points
};

// phi^n as a jointly primitive homogeneous pair of degree d^n.
// max_coeff_bits guards against runaway coefficient growth.
std::pair<HomForm, HomForm> iterate_pair(const RationalMap& map, int n,
                                         long max_coeff_bits = 4'000'000);

// Roots of F_m G_n - F_n G_m: the points with phi^m = phi^n, all preperiodic.
AlgebraicSet preperiodicity_set(const RationalMap& map, int m, int n);

std::set<Int> bad_primes(const RationalMap& map);

OrbitRecord decide_preperiodic_rational(const RationalMap& map, const ProjPointQ& p,
                                        int budget = 1000);

// f^{-1} . phi . f for the Moebius map f(z) = (az+b)/(cz+d), det != 0
RationalMap conjugate_by_mobius(const RationalMap& map, const Int& a, const Int& b,
                                const Int& c, const Int& d);

// image of a point under the Moebius map itself
ProjPointQ mobius_apply(const ProjPointQ& p, const Int& a, const Int& b,
                        const Int& c, const Int& d);

}  // namespace dynheight

#endif
