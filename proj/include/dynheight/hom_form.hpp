#ifndef DYNHEIGHT_HOM_FORM_HPP
#define DYNHEIGHT_HOM_FORM_HPP

#include "dynheight/numeric.hpp"

#include <utility>
#include <vector>

namespace dynheight {

// Homogeneous bivariate integer form of degree d.
// coeffs[j] is the coefficient of z0^(d-j) z1^j, so coeffs.size() == d+1.
class HomForm {
public:
    HomForm() : coeffs_{1} {}  // the constant form 1 (degree 0)
    explicit HomForm(std::vector<Int> coeffs);

    // Form with given degree from affine polynomial coefficients in
    // descending powers: num = [a_d, ..., a_0] for a_d z^d + ... + a_0,
    // homogenized to the requested degree.
    static HomForm homogenize(const std::vector<Int>& descending, int degree);

    static HomForm z0();  // the form z0
    static HomForm z1();  // the form z1

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& coeff(int j) const { return coeffs_.at(static_cast<size_t>(j)); }

    bool is_zero() const;

    // first nonzero coefficient = coefficient of the highest z0 power present
    const Int& leading() const;
    // multiplicity of z1 as a factor = multiplicity of the root (1:0),
    // i.e. the number of leading zero coefficients
    int infinity_root_multiplicity() const;
    // multiplicity of z0 as a factor = multiplicity of the root (0:1)
    int zero_root_multiplicity() const;

    Int content() const;  // gcd of coefficients, 0 for the zero form
    Int max_abs_coeff() const;

    // exact evaluation
    Int eval(const Int& a, const Int& b) const;
    Rat eval_affine(const Rat& x) const;  // A(x, 1)
    CBall eval(const CBall& z0, const CBall& z1) const;
    CBall eval_affine(const CBall& x) const;  // A(x, 1)

    // partial derivatives as raw coefficient vectors of degree d-1
    // (may be identically zero, which HomForm itself cannot represent)
    std::vector<Int> derivative_z0() const;
    std::vector<Int> derivative_z1() const;

    // substitution z := M z for an integer 2x2 matrix M = [[a,b],[c,d]]
    HomForm substitute(const Int& a, const Int& b, const Int& c, const Int& d) const;

    bool operator==(const HomForm& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Int> coeffs_;
};

HomForm operator*(const HomForm& a, const HomForm& b);
HomForm operator+(const HomForm& a, const HomForm& b);  // degrees must match
HomForm operator-(const HomForm& a, const HomForm& b);

// evaluation of raw coefficient vectors (HomForm layout, zero allowed)
CBall eval_coeffs(const std::vector<Int>& coeffs, const CBall& z0, const CBall& z1);
Rat eval_coeffs(const std::vector<Int>& coeffs, const Rat& z0, const Rat& z1);

// Exact division; throws if b does not divide a.
HomForm exact_divide(const HomForm& a, const HomForm& b);

// gcd of two forms, primitive and sign-normalized (constant 1 when coprime)
HomForm form_gcd(const HomForm& a, const HomForm& b);

// content and repeated factors removed, leading coefficient positive
HomForm squarefree_primitive_part(const HomForm& a);

// primitive part with positive leading coefficient (multiplicities kept)
HomForm primitive_part(const HomForm& a);

// Homogeneous resultant via fraction-free (Bareiss) elimination of the
// Sylvester matrix.  Zero iff the forms share a projective root.
Int resultant(const HomForm& a, const HomForm& b);

// Integer cofactors (A, B) of degree d-1 with A*F + B*G = Res * z0^(2d-1)
// (side = 0) or = Res * z1^(2d-1) (side = 1).  F, G must have equal degree
// d >= 1 and nonzero resultant.  Coefficient vectors are in the HomForm
// convention for degree d-1; either vector may be identically zero.
struct CofactorPair {
    std::vector<Int> a;
    std::vector<Int> b;
    Int res;
    Int max_abs() const;
};
CofactorPair resultant_cofactors(const HomForm& f, const HomForm& g, int side);

// ---------------------------------------------------------------------
// A rational point of P^1 in normalized coprime coordinates (a : b),
// with b > 0, or b == 0 and a == 1.
class ProjPointQ {
public:
    ProjPointQ() : a_(0), b_(1) {}
    ProjPointQ(Int a, Int b);                 // normalizes
    static ProjPointQ infinity() { return ProjPointQ(1, 0); }
    static ProjPointQ from_affine(const Rat& x);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    bool is_infinity() const { return b_ == 0; }
    Rat affine() const;  // throws at infinity

    bool operator==(const ProjPointQ& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator<(const ProjPointQ& o) const {
        return a_ < o.a_ || (a_ == o.a_ && b_ < o.b_);
    }

    // the linear form with this point as its projective root
    HomForm vanishing_form() const;

private:
    Int a_, b_;
};

struct algebra_error : numeric_error {
    using numeric_error::numeric_error;
};

}  // namespace dynheight

#endif
