#ifndef DYNHEIGHT_NUMERIC_HPP
#define DYNHEIGHT_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace dynheight {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
// Variable-precision MPFR float; precision is set once per run via
// set_precision_bits() before any Real is constructed.
using Real = boost::multiprecision::mpfr_float;

// Working mantissa precision, in bits.  Default 128.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// Conservative per-operation rounding slack used by the ball types below:
// 2^(6 - precision_bits).  Every mpfr operation is correctly rounded to
// 1/2 ulp, so this overshoots the true rounding error by a wide margin.
Real round_eps();

Real to_real(const Int& n);
Real to_real(const Rat& q);

// ---------------------------------------------------------------------
// Real ball: a value known to lie in [mid - rad, mid + rad].

struct RBall {
    Real mid;
    Real rad;

    RBall() : mid(0), rad(0) {}
    explicit RBall(const Real& m) : mid(m), rad(0) {}
    RBall(const Real& m, const Real& r) : mid(m), rad(r) {}
    static RBall exact(const Real& m) { return RBall(m); }
    static RBall of_int(const Int& n);

    Real upper() const { return mid + rad; }
    Real lower() const { return mid - rad; }
    bool contains_zero() const { return abs(mid) <= rad; }
};

RBall operator+(const RBall& a, const RBall& b);
RBall operator-(const RBall& a, const RBall& b);
RBall operator-(const RBall& a);
RBall operator*(const RBall& a, const RBall& b);
RBall operator/(const RBall& a, const RBall& b);  // throws if b straddles 0
RBall rb_log(const RBall& a);                     // throws if a straddles 0 or a <= 0
RBall rb_sqrt(const RBall& a);
RBall rb_max(const RBall& a, const RBall& b);     // ball enclosure of max
RBall rb_min(const RBall& a, const RBall& b);
RBall rb_scale_pow(const RBall& a, long base, long expo);  // a * base^expo

// ---------------------------------------------------------------------
// Complex midpoint type (std::complex is not usable with mpfr_float).

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Real c_abs(const Complex& a);
Real c_norm2(const Complex& a);  // |a|^2

// ---------------------------------------------------------------------
// Complex ball: disc of radius rad around mid.

struct CBall {
    Complex mid;
    Real rad;

    CBall() : rad(0) {}
    explicit CBall(const Complex& m) : mid(m), rad(0) {}
    CBall(const Complex& m, const Real& r) : mid(m), rad(r) {}
    static CBall of_int(const Int& n);
    static CBall of_rat(const Rat& q);
    static CBall of_real(const Real& r) { return CBall(Complex(r)); }

    RBall abs() const;          // enclosure of |z|
    Real abs_upper() const;
    Real abs_lower() const;     // clamped at 0
    bool contains_zero() const { return abs_lower() == 0; }
};

CBall operator+(const CBall& a, const CBall& b);
CBall operator-(const CBall& a, const CBall& b);
CBall operator-(const CBall& a);
CBall operator*(const CBall& a, const CBall& b);
CBall operator/(const CBall& a, const CBall& b);  // throws if b may contain 0
CBall cb_div_exact(const CBall& a, const Real& s); // s treated as exact scalar
bool cb_overlap(const CBall& a, const CBall& b);
bool cb_disjoint(const CBall& a, const CBall& b);

struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dynheight

#endif
