#include "dynheight/numeric.hpp"

#include <atomic>
#include <cmath>

namespace dynheight {

namespace {
std::atomic<unsigned> g_bits{128};
}

void set_precision_bits(unsigned bits) {
    if (bits < 64) throw numeric_error("precision must be at least 64 bits");
    g_bits = bits;
    // boost takes decimal digits; round up so we get at least `bits`.
    unsigned digits10 = static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2;
    Real::default_precision(digits10);
}

unsigned precision_bits() { return g_bits.load(); }

Real round_eps() {
    Real e = 1;
    return ldexp(e, 6 - static_cast<int>(g_bits.load()));
}

Real to_real(const Int& n) { return Real(n); }
Real to_real(const Rat& q) { return Real(q); }

// -------------------------------------------------------------- RBall

namespace {
// Padding for one rounded midpoint operation.
Real pad(const Real& mid) { return (abs(mid) + 1) * round_eps(); }
}

RBall RBall::of_int(const Int& n) {
    Real m = to_real(n);
    // mpz -> mpfr conversion rounds; pad unless exact is guaranteed small.
    return RBall(m, abs(m) * round_eps());
}

RBall operator+(const RBall& a, const RBall& b) {
    Real m = a.mid + b.mid;
    return RBall(m, a.rad + b.rad + pad(m));
}

RBall operator-(const RBall& a, const RBall& b) {
    Real m = a.mid - b.mid;
    return RBall(m, a.rad + b.rad + pad(m));
}

RBall operator-(const RBall& a) { return RBall(-a.mid, a.rad); }

RBall operator*(const RBall& a, const RBall& b) {
    Real m = a.mid * b.mid;
    Real r = abs(a.mid) * b.rad + abs(b.mid) * a.rad + a.rad * b.rad;
    return RBall(m, r + pad(m));
}

RBall operator/(const RBall& a, const RBall& b) {
    Real den_lo = abs(b.mid) - b.rad;
    if (den_lo <= 0) throw numeric_error("RBall division by ball containing zero");
    Real m = a.mid / b.mid;
    Real r = (a.rad + abs(m) * b.rad) / den_lo;
    return RBall(m, r + pad(m));
}

RBall rb_log(const RBall& a) {
    Real lo = a.mid - a.rad;
    if (lo <= 0) throw numeric_error("RBall log of non-positive ball");
    Real m = log(a.mid);
    Real r = a.rad / lo;
    return RBall(m, r + pad(m));
}

RBall rb_sqrt(const RBall& a) {
    Real lo = a.mid - a.rad;
    Real hi = a.mid + a.rad;
    if (hi < 0) throw numeric_error("RBall sqrt of negative ball");
    if (lo <= 0) {
        // the argument is nonnegative, so the value lies in [0, sqrt(hi)]
        Real h = sqrt(hi);
        return RBall(h / 2, h / 2 + pad(h));
    }
    Real m = sqrt(a.mid);
    Real r = a.rad / (2 * sqrt(lo));
    return RBall(m, r + pad(m));
}

RBall rb_max(const RBall& a, const RBall& b) {
    Real hi = std::max(a.upper(), b.upper());
    Real lo = std::max(a.lower(), b.lower());
    Real m = (hi + lo) / 2;
    return RBall(m, (hi - lo) / 2 + pad(m));
}

RBall rb_min(const RBall& a, const RBall& b) {
    Real hi = std::min(a.upper(), b.upper());
    Real lo = std::min(a.lower(), b.lower());
    Real m = (hi + lo) / 2;
    return RBall(m, (hi - lo) / 2 + pad(m));
}

RBall rb_scale_pow(const RBall& a, long base, long expo) {
    Real f = pow(Real(base), expo);
    Real m = a.mid * f;
    return RBall(m, a.rad * f + pad(m));
}

// ------------------------------------------------------------ Complex

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Real c_abs(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }
Real c_norm2(const Complex& a) { return a.re * a.re + a.im * a.im; }

// -------------------------------------------------------------- CBall

CBall CBall::of_int(const Int& n) {
    Complex m(to_real(n));
    Real a = boost::multiprecision::abs(m.re);
    return CBall(m, a * round_eps());
}

CBall CBall::of_rat(const Rat& q) {
    Complex m(to_real(q));
    Real a = boost::multiprecision::abs(m.re);
    return CBall(m, (a + 1) * round_eps());
}

RBall CBall::abs() const {
    Real m = c_abs(mid);
    return RBall(m, rad + (m + 1) * round_eps());
}

Real CBall::abs_upper() const { return c_abs(mid) * (1 + round_eps()) + rad; }

Real CBall::abs_lower() const {
    Real v = c_abs(mid) * (1 - round_eps()) - rad;
    return v > 0 ? v : Real(0);
}

CBall operator+(const CBall& a, const CBall& b) {
    Complex m = a.mid + b.mid;
    return CBall(m, a.rad + b.rad + (c_abs(m) + 1) * round_eps());
}

CBall operator-(const CBall& a, const CBall& b) {
    Complex m = a.mid - b.mid;
    return CBall(m, a.rad + b.rad + (c_abs(m) + 1) * round_eps());
}

CBall operator-(const CBall& a) { return CBall(-a.mid, a.rad); }

CBall operator*(const CBall& a, const CBall& b) {
    Complex m = a.mid * b.mid;
    Real r = c_abs(a.mid) * b.rad + c_abs(b.mid) * a.rad + a.rad * b.rad;
    return CBall(m, r + (c_abs(m) + 1) * round_eps());
}

CBall operator/(const CBall& a, const CBall& b) {
    Real den_lo = b.abs_lower();
    if (den_lo <= 0) throw numeric_error("CBall division by ball containing zero");
    Complex m = a.mid / b.mid;
    Real r = (a.rad + c_abs(m) * b.rad) / den_lo;
    return CBall(m, r + (c_abs(m) + 1) * round_eps());
}

CBall cb_div_exact(const CBall& a, const Real& s) {
    if (s == 0) throw numeric_error("CBall division by zero scalar");
    Real as = abs(s);
    Complex m{a.mid.re / s, a.mid.im / s};
    return CBall(m, a.rad / as + (c_abs(m) + 1) * round_eps());
}

bool cb_overlap(const CBall& a, const CBall& b) {
    return c_abs(a.mid - b.mid) <= (a.rad + b.rad) * (1 + round_eps());
}

bool cb_disjoint(const CBall& a, const CBall& b) {
    // certified disjointness: distance strictly exceeds radius sum even
    // after inflating for rounding
    Real d = c_abs(a.mid - b.mid) * (1 - round_eps());
    return d > a.rad + b.rad;
}

}  // namespace dynheight
