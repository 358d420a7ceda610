#include "dynheight/hom_form.hpp"

#include <algorithm>

namespace dynheight {

namespace {

// strip leading zeros of a univariate coefficient vector (descending powers)
template <typename T>
void strip_leading(std::vector<T>& v) {
    size_t i = 0;
    while (i + 1 < v.size() && v[i] == 0) ++i;
    v.erase(v.begin(), v.begin() + static_cast<long>(i));
}

bool all_zero(const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; });
}

}  // namespace

HomForm::HomForm(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw algebra_error("HomForm: empty coefficient vector");
    if (all_zero(coeffs_)) throw algebra_error("HomForm: zero form");
}

HomForm HomForm::homogenize(const std::vector<Int>& descending, int degree) {
    std::vector<Int> d = descending;
    strip_leading(d);
    if (d.empty() || all_zero(d))
        throw algebra_error("HomForm::homogenize: zero polynomial");
    int pdeg = static_cast<int>(d.size()) - 1;
    if (pdeg > degree) throw algebra_error("HomForm::homogenize: degree too small");
    // a(x) of degree pdeg -> z1^(degree-pdeg) * a(z0/z1) z1^pdeg
    std::vector<Int> c(static_cast<size_t>(degree) + 1, Int(0));
    for (int i = 0; i <= pdeg; ++i)
        c[static_cast<size_t>(degree - pdeg + i)] = d[static_cast<size_t>(i)];
    return HomForm(std::move(c));
}

HomForm HomForm::z0() { return HomForm(std::vector<Int>{1, 0}); }
HomForm HomForm::z1() { return HomForm(std::vector<Int>{0, 1}); }

bool HomForm::is_zero() const { return all_zero(coeffs_); }

const Int& HomForm::leading() const {
    for (const Int& c : coeffs_)
        if (c != 0) return c;
    throw algebra_error("HomForm::leading: zero form");
}

int HomForm::infinity_root_multiplicity() const {
    int k = 0;
    while (coeffs_[static_cast<size_t>(k)] == 0) ++k;
    return k;
}

int HomForm::zero_root_multiplicity() const {
    int k = 0;
    while (coeffs_[coeffs_.size() - 1 - static_cast<size_t>(k)] == 0) ++k;
    return k;
}

Int HomForm::content() const {
    Int g = 0;
    for (const Int& c : coeffs_) g = gcd(g, c);
    return g;
}

Int HomForm::max_abs_coeff() const {
    Int m = 0;
    for (const Int& c : coeffs_) m = std::max(m, Int(abs(c)));
    return m;
}

Int HomForm::eval(const Int& a, const Int& b) const {
    // Horner in a with precomputed powers of b
    int d = degree();
    Int acc = coeffs_[0];
    Int bp = 1;
    std::vector<Int> bpow(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) { bpow[static_cast<size_t>(j)] = bp; bp *= b; }
    acc = 0;
    for (int j = 0; j <= d; ++j) {
        acc = acc * a + coeffs_[static_cast<size_t>(j)] * bpow[static_cast<size_t>(j)];
    }
    return acc;
}

Rat HomForm::eval_affine(const Rat& x) const {
    Rat acc = 0;
    for (const Int& c : coeffs_) acc = acc * x + Rat(c);
    return acc;
}

CBall HomForm::eval(const CBall& a, const CBall& b) const {
    int d = degree();
    std::vector<CBall> bpow(static_cast<size_t>(d) + 1);
    bpow[0] = CBall(Complex(Real(1)));
    for (int j = 1; j <= d; ++j) bpow[static_cast<size_t>(j)] = bpow[static_cast<size_t>(j - 1)] * b;
    CBall acc;
    for (int j = 0; j <= d; ++j) {
        acc = acc * a + CBall::of_int(coeffs_[static_cast<size_t>(j)]) * bpow[static_cast<size_t>(j)];
    }
    return acc;
}

CBall HomForm::eval_affine(const CBall& x) const {
    CBall acc;
    for (const Int& c : coeffs_) acc = acc * x + CBall::of_int(c);
    return acc;
}

std::vector<Int> HomForm::derivative_z0() const {
    int d = degree();
    if (d == 0) throw algebra_error("derivative of constant form");
    std::vector<Int> c(static_cast<size_t>(d), Int(0));
    for (int j = 0; j < d; ++j)
        c[static_cast<size_t>(j)] = coeffs_[static_cast<size_t>(j)] * (d - j);
    return c;
}

std::vector<Int> HomForm::derivative_z1() const {
    int d = degree();
    if (d == 0) throw algebra_error("derivative of constant form");
    std::vector<Int> c(static_cast<size_t>(d), Int(0));
    for (int j = 1; j <= d; ++j)
        c[static_cast<size_t>(j - 1)] = coeffs_[static_cast<size_t>(j)] * j;
    return c;
}

CBall eval_coeffs(const std::vector<Int>& coeffs, const CBall& z0, const CBall& z1) {
    size_t n = coeffs.size();
    std::vector<CBall> zpow(n);
    zpow[0] = CBall(Complex(Real(1)));
    for (size_t j = 1; j < n; ++j) zpow[j] = zpow[j - 1] * z1;
    CBall acc;
    for (size_t j = 0; j < n; ++j)
        acc = acc * z0 + CBall::of_int(coeffs[j]) * zpow[j];
    return acc;
}

Rat eval_coeffs(const std::vector<Int>& coeffs, const Rat& z0, const Rat& z1) {
    size_t n = coeffs.size();
    std::vector<Rat> zpow(n);
    zpow[0] = 1;
    for (size_t j = 1; j < n; ++j) zpow[j] = zpow[j - 1] * z1;
    Rat acc = 0;
    for (size_t j = 0; j < n; ++j)
        acc = acc * z0 + Rat(coeffs[j]) * zpow[j];
    return acc;
}

HomForm HomForm::substitute(const Int& a, const Int& b, const Int& c, const Int& d) const {
    // A(a z0 + b z1, c z0 + d z1)
    int n = degree();
    // powers of the two linear forms
    std::vector<std::vector<Int>> p0(static_cast<size_t>(n) + 1), p1(static_cast<size_t>(n) + 1);
    p0[0] = {Int(1)};
    p1[0] = {Int(1)};
    std::vector<Int> l0{a, b}, l1{c, d};
    auto mul = [](const std::vector<Int>& u, const std::vector<Int>& v) {
        std::vector<Int> w(u.size() + v.size() - 1, Int(0));
        for (size_t i = 0; i < u.size(); ++i)
            for (size_t j = 0; j < v.size(); ++j) w[i + j] += u[i] * v[j];
        return w;
    };
    for (int k = 1; k <= n; ++k) {
        p0[static_cast<size_t>(k)] = mul(p0[static_cast<size_t>(k - 1)], l0);
        p1[static_cast<size_t>(k)] = mul(p1[static_cast<size_t>(k - 1)], l1);
    }
    std::vector<Int> out(static_cast<size_t>(n) + 1, Int(0));
    for (int j = 0; j <= n; ++j) {
        const Int& cj = coeffs_[static_cast<size_t>(j)];
        if (cj == 0) continue;
        std::vector<Int> term = mul(p0[static_cast<size_t>(n - j)], p1[static_cast<size_t>(j)]);
        for (size_t i = 0; i < term.size(); ++i) out[i] += cj * term[i];
    }
    if (all_zero(out)) throw algebra_error("substitute: degenerate substitution");
    return HomForm(std::move(out));
}

HomForm operator*(const HomForm& a, const HomForm& b) {
    std::vector<Int> w(a.coeffs().size() + b.coeffs().size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            w[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return HomForm(std::move(w));
}

HomForm operator+(const HomForm& a, const HomForm& b) {
    if (a.degree() != b.degree()) throw algebra_error("form addition: degree mismatch");
    std::vector<Int> w(a.coeffs());
    for (size_t i = 0; i < w.size(); ++i) w[i] += b.coeffs()[i];
    if (std::all_of(w.begin(), w.end(), [](const Int& c) { return c == 0; }))
        throw algebra_error("form addition: result is the zero form");
    return HomForm(std::move(w));
}

HomForm operator-(const HomForm& a, const HomForm& b) {
    if (a.degree() != b.degree()) throw algebra_error("form subtraction: degree mismatch");
    std::vector<Int> w(a.coeffs());
    for (size_t i = 0; i < w.size(); ++i) w[i] -= b.coeffs()[i];
    if (std::all_of(w.begin(), w.end(), [](const Int& c) { return c == 0; }))
        throw algebra_error("form subtraction: result is the zero form");
    return HomForm(std::move(w));
}

HomForm exact_divide(const HomForm& a, const HomForm& b) {
    int ea = a.infinity_root_multiplicity();
    int eb = b.infinity_root_multiplicity();
    if (eb > ea) throw algebra_error("exact_divide: not divisible (z1 multiplicity)");
    // dehomogenized deconvolution over Q
    std::vector<Rat> num(a.coeffs().begin() + ea, a.coeffs().end());
    std::vector<Rat> den(b.coeffs().begin() + eb, b.coeffs().end());
    if (num.size() < den.size()) throw algebra_error("exact_divide: not divisible (degree)");
    size_t qn = num.size() - den.size() + 1;
    std::vector<Rat> q(qn, Rat(0));
    for (size_t k = 0; k < qn; ++k) {
        q[k] = num[k] / den[0];
        for (size_t j = 0; j < den.size(); ++j) num[k + j] -= q[k] * den[j];
    }
    for (const Rat& r : num)
        if (r != 0) throw algebra_error("exact_divide: nonzero remainder");
    std::vector<Int> qi(qn);
    for (size_t k = 0; k < qn; ++k) {
        if (denominator(q[k]) != 1)
            throw algebra_error("exact_divide: non-integral quotient");
        qi[k] = numerator(q[k]);
    }
    // reassemble with z1 multiplicity ea - eb (leading zero coefficients)
    std::vector<Int> res(static_cast<size_t>(ea - eb), Int(0));
    res.insert(res.end(), qi.begin(), qi.end());
    return HomForm(std::move(res));
}

HomForm primitive_part(const HomForm& a) {
    Int c = a.content();
    std::vector<Int> w(a.coeffs());
    for (Int& x : w) x /= c;
    // sign normalization: leading nonzero coefficient positive
    for (const Int& x : w) {
        if (x != 0) {
            if (x < 0)
                for (Int& y : w) y = -y;
            break;
        }
    }
    return HomForm(std::move(w));
}

namespace {

// univariate gcd over Q, coefficients in descending powers
std::vector<Rat> poly_gcd_q(std::vector<Rat> a, std::vector<Rat> b) {
    auto norm = [](std::vector<Rat>& p) {
        strip_leading(p);
        if (p.empty()) p.assign(1, Rat(0));
    };
    norm(a);
    norm(b);
    auto is_zero_p = [](const std::vector<Rat>& p) {
        return p.size() == 1 && p[0] == 0;
    };
    while (!is_zero_p(b)) {
        // a mod b
        std::vector<Rat> r = a;
        while (!is_zero_p(r) && r.size() >= b.size()) {
            Rat q = r[0] / b[0];
            for (size_t j = 0; j < b.size(); ++j) r[j] -= q * b[j];
            r.erase(r.begin());
            norm(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// to primitive integer vector with positive lead
std::vector<Int> rat_to_primitive(const std::vector<Rat>& p) {
    Int den = 1;
    for (const Rat& r : p) den = lcm(den, denominator(r));
    std::vector<Int> w(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        w[i] = numerator(p[i]) * (den / denominator(p[i]));
    Int g = 0;
    for (const Int& x : w) g = gcd(g, x);
    if (g != 0)
        for (Int& x : w) x /= g;
    if (!w.empty() && w[0] < 0)
        for (Int& x : w) x = -x;
    return w;
}

}  // namespace

HomForm form_gcd(const HomForm& a, const HomForm& b) {
    int ea = a.infinity_root_multiplicity();
    int eb = b.infinity_root_multiplicity();
    int e = std::min(ea, eb);
    std::vector<Rat> pa(a.coeffs().begin() + ea, a.coeffs().end());
    std::vector<Rat> pb(b.coeffs().begin() + eb, b.coeffs().end());
    std::vector<Rat> g = poly_gcd_q(std::move(pa), std::move(pb));
    std::vector<Int> gi = rat_to_primitive(g);
    std::vector<Int> out(static_cast<size_t>(e), Int(0));
    out.insert(out.end(), gi.begin(), gi.end());
    return HomForm(std::move(out));
}

HomForm squarefree_primitive_part(const HomForm& a) {
    HomForm p = primitive_part(a);
    int e = p.infinity_root_multiplicity();
    std::vector<Rat> h(p.coeffs().begin() + e, p.coeffs().end());
    // h is the dehomogenization, degree p.degree() - e, nonzero lead
    if (h.size() > 1) {
        std::vector<Rat> hp(h.size() - 1);
        size_t n = h.size() - 1;
        for (size_t i = 0; i < n; ++i) hp[i] = h[i] * Rat(static_cast<long>(n - i));
        std::vector<Rat> g = poly_gcd_q(h, hp);
        if (g.size() > 1) {
            // divide h by g over Q
            std::vector<Rat> q(h.size() - g.size() + 1, Rat(0));
            std::vector<Rat> r = h;
            for (size_t k = 0; k < q.size(); ++k) {
                q[k] = r[k] / g[0];
                for (size_t j = 0; j < g.size(); ++j) r[k + j] -= q[k] * g[j];
            }
            h = std::move(q);
        }
    }
    std::vector<Int> hi = rat_to_primitive(h);
    std::vector<Int> out(static_cast<size_t>(e > 0 ? 1 : 0), Int(0));
    out.insert(out.end(), hi.begin(), hi.end());
    HomForm result{std::move(out)};
    return primitive_part(result);
}

Int resultant(const HomForm& a, const HomForm& b) {
    int m = a.degree();
    int n = b.degree();
    if (m == 0 && n == 0) return 1;
    if (m == 0) return pow(a.coeffs()[0], static_cast<unsigned>(n));
    if (n == 0) return pow(b.coeffs()[0], static_cast<unsigned>(m));
    int size = m + n;
    std::vector<std::vector<Int>> M(static_cast<size_t>(size),
                                    std::vector<Int>(static_cast<size_t>(size), Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = a.coeffs()[static_cast<size_t>(j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = b.coeffs()[static_cast<size_t>(j)];

    // Bareiss fraction-free elimination
    Int denom = 1;
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (M[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int piv = -1;
            for (int r = k + 1; r < size; ++r)
                if (M[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) { piv = r; break; }
            if (piv < 0) return 0;
            std::swap(M[static_cast<size_t>(k)], M[static_cast<size_t>(piv)]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                Int t = M[static_cast<size_t>(i)][static_cast<size_t>(j)] * M[static_cast<size_t>(k)][static_cast<size_t>(k)]
                      - M[static_cast<size_t>(i)][static_cast<size_t>(k)] * M[static_cast<size_t>(k)][static_cast<size_t>(j)];
                M[static_cast<size_t>(i)][static_cast<size_t>(j)] = t / denom;  // exact by Bareiss
            }
            M[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        denom = M[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    return sign * M[static_cast<size_t>(size - 1)][static_cast<size_t>(size - 1)];
}

Int CofactorPair::max_abs() const {
    Int m = 0;
    for (const Int& c : a) m = std::max(m, Int(abs(c)));
    for (const Int& c : b) m = std::max(m, Int(abs(c)));
    return m;
}

CofactorPair resultant_cofactors(const HomForm& f, const HomForm& g, int side) {
    int d = f.degree();
    if (g.degree() != d || d < 1)
        throw algebra_error("resultant_cofactors: equal degrees >= 1 required");
    Int res = resultant(f, g);
    if (res == 0) throw algebra_error("resultant_cofactors: zero resultant");
    int size = 2 * d;
    // unknowns: alpha_0..alpha_{d-1}, beta_0..beta_{d-1};
    // row k: coefficient of z0^(2d-1-k) z1^k of A*F + B*G
    std::vector<std::vector<Rat>> M(static_cast<size_t>(size),
                                    std::vector<Rat>(static_cast<size_t>(size) + 1, Rat(0)));
    for (int k = 0; k < size; ++k) {
        for (int i = 0; i < d; ++i) {
            int j = k - i;
            if (j >= 0 && j <= d) {
                M[static_cast<size_t>(k)][static_cast<size_t>(i)] = Rat(f.coeffs()[static_cast<size_t>(j)]);
                M[static_cast<size_t>(k)][static_cast<size_t>(d + i)] = Rat(g.coeffs()[static_cast<size_t>(j)]);
            }
        }
    }
    int target = (side == 0) ? 0 : size - 1;
    M[static_cast<size_t>(target)][static_cast<size_t>(size)] = Rat(res);

    // Gaussian elimination with partial (first nonzero) pivoting
    std::vector<int> where(static_cast<size_t>(size), -1);
    int row = 0;
    for (int col = 0; col < size && row < size; ++col) {
        int piv = -1;
        for (int r = row; r < size; ++r)
            if (M[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(row)]);
        Rat inv = Rat(1) / M[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (int c = col; c <= size; ++c) M[static_cast<size_t>(row)][static_cast<size_t>(c)] *= inv;
        for (int r = 0; r < size; ++r) {
            if (r == row) continue;
            Rat factor = M[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (factor == 0) continue;
            for (int c = col; c <= size; ++c)
                M[static_cast<size_t>(r)][static_cast<size_t>(c)] -= factor * M[static_cast<size_t>(row)][static_cast<size_t>(c)];
        }
        where[static_cast<size_t>(col)] = row;
        ++row;
    }
    std::vector<Int> alpha(static_cast<size_t>(d)), beta(static_cast<size_t>(d));
    for (int i = 0; i < size; ++i) {
        if (where[static_cast<size_t>(i)] < 0)
            throw algebra_error("resultant_cofactors: singular system");
        Rat v = M[static_cast<size_t>(where[static_cast<size_t>(i)])][static_cast<size_t>(size)];
        if (denominator(v) != 1)
            throw algebra_error("resultant_cofactors: non-integral cofactor");
        if (i < d) alpha[static_cast<size_t>(i)] = numerator(v);
        else beta[static_cast<size_t>(i - d)] = numerator(v);
    }
    return {std::move(alpha), std::move(beta), res};
}

// ----------------------------------------------------------- ProjPointQ

ProjPointQ::ProjPointQ(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ == 0 && b_ == 0) throw algebra_error("ProjPointQ: (0,0) is not a point");
    Int g = gcd(abs(a_), abs(b_));
    a_ /= g;
    b_ /= g;
    if (b_ < 0 || (b_ == 0 && a_ < 0)) {
        a_ = -a_;
        b_ = -b_;
    }
}

ProjPointQ ProjPointQ::from_affine(const Rat& x) {
    return ProjPointQ(numerator(x), denominator(x));
}

Rat ProjPointQ::affine() const {
    if (b_ == 0) throw algebra_error("ProjPointQ::affine: point at infinity");
    return Rat(a_, b_);
}

HomForm ProjPointQ::vanishing_form() const {
    // root (a : b) -> form b*z0 - a*z1
    if (b_ == 0) return HomForm::z1();
    return primitive_part(HomForm(std::vector<Int>{b_, -a_}));
}

}  // namespace dynheight
