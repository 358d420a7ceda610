#include "dynheight/factor.hpp"

#include "dynheight/newton_polygon.hpp"

namespace dynheight {

namespace {

Int pollard_rho(const Int& n) {
    // Brent's variant
    if (n % 2 == 0) return 2;
    Int x = 2, y = 2, c = 1, d = 1;
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        Int saved_c = c;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
        c = saved_c + 1;  // cycle degenerated, retry with a new increment
    }
}

void factor_into(const Int& n, std::map<Int, long>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<Int, long> factorize(const Int& n) {
    if (n == 0) throw numeric_error("factorize: zero");
    std::map<Int, long> out;
    Int m = abs(n);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (m % p == 0) {
            ++out[Int(p)];
            m /= p;
        }
    }
    if (m > 1) factor_into(m, out);
    return out;
}

}  // namespace dynheight
