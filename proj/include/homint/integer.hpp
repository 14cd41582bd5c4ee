#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace homint {

// Arbitrary-precision integer used everywhere. Arithmetic is exact;
// there is no floating-point fallback anywhere in the library.
using Int = mpz_class;

inline Int int_from_string(const std::string& s) {
    try {
        return Int(s, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
}

// Nonnegative residue of x mod m (m > 0).
inline Int mod_pos(const Int& x, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// g = gcd(a,b) together with s,t such that s*a + t*b = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return g;
}

inline Int gcd_all(const std::vector<Int>& xs) {
    Int g = 0;
    for (const Int& x : xs) g = gcd(g, x);
    return g;
}

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e mod m, m > 0, e >= 0.
inline Int pow_mod(const Int& base, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Inverse of x mod m; throws if gcd(x,m) != 1.
inline Int inv_mod(const Int& x, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("not invertible mod " + m.get_str());
    return r;
}

// Quotient rounded to nearest (ties toward zero); remainder has
// magnitude at most |d|/2. Keeps entries small in gcd elimination.
inline Int div_round(const Int& a, const Int& d) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    // fdiv gives 0 <= r < |d| for d > 0, -|d| < r <= 0 for d < 0; recenter.
    Int twice = 2 * r;
    if (d > 0) {
        if (twice > d) q += 1;
    } else {
        if (twice < d) q += 1;
    }
    return q;
}

}  // namespace homint
