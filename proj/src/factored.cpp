#include "homint/factored.hpp"

#include <algorithm>
#include <vector>

namespace homint {

void FactoredInteger::multiply(const FactoredInteger& other) {
    value *= other.value;
    for (const auto& [p, e] : other.factors) factors[p] += e;
}

bool FactoredInteger::consistent() const {
    Int prod = 1;
    for (const auto& [p, e] : factors) prod *= pow_ui(p, e);
    return prod == value;
}

namespace {

bool miller_rabin_witness(const Int& n, const Int& base) {
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    Int x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = mod_pos(x * x, n);
        if (x == n - 1) return false;
    }
    return true;  // base proves n composite
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const unsigned long small_primes[] = {2,  3,  5,  7,  11, 13,
                                                 17, 19, 23, 29, 31, 37};
    for (unsigned long p : small_primes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    // The 12 bases above are a proven witness set below 3.317e24, far
    // past anything this library factors at desk scale.
    static const Int deterministic_bound("3317044064679887385961981");
    if (n < deterministic_bound) {
        for (unsigned long b : small_primes)
            if (miller_rabin_witness(n, Int(b))) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

// Brent-cycle Pollard rho; returns a nontrivial factor of odd
// composite n or throws when the iteration budget runs out.
Int pollard_rho(const Int& n, std::uint64_t budget) {
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int saved_y = y;
        std::uint64_t steps = 0;
        unsigned long power = 1, lam = 0;
        Int q = 1;
        while (d == 1) {
            if (steps++ > budget) throw FactorBudgetExceeded(n);
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
                saved_y = y;
            }
            y = mod_pos(y * y + c, n);
            ++lam;
            q = mod_pos(q * (x > y ? x - y : y - x), n);
            if (lam % 64 == 0 || lam == power) {
                d = gcd(q, n);
                if (d == n) break;
            }
        }
        if (d == n) {
            // Batch gcd overshot; redo this cycle one step at a time.
            y = saved_y;
            d = 1;
            while (d == 1) {
                if (steps++ > budget) throw FactorBudgetExceeded(n);
                y = mod_pos(y * y + c, n);
                d = gcd(n, x > y ? x - y : y - x);
            }
        }
        if (d != n && d != 1) return d;
        // Cycle degenerated; retry with the next polynomial offset.
    }
}

void factor_into(const Int& x, std::map<Int, unsigned>& out,
                 std::uint64_t budget) {
    if (x == 1) return;
    if (is_prime(x)) {
        out[x] += 1;
        return;
    }
    Int d = pollard_rho(x, budget);
    factor_into(d, out, budget);
    factor_into(x / d, out, budget);
}

}  // namespace

FactoredInteger factor(const Int& x, std::uint64_t rho_budget) {
    if (x < 1) throw std::invalid_argument("factor: input must be positive");
    FactoredInteger f;
    f.value = x;
    Int rest = x;
    for (unsigned long p = 2; p < 100000 && rest > 1; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            f.factors[Int(p)] += 1;
            rest /= p;
        }
    }
    if (rest > 1) factor_into(rest, f.factors, rho_budget);
    return f;
}

Int totient(const FactoredInteger& a) {
    Int t = 1;
    for (const auto& [p, e] : a.factors) t *= pow_ui(p, e - 1) * (p - 1);
    return t;
}

Int carmichael(const FactoredInteger& a) {
    Int l = 1;
    for (const auto& [p, e] : a.factors) {
        Int lp;
        if (p == 2) {
            if (e == 1)
                lp = 1;
            else if (e == 2)
                lp = 2;
            else
                lp = pow_ui(Int(2), e - 2);
        } else {
            lp = pow_ui(p, e - 1) * (p - 1);
        }
        l = lcm(l, lp);
    }
    return l;
}

Int multiplicative_order(const Int& u, const FactoredInteger& a) {
    const Int& m = a.value;
    if (m == 1) return 1;
    Int uu = mod_pos(u, m);
    if (gcd(uu, m) != 1)
        throw std::domain_error("multiplicative_order: not a unit mod " +
                                m.get_str());
    Int t = carmichael(a);
    FactoredInteger tf = factor(t);
    for (const auto& [q, e] : tf.factors) {
        for (unsigned i = 0; i < e; ++i) {
            Int cand = t / q;
            if (pow_mod(uu, cand, m) == 1)
                t = cand;
            else
                break;
        }
    }
    return t;
}

}  // namespace homint
