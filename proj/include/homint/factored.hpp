#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>

#include "homint/integer.hpp"

namespace homint {

class FactorBudgetExceeded : public std::runtime_error {
  public:
    explicit FactorBudgetExceeded(const Int& cofactor)
        : std::runtime_error("factorization budget exceeded on cofactor " +
                             cofactor.get_str()),
          cofactor_(cofactor) {}
    const Int& cofactor() const { return cofactor_; }

  private:
    Int cofactor_;
};

// A positive integer carried with its full prime factorization.
// value == product of p^e over factors; every p is certified prime.
struct FactoredInteger {
    Int value = 1;
    std::map<Int, unsigned> factors;

    static FactoredInteger one() { return FactoredInteger{}; }

    // Multiply in another factored integer (exponent maps merged).
    void multiply(const FactoredInteger& other);
    bool consistent() const;
};

// Deterministic primality test at desk scale (Miller-Rabin with a base
// set proven sufficient below 3.3 * 10^24; BPSW beyond).
bool is_prime(const Int& n);

// Trial division, then Pollard rho (Brent variant) on remaining
// cofactors. Throws FactorBudgetExceeded instead of returning a wrong
// or partial answer.
FactoredInteger factor(const Int& x, std::uint64_t rho_budget = 1u << 24);

// Euler phi from the factorization.
Int totient(const FactoredInteger& a);

// Carmichael exponent lambda(a): least exponent annihilating (Z/a)*.
Int carmichael(const FactoredInteger& a);

// Multiplicative order of u modulo a.value; requires gcd(u, a) = 1.
Int multiplicative_order(const Int& u, const FactoredInteger& a);

}  // namespace homint
