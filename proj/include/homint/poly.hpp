#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "homint/integer.hpp"

namespace homint {

using Exponents = std::vector<std::uint32_t>;

// A monomial of fixed total degree. Canonical position among the
// degree-d monomials is graded-lexicographic: for n = 2 the order is
// x^d, x^(d-1) y, ..., y^d.
struct Monomial {
    Exponents exps;

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto e : exps) d += e;
        return d;
    }
};

// Comparator placing the lexicographically larger exponent vector
// first, which for equal degree is the graded-lex column order.
struct GrlexFirst {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return a > b;
    }
};

// All C(n+d-1, n-1) monomials of degree d in n variables, in
// graded-lex order.
std::vector<Monomial> monomials_of_degree(int n, std::uint64_t d);

// Sparse homogeneous multivariate polynomial. Coefficients live in Z,
// or in Z/m when a modulus is attached (then all stored coefficients
// are reduced into [0, m)). Every stored monomial has total degree
// exactly degree(); stored coefficients are never zero; the zero
// polynomial is an empty term map with a nominal degree.
//
// Values are immutable after construction; all operations are pure.
class HomogeneousPoly {
  public:
    using TermMap = std::map<Exponents, Int, GrlexFirst>;

    // Zero polynomial of the given nominal degree.
    HomogeneousPoly(int n, std::uint64_t degree,
                    std::optional<Int> modulus = std::nullopt);

    static HomogeneousPoly from_terms(
        int n, std::uint64_t degree,
        const std::vector<std::pair<Exponents, Int>>& terms,
        std::optional<Int> modulus = std::nullopt);

    static HomogeneousPoly monomial(int n, Exponents exps, Int coeff,
                                    std::optional<Int> modulus = std::nullopt);

    // Linear form c_1 x_1 + ... + c_n x_n.
    static HomogeneousPoly linear(const std::vector<Int>& coeffs,
                                  std::optional<Int> modulus = std::nullopt);

    int var_count() const { return n_; }
    std::uint64_t degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    const std::optional<Int>& modulus() const { return modulus_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool is_constant() const { return degree_ == 0 || is_zero(); }

    Int coeff(const Exponents& e) const;

    // Exact evaluation; result reduced into [0, m) when a modulus is
    // attached. Throws on dimension mismatch.
    Int evaluate(const std::vector<Int>& point) const;

    HomogeneousPoly operator+(const HomogeneousPoly& other) const;
    HomogeneousPoly operator-(const HomogeneousPoly& other) const;
    HomogeneousPoly operator*(const HomogeneousPoly& other) const;
    HomogeneousPoly scale(const Int& c) const;
    HomogeneousPoly negate() const;

    // f^k, k >= 1 (k = 0 rejected: constants are excluded).
    HomogeneousPoly pow(std::uint64_t k) const;

    // Reinterpret mod m (coefficients reduced into [0, m)).
    HomogeneousPoly reduced(const Int& m) const;

    // Drop the modulus tag, keeping the representative coefficients
    // in [0, m). Identity when no modulus is attached.
    HomogeneousPoly lifted() const;

    bool operator==(const HomogeneousPoly& other) const;

  private:
    void insert_term(Exponents e, Int c);
    void check_compatible(const HomogeneousPoly& other, bool same_degree) const;

    int n_;
    std::uint64_t degree_;
    std::optional<Int> modulus_;
    TermMap terms_;
};

}  // namespace homint
