#pragma once

#include <utility>
#include <vector>

#include "homint/factored.hpp"
#include "homint/poly.hpp"

namespace homint {

// Points with entries reduced mod m. Each point must have entries
// generating the unit ideal of Z/m, i.e. gcd(entries, m) = 1.
class ResiduePointSet {
  public:
    static ResiduePointSet make(Int modulus,
                                const std::vector<std::vector<Int>>& points);

    const Int& modulus() const { return modulus_; }
    const std::vector<std::vector<Int>>& points() const { return points_; }
    int dim() const { return n_; }

    ResiduePointSet reduced(const Int& smaller_modulus) const;

  private:
    Int modulus_;
    int n_ = 1;
    std::vector<std::vector<Int>> points_;
};

// Homogeneous g of degree >= 1 over Z/p with g(v) != 0 for every
// v in S. Constructive replacement for prime avoidance: maintain a
// witness for a prefix of the points and repair it with a power-matched
// sum when the next point vanishes.
HomogeneousPoly ff_unit_witness(const Int& p, const ResiduePointSet& S);

// Reinterpret integer-coefficient g mod p^e. No coefficient changes:
// unit mod p already implies unit mod p^e; this asserts and tags it.
HomogeneousPoly lift_through_nilpotent(const HomogeneousPoly& g, const Int& p,
                                       unsigned e, const ResiduePointSet& S);

// Glue witnesses over pairwise coprime moduli into one over the
// product: parts are powered to the lcm of their degrees, then
// coefficients are combined monomial-wise by CRT.
HomogeneousPoly crt_combine(
    const std::vector<std::pair<Int, HomogeneousPoly>>& parts);

// Witness over Z/a for arbitrary a >= 2, via the prime-power
// decomposition of a: finite-field witness, nilpotent lift, CRT glue.
HomogeneousPoly mod_witness(const FactoredInteger& a,
                            const ResiduePointSet& S);

// g^t with t = lcm of the multiplicative orders of the values g(v), so
// every value becomes exactly 1 mod a. t divides lambda(a) <= phi(a).
HomogeneousPoly normalize_to_one(const HomogeneousPoly& g,
                                 const FactoredInteger& a,
                                 const ResiduePointSet& S);

}  // namespace homint
