#include "homint/modular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace homint {

ResiduePointSet ResiduePointSet::make(
    Int modulus, const std::vector<std::vector<Int>>& points) {
    if (modulus < 2)
        throw std::invalid_argument("residue point set needs modulus >= 2");
    ResiduePointSet s;
    s.modulus_ = std::move(modulus);
    s.n_ = points.empty() ? 1 : static_cast<int>(points.front().size());
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != s.n_ || p.empty())
            throw std::invalid_argument("residue point set has mixed dimensions");
        std::vector<Int> red;
        Int g = s.modulus_;
        red.reserve(p.size());
        for (const Int& c : p) {
            red.push_back(mod_pos(c, s.modulus_));
            g = gcd(g, red.back());
        }
        if (g != 1)
            throw std::invalid_argument(
                "point entries do not generate the unit ideal mod " +
                s.modulus_.get_str());
        s.points_.push_back(std::move(red));
    }
    return s;
}

ResiduePointSet ResiduePointSet::reduced(const Int& smaller_modulus) const {
    return make(smaller_modulus, points_);
}

namespace {

// Linear form vanishing at w but not at v, over Z/p. Requires v, w
// projectively distinct mod p.
HomogeneousPoly separating_form_mod_p(const std::vector<Int>& v,
                                      const std::vector<Int>& w, const Int& p) {
    int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Int minor = mod_pos(v[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)] -
                                    v[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(i)],
                                p);
            if (minor != 0) {
                std::vector<Int> coeffs(static_cast<std::size_t>(n), Int(0));
                coeffs[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(j)];
                coeffs[static_cast<std::size_t>(j)] =
                    mod_pos(-w[static_cast<std::size_t>(i)], p);
                return HomogeneousPoly::linear(coeffs, p);
            }
        }
    throw std::domain_error("points are proportional mod " + p.get_str());
}

bool proportional_mod_p(const std::vector<Int>& v, const std::vector<Int>& w,
                        const Int& p) {
    int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mod_pos(v[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)] -
                            v[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(i)],
                        p) != 0)
                return false;
    return true;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return a / std::gcd(a, b) * b;
}

}  // namespace

HomogeneousPoly ff_unit_witness(const Int& p, const ResiduePointSet& S) {
    if (!is_prime(p)) throw std::invalid_argument("ff_unit_witness: p not prime");
    if (S.modulus() != p)
        throw std::invalid_argument("ff_unit_witness: point set not reduced mod p");
    int n = S.dim();
    for (const auto& v : S.points()) {
        bool zero = true;
        for (const Int& c : v)
            if (mod_pos(c, p) != 0) zero = false;
        if (zero)
            throw std::domain_error("ff_unit_witness: point is zero mod " +
                                    p.get_str());
    }
    // Work on projective representatives: a witness is nonzero at v iff
    // it is nonzero at every scalar multiple of v.
    std::vector<std::vector<Int>> reps;
    for (const auto& v : S.points()) {
        bool seen = false;
        for (const auto& r : reps)
            if (proportional_mod_p(v, r, p)) seen = true;
        if (!seen) reps.push_back(v);
    }
    if (reps.empty()) {
        Exponents e(static_cast<std::size_t>(n), 0);
        e[0] = 1;
        return HomogeneousPoly::monomial(n, std::move(e), Int(1), p);
    }

    auto coord_form = [&](const std::vector<Int>& v) {
        for (int i = 0; i < n; ++i)
            if (v[static_cast<std::size_t>(i)] != 0) {
                Exponents e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(i)] = 1;
                return HomogeneousPoly::monomial(n, std::move(e), Int(1), p);
            }
        throw std::logic_error("zero point escaped the precondition check");
    };

    HomogeneousPoly u = coord_form(reps[0]);
    for (std::size_t k = 1; k < reps.size(); ++k) {
        const auto& next = reps[k];
        if (u.evaluate(next) != 0) continue;
        // u vanishes at the new point; build h vanishing at all earlier
        // points but not at the new one, then power-match the degrees.
        HomogeneousPoly h = separating_form_mod_p(next, reps[0], p);
        for (std::size_t j = 1; j < k; ++j)
            h = h * separating_form_mod_p(next, reps[j], p);
        std::uint64_t d = lcm_u64(u.degree(), h.degree());
        u = u.pow(d / u.degree()) + h.pow(d / h.degree());
    }
    for (const auto& v : S.points())
        if (u.evaluate(v) == 0)
            throw std::logic_error("ff_unit_witness: construction failed");
    return u;
}

HomogeneousPoly lift_through_nilpotent(const HomogeneousPoly& g, const Int& p,
                                       unsigned e, const ResiduePointSet& S) {
    if (g.modulus())
        throw std::invalid_argument(
            "lift_through_nilpotent expects integer coefficients");
    if (e < 1) throw std::invalid_argument("lift_through_nilpotent: e >= 1");
    for (const auto& v : S.points())
        if (mod_pos(g.evaluate(v), p) == 0)
            throw std::domain_error(
                "lift_through_nilpotent: value not a unit mod " + p.get_str());
    Int pe = pow_ui(p, e);
    HomogeneousPoly lifted = g.reduced(pe);
    for (const auto& v : S.points())
        if (gcd(lifted.evaluate(v), pe) != 1)
            throw std::logic_error("nilpotent lift lost unit-ness");
    return lifted;
}

HomogeneousPoly crt_combine(
    const std::vector<std::pair<Int, HomogeneousPoly>>& parts) {
    if (parts.empty()) throw std::invalid_argument("crt_combine: no parts");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i].second.modulus() || *parts[i].second.modulus() != parts[i].first)
            throw std::invalid_argument("crt_combine: part modulus mismatch");
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (gcd(parts[i].first, parts[j].first) != 1)
                throw std::invalid_argument("crt_combine: moduli not coprime");
    }
    std::uint64_t target = 1;
    for (const auto& [m, g] : parts) {
        if (g.degree() == 0 || g.is_zero())
            throw std::invalid_argument("crt_combine: constant part");
        target = lcm_u64(target, g.degree());
    }
    // Combine left to right; degrees are matched to the running lcm
    // (equal to `target` after the powering below).
    HomogeneousPoly acc = parts[0].second.pow(target / parts[0].second.degree());
    Int acc_mod = parts[0].first;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const Int& m2 = parts[i].first;
        HomogeneousPoly g2 = parts[i].second.pow(target / parts[i].second.degree());
        Int m1 = acc_mod;
        Int m = m1 * m2;
        Int inv = inv_mod(m1, m2);
        HomogeneousPoly out(acc.var_count(), target, m);
        // c = c1 + m1 * ((c2 - c1) * m1^{-1} mod m2)
        std::vector<std::pair<Exponents, Int>> terms;
        auto it1 = acc.terms().begin();
        auto it2 = g2.terms().begin();
        auto emit = [&](const Exponents& e, const Int& c1, const Int& c2) {
            Int c = c1 + m1 * mod_pos((c2 - c1) * inv, m2);
            terms.emplace_back(e, std::move(c));
        };
        GrlexFirst before;
        while (it1 != acc.terms().end() || it2 != g2.terms().end()) {
            if (it2 == g2.terms().end() ||
                (it1 != acc.terms().end() && before(it1->first, it2->first))) {
                emit(it1->first, it1->second, Int(0));
                ++it1;
            } else if (it1 == acc.terms().end() || before(it2->first, it1->first)) {
                emit(it2->first, Int(0), it2->second);
                ++it2;
            } else {
                emit(it1->first, it1->second, it2->second);
                ++it1;
                ++it2;
            }
        }
        acc = HomogeneousPoly::from_terms(acc.var_count(), target, terms, m);
        acc_mod = m;
    }
    return acc;
}

HomogeneousPoly mod_witness(const FactoredInteger& a, const ResiduePointSet& S) {
    if (a.value < 2) throw std::invalid_argument("mod_witness: modulus must be >= 2");
    if (S.modulus() != a.value)
        throw std::invalid_argument("mod_witness: point set not reduced mod a");
    std::vector<std::pair<Int, HomogeneousPoly>> parts;
    for (const auto& [p, e] : a.factors) {
        ResiduePointSet sp = S.reduced(p);
        HomogeneousPoly gp = ff_unit_witness(p, sp);
        Int pe = pow_ui(p, e);
        HomogeneousPoly gpe =
            lift_through_nilpotent(gp.lifted(), p, e, S.reduced(pe));
        parts.emplace_back(pe, std::move(gpe));
    }
    HomogeneousPoly g = crt_combine(parts);
    for (const auto& v : S.points())
        if (gcd(g.evaluate(v), a.value) != 1)
            throw std::logic_error("mod_witness: value not a unit mod a");
    return g;
}

HomogeneousPoly normalize_to_one(const HomogeneousPoly& g,
                                 const FactoredInteger& a,
                                 const ResiduePointSet& S) {
    if (!g.modulus() || *g.modulus() != a.value)
        throw std::invalid_argument("normalize_to_one: modulus mismatch");
    Int t = 1;
    for (const auto& v : S.points()) {
        Int val = g.evaluate(v);
        if (gcd(val, a.value) != 1)
            throw std::domain_error("normalize_to_one: non-unit value");
        t = lcm(t, multiplicative_order(val, a));
    }
    if (t == 1) return g;
    if (!t.fits_ulong_p())
        throw std::overflow_error("normalize_to_one: exponent too large");
    return g.pow(t.get_ui());
}

}  // namespace homint
