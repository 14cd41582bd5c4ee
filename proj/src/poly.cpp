#include "homint/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace homint {

namespace {

void enumerate_monomials(int n, std::uint64_t d, Exponents& cur,
                         std::vector<Monomial>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(static_cast<std::uint32_t>(d));
        out.push_back(Monomial{cur});
        cur.pop_back();
        return;
    }
    for (std::int64_t e = static_cast<std::int64_t>(d); e >= 0; --e) {
        cur.push_back(static_cast<std::uint32_t>(e));
        enumerate_monomials(n, d - static_cast<std::uint64_t>(e), cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, std::uint64_t d) {
    if (n < 1) throw std::invalid_argument("monomials_of_degree: n must be >= 1");
    std::vector<Monomial> out;
    Exponents cur;
    cur.reserve(static_cast<std::size_t>(n));
    enumerate_monomials(n, d, cur, out);
    return out;
}

HomogeneousPoly::HomogeneousPoly(int n, std::uint64_t degree,
                                 std::optional<Int> modulus)
    : n_(n), degree_(degree), modulus_(std::move(modulus)) {
    if (n_ < 1) throw std::invalid_argument("polynomial needs n >= 1 variables");
    if (modulus_ && *modulus_ < 2)
        throw std::invalid_argument("polynomial modulus must be >= 2");
}

void HomogeneousPoly::insert_term(Exponents e, Int c) {
    if (static_cast<int>(e.size()) != n_)
        throw std::invalid_argument("term has wrong number of variables");
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    if (d != degree_)
        throw std::invalid_argument("term degree does not match polynomial degree");
    if (modulus_) c = mod_pos(c, *modulus_);
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(e), std::move(c));
    if (!inserted) throw std::invalid_argument("duplicate monomial in term list");
}

HomogeneousPoly HomogeneousPoly::from_terms(
    int n, std::uint64_t degree,
    const std::vector<std::pair<Exponents, Int>>& terms,
    std::optional<Int> modulus) {
    HomogeneousPoly p(n, degree, std::move(modulus));
    for (const auto& [e, c] : terms) p.insert_term(e, c);
    return p;
}

HomogeneousPoly HomogeneousPoly::monomial(int n, Exponents exps, Int coeff,
                                          std::optional<Int> modulus) {
    std::uint64_t d = 0;
    for (auto e : exps) d += e;
    HomogeneousPoly p(n, d, std::move(modulus));
    p.insert_term(std::move(exps), std::move(coeff));
    return p;
}

HomogeneousPoly HomogeneousPoly::linear(const std::vector<Int>& coeffs,
                                        std::optional<Int> modulus) {
    int n = static_cast<int>(coeffs.size());
    HomogeneousPoly p(n, 1, std::move(modulus));
    for (int i = 0; i < n; ++i) {
        Exponents e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.insert_term(std::move(e), coeffs[static_cast<std::size_t>(i)]);
    }
    return p;
}

Int HomogeneousPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void HomogeneousPoly::check_compatible(const HomogeneousPoly& other,
                                       bool same_degree) const {
    if (n_ != other.n_)
        throw std::invalid_argument("polynomials have different variable counts");
    if (modulus_.has_value() != other.modulus_.has_value() ||
        (modulus_ && *modulus_ != *other.modulus_))
        throw std::invalid_argument("polynomials have different moduli");
    if (same_degree && degree_ != other.degree_)
        throw std::invalid_argument("degree mismatch in add/subtract");
}

Int HomogeneousPoly::evaluate(const std::vector<Int>& point) const {
    if (static_cast<int>(point.size()) != n_)
        throw std::invalid_argument("evaluate: point dimension mismatch");
    Int acc = 0;
    if (n_ == 2) {
        // Terms are stored with the power of x descending, i.e. the
        // y-exponent k ascending. Walk them keeping S = sum of the
        // processed terms scaled so that finishing at k = degree gives
        // the exact value; incremental powers avoid per-term pow on
        // dense high-degree polynomials.
        const Int& vx = point[0];
        const Int& vy = point[1];
        std::uint64_t last_k = 0;
        Int ypow = 1;  // vy^last_k
        for (const auto& [e, c] : terms_) {
            std::uint64_t k = e[1];
            if (k != last_k) {
                acc *= pow_ui(vx, static_cast<unsigned long>(k - last_k));
                ypow *= pow_ui(vy, static_cast<unsigned long>(k - last_k));
                last_k = k;
            }
            acc += c * ypow;
            if (modulus_) acc = mod_pos(acc, *modulus_);
        }
        if (!terms_.empty() && last_k != degree_)
            acc *= pow_ui(vx, static_cast<unsigned long>(degree_ - last_k));
    } else {
        for (const auto& [e, c] : terms_) {
            Int t = c;
            for (int i = 0; i < n_; ++i) {
                if (e[static_cast<std::size_t>(i)] == 0) continue;
                t *= pow_ui(point[static_cast<std::size_t>(i)],
                            e[static_cast<std::size_t>(i)]);
            }
            acc += t;
            if (modulus_) acc = mod_pos(acc, *modulus_);
        }
    }
    if (modulus_) acc = mod_pos(acc, *modulus_);
    return acc;
}

HomogeneousPoly HomogeneousPoly::operator+(const HomogeneousPoly& other) const {
    check_compatible(other, true);
    HomogeneousPoly out(n_, degree_, modulus_);
    out.terms_ = terms_;
    for (const auto& [e, c] : other.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) {
            out.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (modulus_) it->second = mod_pos(it->second, *modulus_);
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

HomogeneousPoly HomogeneousPoly::operator-(const HomogeneousPoly& other) const {
    return *this + other.negate();
}

HomogeneousPoly HomogeneousPoly::negate() const {
    HomogeneousPoly out(n_, degree_, modulus_);
    for (const auto& [e, c] : terms_) {
        Int v = -c;
        if (modulus_) v = mod_pos(v, *modulus_);
        if (v != 0) out.terms_.emplace(e, std::move(v));
    }
    return out;
}

HomogeneousPoly HomogeneousPoly::operator*(const HomogeneousPoly& other) const {
    check_compatible(other, false);
    HomogeneousPoly out(n_, degree_ + other.degree_, modulus_);
    Exponents e(static_cast<std::size_t>(n_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (int i = 0; i < n_; ++i)
                e[static_cast<std::size_t>(i)] =
                    ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
            Int prod = ca * cb;
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                if (modulus_) prod = mod_pos(prod, *modulus_);
                if (prod != 0) out.terms_.emplace(e, std::move(prod));
            } else {
                it->second += prod;
                if (modulus_) it->second = mod_pos(it->second, *modulus_);
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

HomogeneousPoly HomogeneousPoly::scale(const Int& c) const {
    HomogeneousPoly out(n_, degree_, modulus_);
    for (const auto& [e, v] : terms_) {
        Int w = v * c;
        if (modulus_) w = mod_pos(w, *modulus_);
        if (w != 0) out.terms_.emplace(e, std::move(w));
    }
    return out;
}

HomogeneousPoly HomogeneousPoly::pow(std::uint64_t k) const {
    if (k == 0)
        throw std::invalid_argument("pow: exponent must be >= 1 (constant excluded)");
    HomogeneousPoly base = *this;
    std::optional<HomogeneousPoly> acc;
    while (k > 0) {
        if (k & 1) acc = acc ? (*acc * base) : base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return *acc;
}

HomogeneousPoly HomogeneousPoly::reduced(const Int& m) const {
    HomogeneousPoly out(n_, degree_, m);
    for (const auto& [e, c] : terms_) {
        Int v = mod_pos(c, m);
        if (v != 0) out.terms_.emplace(e, std::move(v));
    }
    return out;
}

HomogeneousPoly HomogeneousPoly::lifted() const {
    HomogeneousPoly out(n_, degree_);
    out.terms_ = terms_;
    return out;
}

bool HomogeneousPoly::operator==(const HomogeneousPoly& other) const {
    return n_ == other.n_ && degree_ == other.degree_ &&
           modulus_ == other.modulus_ && terms_ == other.terms_;
}

}  // namespace homint
