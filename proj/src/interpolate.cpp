#include "homint/interpolate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace homint {

InterpolationInstance InterpolationInstance::make(std::vector<Point> pts, int n,
                                                  std::vector<Int> targets) {
    if (pts.size() != targets.size())
        throw std::invalid_argument("instance: points/targets length mismatch");
    InterpolationInstance inst;
    inst.points = PointSet::canonicalize(std::move(pts), n);
    inst.targets = std::move(targets);
    return inst;
}

InterpolationInstance InterpolationInstance::all_ones(std::vector<Point> pts,
                                                      int n) {
    std::vector<Int> ones(pts.size(), Int(1));
    return make(std::move(pts), n, std::move(ones));
}

IntMatrix eval_matrix(const std::vector<Point>& points, std::uint64_t d,
                      const std::optional<Int>& modulus) {
    if (points.empty()) throw std::invalid_argument("eval_matrix: no points");
    int n = points.front().dim();
    std::vector<Monomial> mons = monomials_of_degree(n, d);
    IntMatrix M(static_cast<long>(points.size()), static_cast<long>(mons.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& c = points[i].coords;
        // Per-variable power tables for this row.
        std::vector<std::vector<Int>> pw(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& tab = pw[static_cast<std::size_t>(v)];
            tab.resize(static_cast<std::size_t>(d) + 1);
            tab[0] = 1;
            for (std::uint64_t k = 1; k <= d; ++k) {
                tab[k] = tab[k - 1] * c[static_cast<std::size_t>(v)];
                if (modulus) tab[k] = mod_pos(tab[k], *modulus);
            }
        }
        for (std::size_t j = 0; j < mons.size(); ++j) {
            Int e = 1;
            for (int v = 0; v < n; ++v) {
                e *= pw[static_cast<std::size_t>(v)][mons[j].exps[static_cast<std::size_t>(v)]];
                if (modulus) e = mod_pos(e, *modulus);
            }
            M.at(static_cast<long>(i), static_cast<long>(j)) = std::move(e);
        }
    }
    return M;
}

namespace {

HomogeneousPoly poly_from_solution(int n, std::uint64_t d,
                                   const std::vector<Monomial>& mons,
                                   const std::vector<Int>& coeffs,
                                   const std::optional<Int>& modulus) {
    std::vector<std::pair<Exponents, Int>> terms;
    for (std::size_t j = 0; j < mons.size(); ++j)
        if (coeffs[j] != 0) terms.emplace_back(mons[j].exps, coeffs[j]);
    return HomogeneousPoly::from_terms(n, d, terms, modulus);
}

}  // namespace

FeasibilityResult feasible_degree(const InterpolationInstance& inst,
                                  std::uint64_t d) {
    if (d < 1) throw std::invalid_argument("feasible_degree: d >= 1 required");
    const auto& pts = inst.points.originals();
    IntMatrix M = eval_matrix(pts, d);
    detail::SnfCore core = detail::snf_core(M, true);
    std::vector<Int> c = core.U.apply(inst.targets);
    long m = std::min(M.rows, M.cols);
    long fail = -1;
    for (long k = 0; k < M.rows && fail < 0; ++k) {
        const Int& dk = k < m ? core.D.at(k, k) : Int(0);
        const Int& ck = c[static_cast<std::size_t>(k)];
        if (dk == 0) {
            if (ck != 0) fail = k;
        } else if (ck % dk != 0) {
            fail = k;
        }
    }
    FeasibilityResult res;
    res.degree = d;
    if (fail >= 0) {
        res.verdict = Verdict::infeasible_at_degree;
        SnfCertificate cert;
        cert.degree = d;
        for (long k = 0; k < m; ++k) cert.diagonal.push_back(core.D.at(k, k));
        cert.transformed_target = c;
        cert.failure_index = fail;
        res.certificate = Certificate{std::move(cert)};
        return res;
    }
    std::vector<Int> y(static_cast<std::size_t>(M.cols));
    for (long k = 0; k < m; ++k)
        if (core.D.at(k, k) != 0)
            y[static_cast<std::size_t>(k)] =
                c[static_cast<std::size_t>(k)] / core.D.at(k, k);
    std::vector<Int> x = detail::apply_col_ops(core.ops, std::move(y));
    std::vector<Monomial> mons = monomials_of_degree(inst.points.dim(), d);
    HomogeneousPoly w =
        poly_from_solution(inst.points.dim(), d, mons, x, std::nullopt);
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (w.evaluate(pts[i].coords) != inst.targets[i])
            throw std::logic_error("feasible_degree: witness failed verification");
    res.verdict = Verdict::feasible;
    res.witness = std::move(w);
    return res;
}

FeasibilityResult min_degree(const InterpolationInstance& inst,
                             std::uint64_t max_degree,
                             std::vector<Certificate>* per_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("min_degree: budget must be >= 1");
    for (std::uint64_t d = 1; d <= max_degree; ++d) {
        if (per_degree == nullptr) {
            // Cheap membership probe first; the witness is only
            // assembled for the successful degree.
            IntMatrix M = eval_matrix(inst.points.originals(), d);
            if (!in_image(M, inst.targets)) continue;
            return feasible_degree(inst, d);
        }
        FeasibilityResult r = feasible_degree(inst, d);
        if (r.verdict == Verdict::feasible) return r;
        per_degree->push_back(std::move(*r.certificate));
    }
    FeasibilityResult res;
    res.verdict = Verdict::unknown;
    return res;
}

namespace {

// Everything needed to reason about images of eval matrices mod p.
struct ModpContext {
    Int p;
    int n;
    std::vector<std::vector<Int>> pts;  // reduced mod p
    std::vector<Int> target;            // reduced mod p

    static ModpContext make(const InterpolationInstance& inst, const Int& p) {
        ModpContext ctx;
        ctx.p = p;
        ctx.n = inst.points.dim();
        for (const auto& pt : inst.points.originals()) {
            std::vector<Int> red;
            for (const Int& c : pt.coords) red.push_back(mod_pos(c, p));
            ctx.pts.push_back(std::move(red));
        }
        for (const Int& t : inst.targets) ctx.target.push_back(mod_pos(t, p));
        return ctx;
    }

    bool target_is_zero() const {
        for (const Int& t : target)
            if (t != 0) return false;
        return true;
    }

    // Period of the column multiset: lcm of the orders of the nonzero
    // coordinate residues. Exact periodicity in d holds for
    // d >= (n-1)*T + 1, because adding T to an exponent that is
    // already >= 1 fixes every entry (units by order, zeros stay zero)
    // and any degree-(d+T) exponent vector has a coordinate >= T+1.
    Int period() const {
        FactoredInteger pf = factor(p);
        Int T = 1;
        for (const auto& pt : pts)
            for (const Int& c : pt)
                if (c != 0) T = lcm(T, multiplicative_order(c, pf));
        return T;
    }

    std::vector<std::vector<Int>> columns(std::uint64_t d) const {
        std::vector<Monomial> mons = monomials_of_degree(n, d);
        std::vector<std::vector<Int>> cols;
        cols.reserve(mons.size());
        for (const auto& mon : mons) {
            std::vector<Int> col;
            col.reserve(pts.size());
            for (const auto& pt : pts) {
                Int e = 1;
                for (int v = 0; v < n; ++v) {
                    const Int& base = pt[static_cast<std::size_t>(v)];
                    std::uint32_t k = mon.exps[static_cast<std::size_t>(v)];
                    if (k == 0) continue;
                    e = mod_pos(e * pow_mod(base, Int(k), p), p);
                }
                col.push_back(std::move(e));
            }
            cols.push_back(std::move(col));
        }
        return cols;
    }

    // Is the target in the F_p-span of the degree-d columns?
    bool target_in_image(std::uint64_t d) const {
        std::vector<std::vector<Int>> basis;  // echelonized, with pivot index
        std::vector<std::size_t> pivots;
        auto reduce = [&](std::vector<Int> v) {
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const Int& lead = v[pivots[k]];
                if (lead != 0) {
                    Int factor_ = mod_pos(lead * inv_mod(basis[k][pivots[k]], p), p);
                    for (std::size_t j = 0; j < v.size(); ++j)
                        v[j] = mod_pos(v[j] - factor_ * basis[k][j], p);
                }
            }
            return v;
        };
        for (auto& col : columns(d)) {
            std::vector<Int> r = reduce(std::move(col));
            for (std::size_t j = 0; j < r.size(); ++j)
                if (r[j] != 0) {
                    pivots.push_back(j);
                    basis.push_back(std::move(r));
                    break;
                }
            if (basis.size() == pts.size()) break;  // full span
        }
        std::vector<Int> rt = reduce(target);
        for (const Int& x : rt)
            if (x != 0) return false;
        return true;
    }

    // Distinct columns compared as sets: raising the degree repeats
    // existing columns, so cardinalities differ but the sets agree.
    bool column_set_equal(std::uint64_t d1, std::uint64_t d2) const {
        auto a = columns(d1);
        auto b = columns(d2);
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        return a == b;
    }
};

constexpr std::uint64_t kObstructionColumnCap = 2'000'000;

std::uint64_t monomial_count_capped(int n, std::uint64_t d, std::uint64_t cap) {
    // C(d+n-1, n-1), clamped at cap to avoid overflow.
    Int c = 1;
    for (int i = 1; i <= n - 1; ++i) c = c * Int(d + static_cast<std::uint64_t>(i)) / i;
    if (c > Int(static_cast<unsigned long>(cap))) return cap;
    return c.get_ui();
}

std::optional<PeriodicCertificate> obstruction_at_prime(
    const InterpolationInstance& inst, const Int& p,
    std::uint64_t stabilization_budget) {
    ModpContext ctx = ModpContext::make(inst, p);
    if (ctx.target_is_zero()) return std::nullopt;  // zero is always in the image
    Int T_big = ctx.period();
    if (T_big > stabilization_budget) return std::nullopt;
    std::uint64_t T = T_big.get_ui();
    std::uint64_t d0 = static_cast<std::uint64_t>(ctx.n - 1) * T + 1;
    if (d0 + 2 * T > stabilization_budget) return std::nullopt;
    if (monomial_count_capped(ctx.n, d0 + 2 * T, kObstructionColumnCap) >=
        kObstructionColumnCap)
        return std::nullopt;
    // Periodicity is provable from the orders; still confirm it on a
    // full window by direct multiset comparison.
    for (std::uint64_t d = d0; d < d0 + T; ++d)
        if (!ctx.column_set_equal(d, d + T)) return std::nullopt;

    PeriodicCertificate cert;
    cert.prime = p;
    cert.period = T;
    cert.stabilization_degree = d0;
    for (std::uint64_t d = 1; d < d0; ++d) {
        bool member = ctx.target_in_image(d);
        if (member) return std::nullopt;
        cert.low_degree_checks.emplace_back(d, member);
    }
    for (std::uint64_t d = d0; d < d0 + T; ++d) {
        bool member = ctx.target_in_image(d);
        if (member) return std::nullopt;
        cert.class_checks.emplace_back(d, member);
    }
    return cert;
}

}  // namespace

std::optional<Certificate> periodic_obstruction(
    const InterpolationInstance& inst, const std::vector<Int>& primes,
    std::uint64_t stabilization_budget) {
    for (const Int& p : primes) {
        if (!is_prime(p))
            throw std::invalid_argument("periodic_obstruction: " + p.get_str() +
                                        " is not prime");
        auto cert = obstruction_at_prime(inst, p, stabilization_budget);
        if (cert) return Certificate{std::move(*cert)};
    }
    return std::nullopt;
}

bool replay_certificate(const InterpolationInstance& inst,
                        const Certificate& cert) {
    if (cert.is_snf()) {
        const SnfCertificate& c = cert.snf();
        // The stored data must exhibit the failure...
        if (c.failure_index < 0 ||
            c.failure_index >= static_cast<long>(c.transformed_target.size()))
            return false;
        const Int& ck = c.transformed_target[static_cast<std::size_t>(c.failure_index)];
        Int dk = c.failure_index < static_cast<long>(c.diagonal.size())
                     ? c.diagonal[static_cast<std::size_t>(c.failure_index)]
                     : Int(0);
        bool shows_failure = dk == 0 ? ck != 0 : ck % dk != 0;
        if (!shows_failure) return false;
        // ...and a from-scratch recomputation must agree: same
        // (canonical) SNF diagonal, and the target truly outside the
        // image.
        IntMatrix M = eval_matrix(inst.points.originals(), c.degree);
        detail::SnfCore core = detail::snf_core(M, false);
        long m = std::min(M.rows, M.cols);
        if (static_cast<long>(c.diagonal.size()) != m) return false;
        for (long k = 0; k < m; ++k)
            if (core.D.at(k, k) != c.diagonal[static_cast<std::size_t>(k)])
                return false;
        return !in_image(M, inst.targets);
    }
    const PeriodicCertificate& c = cert.periodic();
    if (!is_prime(c.prime)) return false;
    ModpContext ctx = ModpContext::make(inst, c.prime);
    if (ctx.target_is_zero()) return false;
    Int T_big = ctx.period();
    if (T_big != Int(static_cast<unsigned long>(c.period))) return false;
    std::uint64_t T = c.period;
    std::uint64_t d0 = static_cast<std::uint64_t>(ctx.n - 1) * T + 1;
    if (c.stabilization_degree != d0) return false;
    for (std::uint64_t d = d0; d < d0 + T; ++d)
        if (!ctx.column_set_equal(d, d + T)) return false;
    if (c.low_degree_checks.size() != d0 - 1) return false;
    if (c.class_checks.size() != T) return false;
    for (std::uint64_t d = 1; d < d0; ++d)
        if (ctx.target_in_image(d)) return false;
    for (std::uint64_t d = d0; d < d0 + T; ++d)
        if (ctx.target_in_image(d)) return false;
    return true;
}

HomogeneousPoly separating_form(const Point& v, const Point& w) {
    int n = v.dim();
    if (w.dim() != n)
        throw std::invalid_argument("separating_form: dimension mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Int minor = v.coords[static_cast<std::size_t>(i)] * w.coords[static_cast<std::size_t>(j)] -
                        v.coords[static_cast<std::size_t>(j)] * w.coords[static_cast<std::size_t>(i)];
            if (minor != 0) {
                std::vector<Int> coeffs(static_cast<std::size_t>(n), Int(0));
                coeffs[static_cast<std::size_t>(i)] = w.coords[static_cast<std::size_t>(j)];
                coeffs[static_cast<std::size_t>(j)] = -w.coords[static_cast<std::size_t>(i)];
                return HomogeneousPoly::linear(coeffs);
            }
        }
    throw std::domain_error("separating_form: points are scalar multiples");
}

HomogeneousPoly vanishing_poly(const Point& v, const std::vector<Point>& others) {
    if (others.empty()) return unit_linear_form(v);
    HomogeneousPoly f = separating_form(v, others.front());
    for (std::size_t i = 1; i < others.size(); ++i)
        f = f * separating_form(v, others[i]);
    return f;
}

HomogeneousPoly unit_linear_form(const Point& v) {
    int n = v.dim();
    std::vector<Int> coeffs(static_cast<std::size_t>(n), Int(0));
    Int g = 0;
    for (int i = 0; i < n; ++i) {
        Int s, t;
        Int g2 = ext_gcd(g, v.coords[static_cast<std::size_t>(i)], s, t);
        for (int j = 0; j < i; ++j) coeffs[static_cast<std::size_t>(j)] *= s;
        coeffs[static_cast<std::size_t>(i)] = t;
        g = g2;
    }
    if (g != 1)
        throw std::domain_error("unit_linear_form: entries are not coprime");
    return HomogeneousPoly::linear(coeffs);
}

namespace {

// Degree-m staircase polynomial in two variables with exact value 1 at
// (va, vb), gcd(va, vb) = 1, |va| > |vb| >= 1. Coefficients stay
// small: each is reduced centered mod va, and the final remainder is
// geometrically damped by |vb/va| < 1.
std::vector<Int> staircase_coeffs(const Int& va, const Int& vb,
                                  std::uint64_t m) {
    std::vector<Int> c(static_cast<std::size_t>(m) + 1);
    Int abs_a = abs(va);
    Int r = 1;
    Int vb_pow = pow_ui(vb, static_cast<unsigned long>(m));
    for (std::uint64_t k = m; k >= 1; --k) {
        // Pick c_k with c_k * vb^k == r (mod va), centered.
        Int ck = mod_pos(r * inv_mod(vb_pow, abs_a), abs_a);
        if (2 * ck > abs_a) ck -= abs_a;
        c[static_cast<std::size_t>(k)] = ck;
        Int rem = r - ck * vb_pow;
        r = rem / va;  // exact
        if (rem != r * va) throw std::logic_error("staircase: inexact step");
        vb_pow /= vb;
    }
    c[0] = r;
    return c;
}

}  // namespace

HomogeneousPoly unit_value_poly(const Point& v, std::uint64_t degree) {
    int n = v.dim();
    if (!v.has_coprime_entries())
        throw std::domain_error("unit_value_poly: entries are not coprime");
    if (degree == 0) {
        return HomogeneousPoly::monomial(n, Exponents(static_cast<std::size_t>(n), 0),
                                         Int(1));
    }
    // A +-1 coordinate gives a single monomial.
    for (int i = 0; i < n; ++i) {
        const Int& ci = v.coords[static_cast<std::size_t>(i)];
        if (ci == 1 || ci == -1) {
            Exponents e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(degree);
            Int coeff = (ci == -1 && degree % 2 == 1) ? Int(-1) : Int(1);
            return HomogeneousPoly::monomial(n, std::move(e), coeff);
        }
    }
    // A coprime pair of coordinates gives a two-variable staircase.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Int& a = v.coords[static_cast<std::size_t>(i)];
            const Int& b = v.coords[static_cast<std::size_t>(j)];
            if (b == 0 || gcd(a, b) != 1) continue;
            if (!(abs(a) > abs(b))) continue;
            std::vector<Int> cs = staircase_coeffs(a, b, degree);
            std::vector<std::pair<Exponents, Int>> terms;
            for (std::uint64_t k = 0; k <= degree; ++k) {
                if (cs[static_cast<std::size_t>(k)] == 0) continue;
                Exponents e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(i)] =
                    static_cast<std::uint32_t>(degree - k);
                e[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(k);
                terms.emplace_back(std::move(e), cs[static_cast<std::size_t>(k)]);
            }
            return HomogeneousPoly::from_terms(n, degree, terms);
        }
    // No coprime pair (e.g. (6,10,15)): peel the last nonzero
    // coordinate c and recurse on the rest, whose gcd g is coprime to
    // c; a staircase in the virtual pair (g, c) is re-homogenized by
    // value-g^j polynomials from the recursion.
    int last = -1;
    for (int i = n - 1; i >= 0; --i)
        if (v.coords[static_cast<std::size_t>(i)] != 0) {
            last = i;
            break;
        }
    std::vector<Int> rest;
    for (int i = 0; i < n; ++i)
        if (i != last) rest.push_back(v.coords[static_cast<std::size_t>(i)]);
    Int g = gcd_all(rest);
    const Int& c = v.coords[static_cast<std::size_t>(last)];
    if (g == 0 || gcd(g, c) != 1)
        throw std::logic_error("unit_value_poly: decomposition failed");
    Point reduced_rest;
    for (const Int& x : rest) reduced_rest.coords.push_back(x / g);
    const Int& big = abs(g) > abs(c) ? g : c;
    const Int& small = abs(g) > abs(c) ? c : g;
    bool g_is_big = abs(g) > abs(c);
    std::vector<Int> cs = staircase_coeffs(big, small, degree);
    // Term k of the staircase is big^(degree-k) small^k; translate back
    // to powers of g and of the peeled coordinate.
    HomogeneousPoly out(n, degree);
    HomogeneousPoly acc = out;  // zero
    for (std::uint64_t k = 0; k <= degree; ++k) {
        if (cs[static_cast<std::size_t>(k)] == 0) continue;
        std::uint64_t gexp = g_is_big ? degree - k : k;
        std::uint64_t cexp = degree - gexp;
        // W has value g^gexp on the untouched coordinates.
        HomogeneousPoly w_small = unit_value_poly(reduced_rest, gexp);
        // Re-embed into n variables with x_last^cexp attached.
        std::vector<std::pair<Exponents, Int>> terms;
        for (const auto& [e, coeff] : w_small.terms()) {
            Exponents full(static_cast<std::size_t>(n), 0);
            int idx = 0;
            for (int i = 0; i < n; ++i) {
                if (i == last) continue;
                full[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(idx++)];
            }
            full[static_cast<std::size_t>(last)] = static_cast<std::uint32_t>(cexp);
            terms.emplace_back(std::move(full), coeff * cs[static_cast<std::size_t>(k)]);
        }
        acc = acc + HomogeneousPoly::from_terms(n, degree, terms);
    }
    if (acc.evaluate(v.coords) != 1)
        throw std::logic_error("unit_value_poly: verification failed");
    return acc;
}

Int forced_degree_lower_bound(const PointSet& S) {
    const auto& reps = S.representatives();
    Int L = 1;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            const auto& v = reps[i].coords;
            const auto& w = reps[j].coords;
            int n = static_cast<int>(v.size());
            Int g = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    g = gcd(g, v[static_cast<std::size_t>(a)] * w[static_cast<std::size_t>(b)] -
                                   v[static_cast<std::size_t>(b)] * w[static_cast<std::size_t>(a)]);
            if (g <= 1) continue;
            FactoredInteger gf = factor(g);
            for (const auto& [p, e] : gf.factors) {
                Int q = pow_ui(p, e);
                // v == lambda * w (mod q); lambda is a unit because both
                // points have a unit coordinate mod p.
                Int lambda = 0;
                for (int a = 0; a < n; ++a)
                    if (mod_pos(w[static_cast<std::size_t>(a)], p) != 0) {
                        lambda = mod_pos(v[static_cast<std::size_t>(a)] *
                                             inv_mod(w[static_cast<std::size_t>(a)], q),
                                         q);
                        break;
                    }
                FactoredInteger qf;
                qf.value = q;
                qf.factors[p] = e;
                L = lcm(L, multiplicative_order(lambda, qf));
            }
        }
    return L;
}

namespace {

// Solve h(v) == 1 (mod a) for homogeneous h of exactly the given
// degree, over a chosen monomial support. Returns the polynomial mod a
// or nullopt if the target is outside the image on this support.
std::optional<HomogeneousPoly> try_unit_solve(const Int& a,
                                              const std::vector<Point>& reps,
                                              const std::vector<Monomial>& mons,
                                              std::uint64_t d) {
    int n = reps.front().dim();
    long s = static_cast<long>(reps.size());
    long m = static_cast<long>(mons.size());
    IntMatrix M(s, m + s);
    for (long i = 0; i < s; ++i) {
        const auto& c = reps[static_cast<std::size_t>(i)].coords;
        for (long j = 0; j < m; ++j) {
            Int e = 1;
            for (int v = 0; v < n; ++v) {
                std::uint32_t k = mons[static_cast<std::size_t>(j)].exps[static_cast<std::size_t>(v)];
                if (k == 0) continue;
                e = mod_pos(e * pow_mod(mod_pos(c[static_cast<std::size_t>(v)], a), Int(k), a), a);
            }
            M.at(i, j) = std::move(e);
        }
        M.at(i, m + i) = a;  // the mod-a slack column for this row
    }
    std::vector<Int> ones(static_cast<std::size_t>(s), Int(1));
    auto x = solve_diophantine(M, ones);
    if (!x) return std::nullopt;
    std::vector<std::pair<Exponents, Int>> terms;
    for (long j = 0; j < m; ++j) {
        Int cc = mod_pos((*x)[static_cast<std::size_t>(j)], a);
        if (cc != 0) terms.emplace_back(mons[static_cast<std::size_t>(j)].exps, cc);
    }
    HomogeneousPoly h = HomogeneousPoly::from_terms(n, d, terms, a);
    for (const auto& r : reps)
        if (h.evaluate(r.coords) != 1) return std::nullopt;
    return h;
}

std::vector<Monomial> random_monomials(int n, std::uint64_t d, std::size_t count,
                                       std::mt19937_64& rng) {
    std::set<Exponents> seen;
    std::vector<Monomial> out;
    // Always include the pure powers; they anchor the support.
    for (int i = 0; i < n; ++i) {
        Exponents e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(d);
        if (seen.insert(e).second) out.push_back(Monomial{e});
    }
    std::size_t guard = 0;
    while (out.size() < count && guard++ < 64 * count) {
        Exponents e(static_cast<std::size_t>(n), 0);
        std::uint64_t rem = d;
        for (int i = 0; i + 1 < n; ++i) {
            std::uint64_t pick = rng() % (rem + 1);
            e[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(pick);
            rem -= pick;
        }
        e[static_cast<std::size_t>(n - 1)] = static_cast<std::uint32_t>(rem);
        if (seen.insert(e).second) out.push_back(Monomial{e});
    }
    return out;
}

// h with h(v) == 1 (mod a) on all representatives, of degree a small
// multiple of the forced lower bound, found by exact linear algebra
// over Z (with mod-a slack columns).
HomogeneousPoly solve_unit_interpolation(const Int& a,
                                         const std::vector<Point>& reps,
                                         const Int& lower_bound,
                                         std::uint64_t budget) {
    int n = reps.front().dim();
    constexpr std::uint64_t kFullSupportCap = 80000;
    for (unsigned mult = 1; mult <= 64; ++mult) {
        Int D_big = lower_bound * mult;
        if (D_big > budget) throw WitnessBudgetExceeded(lower_bound, budget);
        std::uint64_t d = D_big.get_ui();
        if (d == 0) d = 1;
        std::uint64_t full = monomial_count_capped(n, d, kFullSupportCap);
        if (full < kFullSupportCap) {
            auto h = try_unit_solve(a, reps, monomials_of_degree(n, d), d);
            if (h) return *h;
        } else {
            std::mt19937_64 rng(0xC0FFEEu + mult);
            for (int attempt = 0; attempt < 40; ++attempt) {
                auto mons = random_monomials(n, d, 4 * (reps.size() + 2), rng);
                auto h = try_unit_solve(a, reps, mons, d);
                if (h) return *h;
            }
        }
    }
    throw WitnessBudgetExceeded(lower_bound, budget);
}

}  // namespace

HomogeneousPoly construct_witness(const PointSet& S, const WitnessOptions& opts) {
    int n = S.dim();
    auto x1 = [&](std::uint64_t deg) {
        Exponents e(static_cast<std::size_t>(n), 0);
        e[0] = static_cast<std::uint32_t>(deg);
        return HomogeneousPoly::monomial(n, std::move(e), Int(1));
    };
    if (S.empty()) return x1(1);  // vacuously 1 on an empty set
    if (n == 1) return x1(2);     // coprime entries force v = (+-1)
    const auto& reps = S.representatives();
    if (reps.size() == 1) {
        HomogeneousPoly f = unit_linear_form(reps[0]);
        if (S.has_negated_original()) f = f * f;
        for (const auto& q : S.originals())
            if (f.evaluate(q.coords) != 1)
                throw std::logic_error("construct_witness: verification failed");
        return f;
    }

    // f_v and the factored a = prod f_v(v); each separating-form value
    // is small and is factored individually.
    std::size_t s = reps.size();
    std::vector<HomogeneousPoly> fv;
    std::vector<Int> fv_val;
    Int a_signed = 1;
    FactoredInteger a = FactoredInteger::one();
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<Point> others;
        for (std::size_t j = 0; j < s; ++j)
            if (j != i) others.push_back(reps[j]);
        fv.push_back(vanishing_poly(reps[i], others));
        Int val = 1;
        for (const auto& w : others) {
            Int lv = separating_form(reps[i], w).evaluate(reps[i].coords);
            FactoredInteger lf = factor(abs(lv));
            a.multiply(lf);
            val *= lv;
        }
        fv_val.push_back(val);
        a_signed *= val;
        if (val == 0)
            throw std::logic_error("construct_witness: vanishing poly degenerated");
    }
    std::uint64_t max_dv = s - 1;

    HomogeneousPoly h(n, 1);  // placeholder, reassigned below
    if (a.value == 1) {
        // The congruence mod a is vacuous; any homogeneous h works.
        h = unit_value_poly(reps[0], max_dv);
    } else {
        Int lower = forced_degree_lower_bound(S);
        if (lower > opts.degree_budget)
            throw WitnessBudgetExceeded(lower, opts.degree_budget);
        ResiduePointSet smod = [&] {
            std::vector<std::vector<Int>> pts;
            for (const auto& r : reps) pts.push_back(r.coords);
            return ResiduePointSet::make(a.value, pts);
        }();
        // Prefer the direct pipeline (finite-field witness, nilpotent
        // lift, CRT, exponent normalization) whenever its degree stays
        // small; otherwise solve the unit interpolation at a multiple
        // of the forced lower bound.
        std::optional<HomogeneousPoly> pipeline;
        constexpr unsigned long kPipelineDegreeCap = 600;
        // The per-prime witnesses are cheap; check the CRT lcm degree
        // and the normalization exponent before committing to either
        // expensive powering step.
        std::vector<std::pair<Int, HomogeneousPoly>> parts;
        Int glue_deg = 1;
        for (const auto& [p, e] : a.factors) {
            HomogeneousPoly gp = ff_unit_witness(p, smod.reduced(p));
            glue_deg = lcm(glue_deg, Int(static_cast<unsigned long>(gp.degree())));
            if (glue_deg > kPipelineDegreeCap) break;
            Int pe = pow_ui(p, e);
            parts.emplace_back(pe,
                               lift_through_nilpotent(gp.lifted(), p, e,
                                                      smod.reduced(pe)));
        }
        if (parts.size() == a.factors.size() && glue_deg <= kPipelineDegreeCap) {
            HomogeneousPoly g = crt_combine(parts);
            Int t = 1;
            for (const auto& v : smod.points())
                t = lcm(t, multiplicative_order(g.evaluate(v), a));
            if (t * Int(static_cast<unsigned long>(g.degree())) <=
                kPipelineDegreeCap)
                pipeline = normalize_to_one(g, a, smod);
        }
        if (pipeline) {
            h = *pipeline;
        } else {
            h = solve_unit_interpolation(a.value, reps, lower,
                                         opts.degree_budget);
        }
        std::uint64_t k = (max_dv + h.degree() - 1) / h.degree();
        if (k > 1) h = h.pow(k);
        if (h.degree() > opts.degree_budget)
            throw WitnessBudgetExceeded(Int(static_cast<unsigned long>(h.degree())),
                                        opts.degree_budget);
        h = h.lifted();
    }
    std::uint64_t d = h.degree();

    HomogeneousPoly f = h;
    constexpr std::uint64_t kLinearPowerCap = 64;
    for (std::size_t i = 0; i < s; ++i) {
        Int hv = h.evaluate(reps[i].coords);
        Int num = hv - 1;
        if (num == 0) continue;
        if (num % a_signed != 0)
            throw std::logic_error("construct_witness: h is not 1 mod a");
        Int coeff = num / a_signed;
        std::uint64_t e = d - fv[i].degree();
        HomogeneousPoly filler =
            e <= kLinearPowerCap
                ? (e == 0 ? unit_value_poly(reps[i], 0)
                          : unit_linear_form(reps[i]).pow(e))
                : unit_value_poly(reps[i], e);
        HomogeneousPoly gv = (fv[i] * filler).scale(a_signed / fv_val[i]);
        f = f - gv.scale(coeff);
    }
    if (S.has_negated_original() && d % 2 == 1) f = f * f;
    if (f.is_zero() || f.degree() == 0)
        throw std::logic_error("construct_witness: degenerate result");
    for (const auto& q : S.originals())
        if (f.evaluate(q.coords) != 1)
            throw std::logic_error("construct_witness: verification failed");
    return f;
}

}  // namespace homint
