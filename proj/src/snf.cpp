#include "homint/snf.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace homint {

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
    if (cols != other.rows)
        throw std::invalid_argument("matrix multiply: dimension mismatch");
    IntMatrix out(rows, other.cols);
    for (long i = 0; i < rows; ++i)
        for (long k = 0; k < cols; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (long j = 0; j < other.cols; ++j) {
                const Int& b = other.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (static_cast<long>(v.size()) != cols)
        throw std::invalid_argument("matrix apply: dimension mismatch");
    std::vector<Int> out(static_cast<std::size_t>(rows));
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

// Bareiss fraction-free elimination; exact for integer matrices.
Int IntMatrix::determinant() const {
    if (rows != cols) throw std::invalid_argument("determinant: square matrix required");
    long n = rows;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            long swap_row = -1;
            for (long i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (long j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;  // exact by Sylvester's identity
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::vector<Int> SNFDecomposition::diagonal() const {
    std::vector<Int> d;
    long m = std::min(D.rows, D.cols);
    d.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) d.push_back(D.at(i, i));
    return d;
}

long SNFDecomposition::rank() const {
    long r = 0;
    for (const Int& d : diagonal())
        if (d != 0) ++r;
    return r;
}

namespace detail {

namespace {

struct Eliminator {
    IntMatrix& a;
    IntMatrix& u;
    std::vector<ColOp>* ops;
    long rows, cols;

    void swap_rows(long i, long j) {
        if (i == j) return;
        for (long k = 0; k < cols; ++k) std::swap(a.at(i, k), a.at(j, k));
        for (long k = 0; k < rows; ++k) std::swap(u.at(i, k), u.at(j, k));
    }
    void swap_cols(long i, long j) {
        if (i == j) return;
        for (long k = 0; k < rows; ++k) std::swap(a.at(k, i), a.at(k, j));
        if (ops) ops->push_back(ColOp{ColOp::Kind::swap, i, j, Int(0)});
    }
    // row_i -= q * row_t
    void row_addmul(long i, long t, const Int& q) {
        if (q == 0) return;
        for (long k = 0; k < cols; ++k)
            if (a.at(t, k) != 0) a.at(i, k) -= q * a.at(t, k);
        for (long k = 0; k < rows; ++k)
            if (u.at(t, k) != 0) u.at(i, k) -= q * u.at(t, k);
    }
    // col_j -= q * col_t
    void col_addmul(long j, long t, const Int& q) {
        if (q == 0) return;
        for (long k = 0; k < rows; ++k)
            if (a.at(k, t) != 0) a.at(k, j) -= q * a.at(k, t);
        if (ops) ops->push_back(ColOp{ColOp::Kind::addmul, j, t, -q});
    }
    void negate_col(long j) {
        for (long k = 0; k < rows; ++k) a.at(k, j) = -a.at(k, j);
        if (ops) ops->push_back(ColOp{ColOp::Kind::negate, j, j, Int(0)});
    }
};

}  // namespace

SnfCore snf_core(IntMatrix M, bool want_ops) {
    SnfCore core;
    long rows = M.rows, cols = M.cols;
    core.U = IntMatrix::identity(rows);
    core.D = std::move(M);
    std::vector<ColOp> ops;
    Eliminator el{core.D, core.U, want_ops ? &ops : nullptr, rows, cols};
    IntMatrix& a = core.D;

    long steps = std::min(rows, cols);
    long t = 0;
    for (; t < steps; ++t) {
        // Global pivot: minimal nonzero absolute value in the submatrix.
        long pi = -1, pj = -1;
        for (long i = t; i < rows; ++i)
            for (long j = t; j < cols; ++j) {
                const Int& v = a.at(i, j);
                if (v == 0) continue;
                if (pi < 0 || mpz_cmpabs(v.get_mpz_t(), a.at(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // submatrix is zero
        el.swap_rows(t, pi);
        el.swap_cols(t, pj);

        for (;;) {
            // Clear column t below the pivot.
            bool dirty = false;
            for (long i = t + 1; i < rows; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = div_round(a.at(i, t), a.at(t, t));
                el.row_addmul(i, t, q);
                if (a.at(i, t) != 0) dirty = true;
            }
            if (dirty) {
                long best = t;
                for (long i = t; i < rows; ++i)
                    if (a.at(i, t) != 0 &&
                        (a.at(best, t) == 0 ||
                         mpz_cmpabs(a.at(i, t).get_mpz_t(), a.at(best, t).get_mpz_t()) < 0))
                        best = i;
                el.swap_rows(t, best);
                continue;
            }
            // Clear row t right of the pivot.
            for (long j = t + 1; j < cols; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = div_round(a.at(t, j), a.at(t, t));
                el.col_addmul(j, t, q);
                if (a.at(t, j) != 0) dirty = true;
            }
            if (dirty) {
                long best = t;
                for (long j = t; j < cols; ++j)
                    if (a.at(t, j) != 0 &&
                        (a.at(t, best) == 0 ||
                         mpz_cmpabs(a.at(t, j).get_mpz_t(), a.at(t, best).get_mpz_t()) < 0))
                        best = j;
                el.swap_cols(t, best);
                continue;
            }
            // Pivot isolated; enforce d_t | (every later entry) so the
            // diagonal divisibility chain holds.
            long di = -1;
            for (long i = t + 1; i < rows && di < 0; ++i)
                for (long j = t + 1; j < cols; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        di = i;
                        break;
                    }
            if (di >= 0) {
                el.row_addmul(t, di, Int(-1));  // row_t += row_di
                continue;
            }
            break;
        }
    }
    // Nonnegative diagonal; the sign is pushed into V.
    for (long k = 0; k < t; ++k)
        if (a.at(k, k) < 0) el.negate_col(k);
    core.rank = t;
    // Trailing diagonal entries are zero already (submatrix was zero).
    core.ops = std::move(ops);
    return core;
}

std::vector<Int> apply_col_ops(const std::vector<ColOp>& ops,
                               std::vector<Int> y) {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        switch (it->kind) {
            case ColOp::Kind::swap:
                std::swap(y[static_cast<std::size_t>(it->a)],
                          y[static_cast<std::size_t>(it->b)]);
                break;
            case ColOp::Kind::addmul:
                // col_a += q * col_b acts on vectors as y_b += q * y_a.
                y[static_cast<std::size_t>(it->b)] +=
                    it->q * y[static_cast<std::size_t>(it->a)];
                break;
            case ColOp::Kind::negate:
                y[static_cast<std::size_t>(it->a)] =
                    -y[static_cast<std::size_t>(it->a)];
                break;
        }
    }
    return y;
}

}  // namespace detail

SNFDecomposition snf(const IntMatrix& M) {
    detail::SnfCore core = detail::snf_core(M, true);
    SNFDecomposition out;
    out.U = std::move(core.U);
    out.D = std::move(core.D);
    out.V = IntMatrix::identity(M.cols);
    // Replay the column program against the identity.
    for (const auto& op : core.ops) {
        switch (op.kind) {
            case detail::ColOp::Kind::swap:
                for (long k = 0; k < out.V.rows; ++k)
                    std::swap(out.V.at(k, op.a), out.V.at(k, op.b));
                break;
            case detail::ColOp::Kind::addmul:
                for (long k = 0; k < out.V.rows; ++k)
                    if (out.V.at(k, op.b) != 0)
                        out.V.at(k, op.a) += op.q * out.V.at(k, op.b);
                break;
            case detail::ColOp::Kind::negate:
                for (long k = 0; k < out.V.rows; ++k)
                    out.V.at(k, op.a) = -out.V.at(k, op.a);
                break;
        }
    }
    return out;
}

std::optional<std::vector<Int>> solve_diophantine(const IntMatrix& M,
                                                  const std::vector<Int>& b) {
    if (static_cast<long>(b.size()) != M.rows)
        throw std::invalid_argument("solve_diophantine: rhs length mismatch");
    detail::SnfCore core = detail::snf_core(M, true);
    std::vector<Int> c = core.U.apply(b);
    std::vector<Int> y(static_cast<std::size_t>(M.cols));
    long m = std::min(M.rows, M.cols);
    for (long k = 0; k < m; ++k) {
        const Int& d = core.D.at(k, k);
        const Int& ck = c[static_cast<std::size_t>(k)];
        if (d == 0) {
            if (ck != 0) return std::nullopt;
        } else {
            if (ck % d != 0) return std::nullopt;
            y[static_cast<std::size_t>(k)] = ck / d;
        }
    }
    for (long k = m; k < M.rows; ++k)
        if (c[static_cast<std::size_t>(k)] != 0) return std::nullopt;
    return detail::apply_col_ops(core.ops, std::move(y));
}

bool in_image(const IntMatrix& M, const std::vector<Int>& b) {
    if (static_cast<long>(b.size()) != M.rows)
        throw std::invalid_argument("in_image: vector length mismatch");
    detail::SnfCore core = detail::snf_core(M, false);
    std::vector<Int> c = core.U.apply(b);
    long m = std::min(M.rows, M.cols);
    for (long k = 0; k < m; ++k) {
        const Int& d = core.D.at(k, k);
        const Int& ck = c[static_cast<std::size_t>(k)];
        if (d == 0) {
            if (ck != 0) return false;
        } else if (ck % d != 0) {
            return false;
        }
    }
    for (long k = m; k < M.rows; ++k)
        if (c[static_cast<std::size_t>(k)] != 0) return false;
    return true;
}

}  // namespace homint
