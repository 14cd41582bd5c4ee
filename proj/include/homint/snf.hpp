#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homint/integer.hpp"

namespace homint {

// Dense row-major matrix of arbitrary-precision integers.
struct IntMatrix {
    long rows = 0;
    long cols = 0;
    std::vector<Int> entries;

    IntMatrix() = default;
    IntMatrix(long r, long c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

    Int& at(long i, long j) {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
    }
    const Int& at(long i, long j) const {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
    }

    static IntMatrix identity(long n);
    IntMatrix multiply(const IntMatrix& other) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;  // M * v
    Int determinant() const;  // exact, via fraction-free elimination
    bool operator==(const IntMatrix& other) const = default;
};

// U * M * V = D with U, V unimodular, D diagonal with nonnegative
// entries satisfying d_i | d_{i+1}.
struct SNFDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::vector<Int> diagonal() const;
    long rank() const;
};

SNFDecomposition snf(const IntMatrix& M);

// One integer solution of M x = b, if any. Absence is a value.
std::optional<std::vector<Int>> solve_diophantine(const IntMatrix& M,
                                                  const std::vector<Int>& b);

// True iff b lies in the integer column image of M.
bool in_image(const IntMatrix& M, const std::vector<Int>& b);

namespace detail {

// Diagonalization that keeps U and the diagonal but records the column
// operations as a replayable program instead of materializing V.
// Reconstructing a solution x = V y then costs O(#ops) regardless of
// how wide M is, which matters for evaluation matrices with tens of
// thousands of columns.
struct ColOp {
    enum class Kind { swap, addmul, negate } kind;
    long a = 0;
    long b = 0;
    Int q;
};

struct SnfCore {
    IntMatrix U;             // rows x rows
    IntMatrix D;             // diagonalized matrix (in place)
    std::vector<ColOp> ops;  // V as a program, in application order
    long rank = 0;
};

SnfCore snf_core(IntMatrix M, bool want_ops);

// x = V y for the V encoded by ops.
std::vector<Int> apply_col_ops(const std::vector<ColOp>& ops,
                               std::vector<Int> y);

}  // namespace detail

}  // namespace homint
