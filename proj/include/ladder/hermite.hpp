#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "ladder/errors.hpp"

namespace ladder {

using ZVec = std::vector<long long>;
using ZMat = std::vector<ZVec>;

namespace zlin {

inline void checked(long long v)
{
    constexpr long long limit = 1ll << 58;
    require(v < limit && v > -limit, errc::internal, "integer overflow in lattice arithmetic");
}

inline void axpy(ZVec& dst, long long f, const ZVec& src)
{
    for (size_t i = 0; i < dst.size(); ++i) {
        dst[i] += f * src[i];
        checked(dst[i]);
    }
}

/// Row-style Hermite normal form of the lattice spanned by the rows of A.
/// Returns the echelon basis; pivots positive, entries above pivots reduced.
inline ZMat hnf_rows(ZMat A)
{
    if (A.empty()) return A;
    const size_t ncols = A[0].size();
    size_t r = 0;
    std::vector<size_t> pivots;
    for (size_t c = 0; c < ncols && r < A.size(); ++c) {
        // gcd elimination below row r in column c
        for (size_t i = r + 1; i < A.size(); ++i) {
            while (A[i][c] != 0) {
                long long q = A[r][c] == 0 ? 0 : A[r][c] / A[i][c];
                axpy(A[r], -q, A[i]);
                std::swap(A[r], A[i]);
            }
        }
        if (A[r][c] == 0) continue;
        if (A[r][c] < 0)
            for (auto& v : A[r]) v = -v;
        // reduce entries above the pivot
        for (size_t i = 0; i < r; ++i) {
            long long q = A[i][c] >= 0 ? A[i][c] / A[r][c] : -((-A[i][c] + A[r][c] - 1) / A[r][c]);
            if (q != 0) axpy(A[i], -q, A[r]);
        }
        pivots.push_back(c);
        ++r;
    }
    A.resize(r);
    return A;
}

inline std::vector<size_t> pivot_columns(const ZMat& H)
{
    std::vector<size_t> piv;
    for (const auto& row : H) {
        size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        if (c < row.size()) piv.push_back(c);
    }
    return piv;
}

/// Reduce v modulo the lattice rowspan(H); requires every pivot to be 1
/// (free quotient), so the result is supported on the non-pivot columns.
inline ZVec reduce_free(const ZMat& H, ZVec v)
{
    std::vector<size_t> piv = pivot_columns(H);
    for (size_t r = 0; r < H.size(); ++r) {
        require(H[r][piv[r]] == 1, errc::internal, "quotient lattice has torsion");
        long long q = v[piv[r]];
        if (q != 0) axpy(v, -q, H[r]);
    }
    return v;
}

/// Solve A x = b over the integers. A is r x c, x has c entries.
inline std::optional<ZVec> solve(const ZMat& A, const ZVec& b)
{
    const size_t r = A.size();
    const size_t c = r == 0 ? 0 : A[0].size();
    require(b.size() == r, errc::dimension_mismatch, "solve: size mismatch");
    // column HNF with transform: work on transposed rows, track U with A^T = rows
    ZMat M(c, ZVec(r, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) M[j][i] = A[i][j];
    ZMat U(c, ZVec(c, 0));
    for (size_t j = 0; j < c; ++j) U[j][j] = 1;

    size_t rank = 0;
    std::vector<size_t> piv;
    for (size_t col = 0; col < r && rank < c; ++col) {
        for (size_t i = rank + 1; i < c; ++i) {
            while (M[i][col] != 0) {
                long long q = M[rank][col] == 0 ? 0 : M[rank][col] / M[i][col];
                axpy(M[rank], -q, M[i]);
                axpy(U[rank], -q, U[i]);
                std::swap(M[rank], M[i]);
                std::swap(U[rank], U[i]);
            }
        }
        if (M[rank][col] == 0) continue;
        if (M[rank][col] < 0) {
            for (auto& v : M[rank]) v = -v;
            for (auto& v : U[rank]) v = -v;
        }
        piv.push_back(col);
        ++rank;
    }
    // forward substitution: b = sum y_t * M[t]
    ZVec y(rank, 0), acc(r, 0);
    for (size_t t = 0; t < rank; ++t) {
        long long rem = b[piv[t]] - acc[piv[t]];
        if (rem % M[t][piv[t]] != 0) return std::nullopt;
        y[t] = rem / M[t][piv[t]];
        if (y[t] != 0) axpy(acc, y[t], M[t]);
    }
    if (acc != b) return std::nullopt;
    ZVec x(c, 0);
    for (size_t t = 0; t < rank; ++t)
        if (y[t] != 0) axpy(x, y[t], U[t]);
    return x;
}

/// Basis of the right kernel {x : A x = 0}.
inline ZMat kernel(const ZMat& A)
{
    const size_t r = A.size();
    const size_t c = r == 0 ? 0 : A[0].size();
    ZMat M(c, ZVec(r, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) M[j][i] = A[i][j];
    ZMat U(c, ZVec(c, 0));
    for (size_t j = 0; j < c; ++j) U[j][j] = 1;

    size_t rank = 0;
    for (size_t col = 0; col < r && rank < c; ++col) {
        for (size_t i = rank + 1; i < c; ++i) {
            while (M[i][col] != 0) {
                long long q = M[rank][col] == 0 ? 0 : M[rank][col] / M[i][col];
                axpy(M[rank], -q, M[i]);
                axpy(U[rank], -q, U[i]);
                std::swap(M[rank], M[i]);
                std::swap(U[rank], U[i]);
            }
        }
        if (M[rank][col] != 0) ++rank;
    }
    ZMat out;
    for (size_t i = rank; i < c; ++i) out.push_back(U[i]);
    return out;
}

/// Rank, and whether the row lattice is all of Z^rank (unit elementary divisors).
inline bool surjective_onto(const ZMat& A, size_t target_rank)
{
    ZMat H = hnf_rows(A);
    if (H.size() != target_rank) return false;
    std::vector<size_t> piv = pivot_columns(H);
    for (size_t r = 0; r < H.size(); ++r)
        if (H[r][piv[r]] != 1) return false;
    // pivots of an HNF with unit pivots generate iff they sit in every column
    return piv.size() == target_rank && target_rank == (H.empty() ? 0 : H[0].size());
}

} // namespace zlin

} // namespace ladder
