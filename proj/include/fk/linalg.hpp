#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

// Exact integer linear algebra, generic over the number type so the same code
// runs on bignums in the library and on machine integers in exhaustive sweeps.
namespace fk::linalg {

template <class T>
using Mat = std::vector<std::vector<T>>;

template <class T>
Mat<T> identity(size_t n) {
    Mat<T> r(n, std::vector<T>(n, T(0)));
    for (size_t i = 0; i < n; ++i) r[i][i] = T(1);
    return r;
}

template <class T>
T abs_of(const T& x) {
    return x < 0 ? T(-x) : x;
}

// U * m * V = D with D diagonal, d1 | d2 | ..., all d >= 0.
template <class T>
void smith(const Mat<T>& m, Mat<T>& D, Mat<T>& U, Mat<T>& V) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    D = m;
    U = identity<T>(rows);
    V = identity<T>(cols);
    Mat<T>& A = D;
    auto swap_rows = [&](size_t i, size_t j) {
        std::swap(A[i], A[j]);
        std::swap(U[i], U[j]);
    };
    auto swap_cols = [&](size_t i, size_t j) {
        for (auto& r : A) std::swap(r[i], r[j]);
        for (auto& r : V) std::swap(r[i], r[j]);
    };
    auto add_row = [&](size_t dst, size_t src, const T& f) {  // row dst -= f * row src
        for (size_t j = 0; j < cols; ++j) A[dst][j] -= f * A[src][j];
        for (size_t j = 0; j < rows; ++j) U[dst][j] -= f * U[src][j];
    };
    auto add_col = [&](size_t dst, size_t src, const T& f) {
        for (size_t i = 0; i < rows; ++i) A[i][dst] -= f * A[i][src];
        for (size_t i = 0; i < cols; ++i) V[i][dst] -= f * V[i][src];
    };
    size_t r = std::min(rows, cols);
    for (size_t t = 0; t < r; ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block
            bool found = false;
            size_t pi = t, pj = t;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j)
                    if (A[i][j] != 0 && (!found || abs_of(A[i][j]) < abs_of(A[pi][pj]))) {
                        found = true;
                        pi = i;
                        pj = j;
                    }
            if (!found) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (A[i][t] == 0) continue;
                add_row(i, t, T(A[i][t] / A[t][t]));
                if (A[i][t] != 0) clean = false;
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (A[t][j] == 0) continue;
                add_col(j, t, T(A[t][j] / A[t][t]));
                if (A[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: fold an offending row into row t
            bool fixed = false;
            for (size_t i = t + 1; i < rows && !fixed; ++i)
                for (size_t j = t + 1; j < cols; ++j)
                    if (A[i][j] % A[t][t] != 0) {
                        add_row(t, i, T(-1));
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
        }
        if (A[t][t] < 0) {
            for (size_t j = 0; j < cols; ++j) A[t][j] = -A[t][j];
            for (size_t j = 0; j < rows; ++j) U[t][j] = -U[t][j];
        }
    }
}

// Symmetric LDL^T over the field Q; returns (#positive - #negative) pivots.
// Q is a rational type constructible from T. Returns false if m is not symmetric.
template <class Q, class T>
bool signature(const Mat<T>& m, int& sig) {
    size_t n = m.size();
    Mat<Q> a(n, std::vector<Q>(n));
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) return false;
        for (size_t j = 0; j < n; ++j) {
            if (m[i][j] != m[j][i]) return false;
            a[i][j] = Q(m[i][j]);
        }
    }
    const Q zero(0);
    sig = 0;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a[p][p] == zero) ++p;
        if (p == n) {
            // zero diagonal: e_i += e_j on a nonzero off-diagonal pair
            size_t ii = n, jj = n;
            for (size_t i = k; i < n && ii == n; ++i)
                for (size_t j = k; j < n; ++j)
                    if (a[i][j] != zero) {
                        ii = i;
                        jj = j;
                        break;
                    }
            if (ii == n) break;
            for (size_t j = k; j < n; ++j) a[ii][j] += a[jj][j];
            for (size_t i = k; i < n; ++i) a[i][ii] += a[i][jj];
            p = ii;
        }
        if (p != k) {
            std::swap(a[p], a[k]);
            for (auto& row : a) std::swap(row[p], row[k]);
        }
        Q piv = a[k][k];
        sig += piv > zero ? 1 : -1;
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == zero) continue;
            Q f = a[i][k] / piv;
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        for (size_t j = k + 1; j < n; ++j) a[k][j] = zero;
    }
    return true;
}

}  // namespace fk::linalg
