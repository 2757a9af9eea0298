#pragma once

#include "fk/linalg.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

// Brute-force references for Smith form and signature on small integer matrices.
namespace linoracle {

using I = long long;
using M = std::vector<std::vector<I>>;

// Determinant of the submatrix on row mask rm and column mask cm (same popcount).
inline I minor(const M& m, unsigned rm, unsigned cm) {
    int r0 = __builtin_ctz(rm);
    unsigned rest = rm & (rm - 1);
    if (!rest) return m[r0][__builtin_ctz(cm)];
    I s = 0;
    int sign = 1;
    for (unsigned c = cm; c; c &= c - 1) {
        int j = __builtin_ctz(c);
        if (m[r0][j]) s += sign * m[r0][j] * minor(m, rest, cm & ~(1u << j));
        sign = -sign;
    }
    return s;
}

inline I det(const M& m) {
    unsigned all = (1u << m.size()) - 1;
    return m.empty() ? 1 : minor(m, all, all);
}

// Invariant factors from determinantal divisors D_k = gcd of k x k minors.
inline std::vector<I> invariant_factors(const M& m) {
    int n = (int)m.size();
    std::vector<I> out;
    I prev = 1;
    for (int k = 1; k <= n; ++k) {
        I g = 0;
        for (unsigned r = 1; r < (1u << n) && g != 1; ++r) {
            if (__builtin_popcount(r) != k) continue;
            for (unsigned c = 1; c < (1u << n) && g != 1; ++c)
                if (__builtin_popcount(c) == k) g = std::gcd(g, minor(m, r, c));
        }
        if (g == 0) {
            for (int t = k; t <= n; ++t) out.push_back(0);
            break;
        }
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

// Characteristic polynomial coefficients c_0..c_n (c_n = 1) by Faddeev-LeVerrier.
inline std::vector<I> charpoly(const M& a) {
    int n = (int)a.size();
    std::vector<I> c(n + 1, 0);
    c[n] = 1;
    I mk[8][8] = {}, prod[8][8];
    for (int k = 1; k <= n; ++k) {
        // mk = a * mk + c_{n-k+1} I
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                I s = 0;
                for (int l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
                prod[i][j] = s + (i == j ? c[n - k + 1] : 0);
            }
        I tr = 0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                mk[i][l] = prod[i][l];
            }
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
        c[n - k] = -tr / k;
    }
    return c;
}

inline int sign_changes(const std::vector<I>& c) {
    int s = 0, last = 0;
    for (I x : c) {
        int sg = (x > 0) - (x < 0);
        if (!sg) continue;
        if (last && sg != last) ++s;
        last = sg;
    }
    return s;
}

// Real-rooted characteristic polynomial, so Descartes' rule counts exactly.
inline int signature(const M& a) {
    auto c = charpoly(a);
    auto neg = c;
    for (size_t i = 0; i < neg.size(); ++i)
        if (i % 2) neg[i] = -neg[i];
    return sign_changes(c) - sign_changes(neg);
}

struct SweepResult {
    long long matrices = 0, failures = 0;
};

// Checks the library algorithms (instantiated over machine integers) against the
// oracles on m. Returns true on agreement.
inline bool check_one(const M& m) {
    using namespace fk::linalg;
    M D, U, V;
    smith(m, D, U, V);
    int n = (int)m.size();
    auto inv = invariant_factors(m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j && D[i][j] != 0) return false;
        }
    for (int i = 0; i < n; ++i) {
        if (D[i][i] != inv[i]) return false;
        if (i + 1 < n && D[i][i] != 0 && D[i + 1][i + 1] % D[i][i] != 0) return false;
    }
    I du = det(U), dv = det(V);
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) return false;
    I um[8][8];
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < n; ++b) {
            I s = 0;
            for (int a = 0; a < n; ++a) s += U[i][a] * m[a][b];
            um[i][b] = s;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            I s = 0;
            for (int b = 0; b < n; ++b) s += um[i][b] * V[b][j];
            if (s != D[i][j]) return false;
        }
    int sig = 0;
    if (!fk::linalg::signature<boost::rational<I>>(m, sig)) return false;
    return sig == signature(m);
}

// Every symmetric n x n matrix with entries in [-r, r].
inline SweepResult sweep_all(int n, int r) {
    SweepResult res;
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) cells.push_back({i, j});
    M m(n, std::vector<I>(n, -r));
    std::function<void(size_t)> rec = [&](size_t t) {
        if (t == cells.size()) {
            ++res.matrices;
            if (!check_one(m)) ++res.failures;
            return;
        }
        auto [i, j] = cells[t];
        for (int v = -r; v <= r; ++v) {
            m[i][j] = m[j][i] = v;
            rec(t + 1);
        }
    };
    rec(0);
    return res;
}

// One representative per class under congruence by signed permutations, which
// fixes both the invariant factors and the signature: diagonal sorted, first-row
// off-diagonal entries non-negative. Covers every 4x4 class with entries in [-r, r]
// whose smallest diagonal entry lies in [lo, hi].
inline SweepResult sweep_classes4(int r, int lo, int hi) {
    SweepResult res;
    M m(4, std::vector<I>(4, 0));
    for (int a = std::max(lo, -r); a <= std::min(hi, r); ++a)
        for (int b = a; b <= r; ++b)
            for (int c = b; c <= r; ++c)
                for (int d = c; d <= r; ++d) {
                    m[0][0] = a, m[1][1] = b, m[2][2] = c, m[3][3] = d;
                    for (int x12 = 0; x12 <= r; ++x12)
                        for (int x13 = 0; x13 <= r; ++x13)
                            for (int x14 = 0; x14 <= r; ++x14)
                                for (int x23 = -r; x23 <= r; ++x23)
                                    for (int x24 = -r; x24 <= r; ++x24)
                                        for (int x34 = -r; x34 <= r; ++x34) {
                                            m[0][1] = m[1][0] = x12;
                                            m[0][2] = m[2][0] = x13;
                                            m[0][3] = m[3][0] = x14;
                                            m[1][2] = m[2][1] = x23;
                                            m[1][3] = m[3][1] = x24;
                                            m[2][3] = m[3][2] = x34;
                                            ++res.matrices;
                                            if (!check_one(m)) ++res.failures;
                                        }
                }
    return res;
}

inline SweepResult sweep_classes4(int r) { return sweep_classes4(r, -r, r); }

}  // namespace linoracle
