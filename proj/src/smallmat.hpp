#pragma once

#include <cstdlib>
#include <vector>

namespace quadprime::detail {

using Mat = std::vector<std::vector<long long>>;

inline Mat identity(int n) {
    Mat m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; i++) m[i][i] = 1;
    return m;
}

struct SnfResult {
    std::vector<long long> diag;
    Mat U, Uinv; // U * A * V = diag(d); Uinv columns express the new basis
};

// Smith-style diagonalization for small integer matrices. The divisibility
// chain is not enforced; any diagonal form suffices for a cyclic decomposition.
inline SnfResult snf(Mat A) {
    int n = static_cast<int>(A.size());
    Mat U = identity(n), Uinv = identity(n);

    auto row_swap = [&](int i, int j) {
        std::swap(A[i], A[j]);
        std::swap(U[i], U[j]);
        for (int r = 0; r < n; r++) std::swap(Uinv[r][i], Uinv[r][j]);
    };
    auto row_add = [&](int i, int j, long long k) { // row i += k * row j
        for (int c = 0; c < n; c++) A[i][c] += k * A[j][c];
        for (int c = 0; c < n; c++) U[i][c] += k * U[j][c];
        for (int r = 0; r < n; r++) Uinv[r][j] -= k * Uinv[r][i];
    };
    auto row_neg = [&](int i) {
        for (int c = 0; c < n; c++) A[i][c] = -A[i][c];
        for (int c = 0; c < n; c++) U[i][c] = -U[i][c];
        for (int r = 0; r < n; r++) Uinv[r][i] = -Uinv[r][i];
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < n; r++) std::swap(A[r][i], A[r][j]);
    };
    auto col_add = [&](int i, int j, long long k) { // col i += k * col j
        for (int r = 0; r < n; r++) A[r][i] += k * A[r][j];
    };
    auto col_neg = [&](int i) {
        for (int r = 0; r < n; r++) A[r][i] = -A[r][i];
    };

    for (int t = 0; t < n; t++) {
        // move a nonzero pivot of minimal magnitude to (t, t)
        while (true) {
            int pi = -1, pj = -1;
            for (int i = t; i < n; i++)
                for (int j = t; j < n; j++)
                    if (A[i][j] != 0 &&
                        (pi < 0 || std::llabs(A[i][j]) < std::llabs(A[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break; // rest is zero
            if (pi != t) row_swap(t, pi);
            if (pj != t) col_swap(t, pj);
            if (A[t][t] < 0) row_neg(t);
            bool reduced = true;
            for (int i = t + 1; i < n; i++)
                if (A[i][t] != 0) {
                    long long q = A[i][t] / A[t][t];
                    row_add(i, t, -q);
                    if (A[i][t] != 0) reduced = false;
                }
            for (int j = t + 1; j < n; j++)
                if (A[t][j] != 0) {
                    long long q = A[t][j] / A[t][t];
                    col_add(j, t, -q);
                    if (A[t][j] != 0) reduced = false;
                }
            if (reduced) {
                bool clear = true;
                for (int i = t + 1; i < n && clear; i++) clear = A[i][t] == 0;
                for (int j = t + 1; j < n && clear; j++) clear = A[t][j] == 0;
                if (clear) break;
            }
        }
        if (A[t][t] < 0) row_neg(t);
        (void)col_neg;
    }

    SnfResult r;
    r.diag.resize(n);
    for (int i = 0; i < n; i++) r.diag[i] = A[i][i];
    r.U = std::move(U);
    r.Uinv = std::move(Uinv);
    return r;
}

} // namespace quadprime::detail
