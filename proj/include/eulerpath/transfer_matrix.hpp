#pragma once

/**
 * @file transfer_matrix.hpp
 * @brief Tridiagonal transfer matrices for the lattice-path pipelines.
 *
 * The m x m transfer matrix of a weight rule has sigma_0..sigma_{m-1} on
 * the diagonal, tau_1..tau_{m-1} on the superdiagonal and constant 1 on
 * the subdiagonal. Its n-th power tracks n-step paths by start and end
 * height; in particular [(M)^n]_{1,1} = M_{n,0}, which for the Euler
 * weights is E_n^(p)(x) whenever n <= m, and the whole first column of the
 * power reproduces row n of the Motzkin triangle.
 */

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "eulerpath/motzkin.hpp"
#include "eulerpath/polynomial.hpp"
#include "eulerpath/rational.hpp"

namespace eulerpath {

/// Square tridiagonal matrix with unit subdiagonal, stored by bands.
struct TriDiagMatrix {
    std::vector<XPoly> diag;   // size m
    std::vector<XPoly> super;  // size m-1

    std::size_t size() const { return diag.size(); }
};

inline TriDiagMatrix build_transfer(const WeightSpec& w, std::size_t m) {
    if (m == 0) throw std::invalid_argument("transfer matrix needs size >= 1");
    TriDiagMatrix t;
    t.diag.reserve(m);
    for (std::size_t i = 0; i < m; ++i) t.diag.push_back(w.sigma(i));
    t.super.reserve(m - 1);
    for (std::size_t i = 1; i < m; ++i) t.super.push_back(w.tau(i));
    return t;
}

using DenseMatrix = std::vector<std::vector<XPoly>>;

/// A * M for tridiagonal M; each entry touches three bands only.
inline DenseMatrix mat_mul_tridiag(const DenseMatrix& a, const TriDiagMatrix& m) {
    const std::size_t sz = m.size();
    DenseMatrix next(sz, std::vector<XPoly>(sz));
    for (std::size_t i = 0; i < sz; ++i) {
        for (std::size_t j = 0; j < sz; ++j) {
            XPoly v = a[i][j] * m.diag[j];
            if (j >= 1) v += a[i][j - 1] * m.super[j - 1];
            if (j + 1 < sz) v += a[i][j + 1];  // unit subdiagonal
            next[i][j] = std::move(v);
        }
    }
    return next;
}

/// M^n as a dense matrix, by repeated multiplication.
inline DenseMatrix mat_power(const TriDiagMatrix& m, std::size_t n) {
    const std::size_t sz = m.size();
    DenseMatrix acc(sz, std::vector<XPoly>(sz));
    for (std::size_t i = 0; i < sz; ++i) acc[i][i] = XPoly(Rational(1));
    for (std::size_t step = 0; step < n; ++step) acc = mat_mul_tridiag(acc, m);
    return acc;
}

/// [(M)^n]_{1,1}. Only guaranteed to equal the n-th moment for n <= m, so
/// larger n is rejected.
inline XPoly mat_pow_top_left(const TriDiagMatrix& m, std::size_t n) {
    if (n > m.size()) throw std::invalid_argument("matrix power: n exceeds the matrix size");
    return mat_power(m, n)[0][0];
}

}  // namespace eulerpath
