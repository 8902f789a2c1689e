#pragma once

// Sylvester resultants over the multivariate polynomial ring, computed by
// Bareiss fraction-free elimination (all divisions exact).

#include <vector>

#include "reebscope/poly.hpp"

namespace reebscope {

// Fraction-free determinant of a square matrix of polynomials.
inline MultiPoly poly_determinant(std::vector<std::vector<MultiPoly>> m, int nvars) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return MultiPoly::constant(nvars, BigRat(1));
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(nvars, BigRat(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return MultiPoly(nvars);  // singular
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MultiPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = t.divide_exact(prev);
                if (!q) throw std::logic_error("poly_determinant: Bareiss division failed");
                m[i][j] = std::move(*q);
            }
            m[i][k] = MultiPoly(nvars);
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Res_var(p, q): vanishes exactly on the projection of the common zeros
// (plus the locus where both leading coefficients vanish).
inline MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero polynomial input");
    const int nvars = p.nvars();
    int dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp == 0 && dq == 0) throw std::invalid_argument("resultant: variable absent from both inputs");
    if (dp == 0) return p.pow(dq);
    if (dq == 0) return q.pow(dp);
    auto pc = p.coeffs_in(var);  // ascending in var, entries free of var
    auto qc = q.coeffs_in(var);
    const int n = dp + dq;
    std::vector<std::vector<MultiPoly>> syl(n, std::vector<MultiPoly>(n, MultiPoly(nvars)));
    for (int r = 0; r < dq; ++r)
        for (int i = 0; i <= dp; ++i) syl[r][r + i] = pc[dp - i];
    for (int r = 0; r < dp; ++r)
        for (int i = 0; i <= dq; ++i) syl[dq + r][r + i] = qc[dq - i];
    return poly_determinant(std::move(syl), nvars);
}

}  // namespace reebscope
