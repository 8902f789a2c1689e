#pragma once

// Dense matrices over arbitrary-precision integers: Hermite normal form with
// transformation matrix, small determinants, and the saturation test used by
// the cone goodness check.

#include <utility>
#include <vector>

#include "reebscope/bigint.hpp"

namespace reebscope {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, BigInt(0)) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("IntMatrix: dimensions must be positive");
    }
    IntMatrix(int rows, int cols, std::vector<BigInt> entries) : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows <= 0 || cols <= 0 || e_.size() != static_cast<size_t>(rows) * cols)
            throw std::invalid_argument("IntMatrix: inconsistent dimensions");
    }
    static IntMatrix from_long(int rows, int cols, const std::vector<long>& entries) {
        std::vector<BigInt> v;
        v.reserve(entries.size());
        for (long x : entries) v.emplace_back(x);
        return IntMatrix(rows, cols, std::move(v));
    }
    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const BigInt& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: size mismatch in product");
        IntMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (at(i, k) == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    bool is_zero() const {
        for (const auto& x : e_) if (x != 0) return false;
        return true;
    }

private:
    int rows_, cols_;
    std::vector<BigInt> e_;
};

// Row-style Hermite normal form H = U*M with U unimodular. Echelon variant:
// pivots positive, entries below pivots zero; entries above pivots are not
// reduced. Deterministic: the pivot is always the smallest-magnitude nonzero
// candidate (ties by row index).
inline std::pair<IntMatrix, IntMatrix> hermite_normal_form(const IntMatrix& m_in) {
    IntMatrix h = m_in;
    IntMatrix u = IntMatrix::identity(h.rows());
    if (h.is_zero()) return {h, u};
    int r = 0;
    auto swap_rows = [&](IntMatrix& m, int a, int b) {
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
    };
    auto addmul_row = [&](IntMatrix& m, int dst, int src, const BigInt& k) {
        for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += k * m.at(src, j);
    };
    auto negate_row = [&](IntMatrix& m, int a) {
        for (int j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
    };
    for (int c = 0; c < h.cols() && r < h.rows(); ++c) {
        // repeat gcd elimination until the column has a single nonzero at row r
        while (true) {
            int piv = -1;
            for (int i = r; i < h.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                if (piv < 0 || abs(h.at(i, c)) < abs(h.at(piv, c))) piv = i;
            }
            if (piv < 0) break;  // column finished, no pivot here
            if (piv != r) {
                swap_rows(h, piv, r);
                swap_rows(u, piv, r);
            }
            bool clean = true;
            for (int i = r + 1; i < h.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                BigInt q = fdiv(h.at(i, c), h.at(r, c));
                if (q != 0) {
                    addmul_row(h, i, r, -q);
                    addmul_row(u, i, r, -q);
                }
                if (h.at(i, c) != 0) clean = false;
            }
            if (clean) {
                if (sgn(h.at(r, c)) < 0) {
                    negate_row(h, r);
                    negate_row(u, r);
                }
                ++r;
                break;
            }
        }
    }
    return {h, u};
}

inline BigInt det3(const IntMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("det3: matrix is not 3x3");
    return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
           m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
           m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

inline BigInt det2(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) { return a * d - b * c; }

// gcd of all k x k minors of a full-row-rank k x n matrix (k <= n <= 3 here).
// The rows are part of a lattice basis of Z^n iff this gcd is 1.
inline BigInt maximal_minor_gcd(const IntMatrix& m) {
    int k = m.rows(), n = m.cols();
    if (k > n) throw std::invalid_argument("maximal_minor_gcd: more rows than columns");
    BigInt g = 0;
    std::vector<int> idx(k);
    // enumerate k-subsets of columns
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        // minor on columns idx
        BigInt d;
        if (k == 1) {
            d = m.at(0, idx[0]);
        } else if (k == 2) {
            d = det2(m.at(0, idx[0]), m.at(0, idx[1]), m.at(1, idx[0]), m.at(1, idx[1]));
        } else if (k == 3) {
            IntMatrix s(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) s.at(i, j) = m.at(i, idx[j]);
            d = det3(s);
        } else {
            throw std::invalid_argument("maximal_minor_gcd: only k <= 3 supported");
        }
        g = gcd(g, d);
        // next subset
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return g;
}

}  // namespace reebscope
