#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

// Dense rational matrix. Sizes here stay small (a few dozen rows), so the
// emphasis is on exactness and deterministic pivoting, not speed.
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {}

    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static RatMatrix from_rows(const std::vector<RatVec>& rows_in) {
        RatMatrix m(static_cast<int>(rows_in.size()), rows_in.empty() ? 0 : static_cast<int>(rows_in[0].size()));
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
        return m;
    }

    RatMatrix transposed() const {
        RatMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    RatVec apply(const RatVec& v) const {
        RatVec out(rows, Rational(0));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (at(i, j) != 0) out[i] += at(i, j) * v[j];
        return out;
    }

    RatMatrix operator*(const RatMatrix& o) const {
        RatMatrix out(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Rational& x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols; ++j)
                    if (o.at(k, j) != 0) out.at(i, j) += x * o.at(k, j);
            }
        return out;
    }

    bool operator==(const RatMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct Echelon {
    RatMatrix u;                 // row echelon form (integer entries)
    std::vector<int> pivot_cols; // strictly increasing
    int rank = 0;
};

// Fraction-free Gaussian elimination (Bareiss). Rows are first scaled to
// integers; the pivot is the first nonzero entry in column order, which keeps
// the reduction deterministic. Intermediate entries stay integral.
inline Echelon ff_echelon(RatMatrix m) {
    // clear denominators row by row (does not change the row space)
    for (int i = 0; i < m.rows; ++i) {
        Integer l(1);
        for (int j = 0; j < m.cols; ++j) {
            const Integer d = denominator(m.at(i, j));
            l = boost::multiprecision::lcm(l, d);
        }
        if (l != 1)
            for (int j = 0; j < m.cols; ++j) m.at(i, j) *= Rational(l);
    }

    Echelon e;
    Rational prev(1);
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        const Rational p = m.at(row, col);
        for (int i = row + 1; i < m.rows; ++i) {
            const Rational f = m.at(i, col);
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = (p * m.at(i, j) - f * m.at(row, j)) / prev;
        }
        prev = p;
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.rank = row;
    e.u = std::move(m);
    return e;
}

inline int rank(const RatMatrix& m) { return ff_echelon(m).rank; }

// Basis of { x : M x = 0 }. One vector per free column, free variable set to
// 1, pivot variables by back substitution. Deterministic.
inline std::vector<RatVec> kernel_basis(const RatMatrix& m) {
    Echelon e = ff_echelon(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec x(m.cols, Rational(0));
        x[f] = 1;
        for (int i = e.rank - 1; i >= 0; --i) {
            const int p = e.pivot_cols[i];
            Rational s(0);
            for (int j = p + 1; j < m.cols; ++j)
                if (e.u.at(i, j) != 0 && x[j] != 0) s += e.u.at(i, j) * x[j];
            x[p] = -s / e.u.at(i, p);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

// Particular solution of M x = b with free variables set to 0, or nullopt if
// inconsistent.
inline std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
    RatMatrix aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    Echelon e = ff_echelon(std::move(aug));
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols) return std::nullopt;
    RatVec x(m.cols, Rational(0));
    for (int i = e.rank - 1; i >= 0; --i) {
        const int p = e.pivot_cols[i];
        Rational s(0);
        for (int j = p + 1; j < m.cols; ++j)
            if (e.u.at(i, j) != 0 && x[j] != 0) s += e.u.at(i, j) * x[j];
        x[p] = (e.u.at(i, m.cols) - s) / e.u.at(i, p);
    }
    return x;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    const int n = m.rows;
    RatMatrix inv(n, n);
    for (int c = 0; c < n; ++c) {
        RatVec e(n, Rational(0));
        e[c] = 1;
        auto x = solve(m, e);
        if (!x) return std::nullopt;
        for (int i = 0; i < n; ++i) inv.at(i, c) = (*x)[i];
    }
    // solve() returns some preimage; a square system with full rank has one
    RatMatrix check = m * inv;
    if (!(check == RatMatrix::identity(n))) return std::nullopt;
    return inv;
}

// Does target lie in the span of the given vectors?
inline bool in_span(const std::vector<RatVec>& vectors, const RatVec& target) {
    if (is_zero(target)) return true;
    RatMatrix m = RatMatrix::from_rows(vectors);
    if (vectors.empty()) return false;
    const int r0 = rank(m);
    std::vector<RatVec> aug = vectors;
    aug.push_back(target);
    return rank(RatMatrix::from_rows(aug)) == r0;
}

} // namespace strata
