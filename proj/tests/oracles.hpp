// Independent reference implementations used to cross-check the library.
// Deliberately naive: cofactor determinants, rational row reduction, and
// exhaustive minor scans, sharing no code with the checked implementations.
#pragma once

#include <optional>
#include <vector>

#include "fano/types.hpp"

namespace oracle {

inline fano::Int det_cofactor(const std::vector<std::vector<fano::Int>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    fano::Int acc = 0;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<fano::Int>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<fano::Int> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        acc += sign * m[0][j] * det_cofactor(sub);
        sign = -sign;
    }
    return acc;
}

inline fano::Int det_cofactor(const fano::IntMatrix& m) {
    std::vector<std::vector<fano::Int>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return det_cofactor(rows);
}

inline std::size_t rank_gauss(const fano::IntMatrix& m) {
    std::vector<std::vector<fano::Rational>> a(m.rows(), std::vector<fano::Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = fano::Rational(m.at(i, j));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][col] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            fano::Rational f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Every square submatrix has determinant in {-1,0,1}; exhaustive.
inline bool tu_brute(const fano::IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    std::size_t kmax = r < c ? r : c;
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::vector<std::size_t> ri(k), ci(k);
        for (std::size_t i = 0; i < k; ++i) ri[i] = i;
        while (true) {
            for (std::size_t i = 0; i < k; ++i) ci[i] = i;
            while (true) {
                std::vector<std::vector<fano::Int>> sub(k, std::vector<fano::Int>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = m.at(ri[i], ci[j]);
                fano::Int d = det_cofactor(sub);
                if (d > 1 || d < -1) return false;
                std::size_t j = k;
                while (j > 0 && ci[j - 1] == c - k + j - 1) --j;
                if (j == 0) break;
                ++ci[j - 1];
                for (std::size_t t = j; t < k; ++t) ci[t] = ci[t - 1] + 1;
            }
            std::size_t j = k;
            while (j > 0 && ri[j - 1] == r - k + j - 1) --j;
            if (j == 0) break;
            ++ri[j - 1];
            for (std::size_t t = j; t < k; ++t) ri[t] = ri[t - 1] + 1;
        }
    }
    return true;
}

// Membership in conv(rows of v) via exhaustive vertex subsets: x is in the hull
// iff some affinely independent subset carries it with nonnegative coefficients
// (Caratheodory). Exponential; for tiny fixtures only.
inline bool hull_member(const fano::IntMatrix& v, const std::vector<fano::Int>& x) {
    const std::size_t m = v.rows(), n = v.cols();
    std::vector<std::size_t> idx;
    std::vector<std::size_t> sel;
    // iterate over all subsets of size <= n+1 via bitmask (m <= ~12)
    for (std::size_t mask = 1; mask < (1ull << m); ++mask) {
        sel.clear();
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1ull << i)) sel.push_back(i);
        if (sel.size() > n + 1) continue;
        // solve sum l_i v_i = x, sum l_i = 1, l_i >= 0 by Gaussian elimination
        const std::size_t k = sel.size();
        std::vector<std::vector<fano::Rational>> a(n + 1, std::vector<fano::Rational>(k + 1));
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t i = 0; i < n; ++i) a[i][j] = fano::Rational(v.at(sel[j], i));
            a[n][j] = 1;
        }
        for (std::size_t i = 0; i < n; ++i) a[i][k] = fano::Rational(x[i]);
        a[n][k] = 1;
        // forward elimination
        std::size_t row = 0;
        std::vector<std::size_t> pivot_col;
        for (std::size_t col = 0; col < k && row < n + 1; ++col) {
            std::size_t piv = row;
            while (piv < n + 1 && a[piv][col] == 0) ++piv;
            if (piv == n + 1) continue;
            std::swap(a[piv], a[row]);
            for (std::size_t i = 0; i < n + 1; ++i) {
                if (i == row || a[i][col] == 0) continue;
                fano::Rational f = a[i][col] / a[row][col];
                for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
            }
            pivot_col.push_back(col);
            ++row;
        }
        // inconsistent?
        bool bad = false;
        for (std::size_t i = row; i < n + 1; ++i)
            if (a[i][k] != 0) bad = true;
        if (bad || pivot_col.size() < k) continue;  // require unique solution
        bool nonneg = true;
        for (std::size_t i = 0; i < k; ++i)
            if (a[i][k] / a[i][pivot_col[i]] < 0) nonneg = false;
        if (nonneg) return true;
    }
    return false;
}

}  // namespace oracle
