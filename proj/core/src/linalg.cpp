#include "fano/linalg.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <set>
#include <stdexcept>

namespace fano {

namespace {

// Fraction-free elimination in place; returns (rank, det-of-leading-square-part).
// The determinant output is only meaningful when the matrix is square.
std::pair<std::size_t, Int> bareiss(std::vector<std::vector<Int>> a) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    Int prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t pivot = m;
        for (std::size_t i = r; i < m; ++i) {
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == m) continue;
        if (pivot != r) {
            std::swap(a[pivot], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    Int d = 0;
    if (m == n && r == n) d = sign * prev;
    if (r == 0 && m == n) d = (n == 0) ? 1 : 0;
    return {r, d};
}

std::vector<std::vector<Int>> to_rows(const IntMatrix& m) {
    std::vector<std::vector<Int>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
    return rows;
}

}  // namespace

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
    return bareiss(to_rows(m)).second;
}

std::size_t rank(const IntMatrix& m) { return bareiss(to_rows(m)).first; }

std::size_t rank_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return 0;
    return bareiss(rows).first;
}

std::optional<RatVector> solve_exact(const IntMatrix& a, const RatVector& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve_exact: matrix is not square");
    if (b.size() != a.rows()) throw std::invalid_argument("solve_exact: size mismatch");
    const std::size_t n = a.rows();
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rational(a.at(i, j));
        w[i][n] = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t i = c; i < n; ++i) {
            if (w[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) return std::nullopt;
        std::swap(w[pivot], w[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w[i][c] == 0) continue;
            const Rational f = w[i][c] / w[c][c];
            for (std::size_t j = c; j <= n; ++j) w[i][j] -= f * w[c][j];
        }
    }
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = w[i][n] / w[i][i];
    return x;
}

IntMatrix inverse_unimodular(const IntMatrix& n) {
    if (n.rows() != n.cols()) throw std::invalid_argument("inverse_unimodular: matrix is not square");
    const Int d = det(n);
    if (d != 1 && d != -1) throw std::domain_error("inverse_unimodular: determinant is not +-1");
    const std::size_t k = n.rows();
    IntMatrix inv(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        RatVector e(k, Rational(0));
        e[j] = 1;
        const auto col = solve_exact(n, e);
        for (std::size_t i = 0; i < k; ++i) {
            const Rational& v = (*col)[i];
            if (denominator(v) != 1) throw std::domain_error("inverse_unimodular: non-integer inverse");
            inv.at(i, j) = numerator(v);
        }
    }
    return inv;
}

Int content(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& e : v) g = boost::multiprecision::gcd(g, e);
    return boost::multiprecision::abs(g);
}

bool is_primitive(const std::vector<Int>& v) {
    const Int g = content(v);
    if (g == 0) throw std::domain_error("is_primitive: zero vector");
    return g == 1;
}

std::vector<Int> make_primitive(const std::vector<Int>& v) {
    const Int g = content(v);
    if (g == 0) throw std::domain_error("make_primitive: zero vector");
    std::vector<Int> out(v);
    for (Int& e : out) e /= g;
    return out;
}

IntMatrix delete_columns(const IntMatrix& m, const std::vector<std::size_t>& keep) {
    if (keep.empty()) throw std::invalid_argument("delete_columns: empty index set");
    std::set<std::size_t> idx(keep.begin(), keep.end());
    for (std::size_t j : idx) {
        if (j >= m.cols()) throw std::invalid_argument("delete_columns: column index out of range");
    }
    IntMatrix out(m.rows(), idx.size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t c = 0;
        for (std::size_t j : idx) out.at(i, c++) = m.at(i, j);
    }
    return out;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: size mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& f = a.at(i, k);
            if (f == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += f * b.at(k, j);
        }
    }
    return out;
}

std::vector<Int> vecmat(const std::vector<Int>& v, const IntMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vecmat: size mismatch");
    std::vector<Int> out(m.cols(), Int(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
    }
    return out;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    // Column reduction of [M; I] by unimodular column operations: columns whose
    // M-part becomes zero have kernel vectors in the identity part.
    std::vector<std::vector<Int>> top(rows, std::vector<Int>(cols));
    std::vector<std::vector<Int>> bot(cols, std::vector<Int>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) top[i][j] = m.at(i, j);
    }
    for (std::size_t j = 0; j < cols; ++j) bot[j][j] = 1;

    auto col_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < rows; ++i) top[i][dst] -= q * top[i][src];
        for (std::size_t i = 0; i < cols; ++i) bot[i][dst] -= q * bot[i][src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(top[i][a], top[i][b]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(bot[i][a], bot[i][b]);
    };

    std::size_t active = 0;  // columns < active are pivot columns of processed rows
    for (std::size_t r = 0; r < rows && active < cols; ++r) {
        while (true) {
            // Find the active column with nonzero entry of minimal absolute value.
            std::size_t best = cols;
            for (std::size_t j = active; j < cols; ++j) {
                if (top[r][j] == 0) continue;
                if (best == cols ||
                    boost::multiprecision::abs(top[r][j]) < boost::multiprecision::abs(top[r][best])) {
                    best = j;
                }
            }
            if (best == cols) break;  // row is zero on active columns
            bool reduced_all = true;
            for (std::size_t j = active; j < cols; ++j) {
                if (j == best || top[r][j] == 0) continue;
                const Int q = top[r][j] / top[r][best];
                col_sub(j, best, q);
                if (top[r][j] != 0) reduced_all = false;
            }
            if (reduced_all) {
                col_swap(active, best);
                ++active;
                break;
            }
        }
    }
    std::vector<std::vector<Int>> kernel;
    for (std::size_t j = active; j < cols; ++j) {
        std::vector<Int> v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = bot[i][j];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace fano
