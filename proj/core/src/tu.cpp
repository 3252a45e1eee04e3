#include "fano/tu.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "fano/linalg.hpp"
#include "internal.hpp"

namespace fano {
namespace {

// Bareiss determinant for small integer matrices; all divisions are exact and
// intermediates are minors of the input, so int64 is safe for entries in
// {-1,0,1} up to ~12x12.
long long det_small(std::vector<std::vector<long long>>& a) {
    const std::size_t k = a.size();
    long long sign = 1, prev = 1;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t p = i;
        while (p < k && a[p][i] == 0) ++p;
        if (p == k) return 0;
        if (p != i) {
            std::swap(a[p], a[i]);
            sign = -sign;
        }
        for (std::size_t r = i + 1; r < k; ++r) {
            for (std::size_t c = i + 1; c < k; ++c)
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
            a[r][i] = 0;
        }
        prev = a[i][i];
    }
    return sign * a[k - 1][k - 1];
}

bool entries_small(const IntMatrix& m, std::vector<std::vector<long long>>& grid) {
    grid.assign(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int& e = m.at(i, j);
            if (e < -1 || e > 1) return false;
            grid[i][j] = static_cast<long long>(e);
        }
    }
    return true;
}

}  // namespace

TUReport is_totally_unimodular(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int& e = m.at(i, j);
            if (e < -1 || e > 1) return {false, TUWitness{{i}, {j}, e}};
        }
    }
    std::vector<std::vector<long long>> grid;
    entries_small(m, grid);

    const std::size_t kmax = std::min(m.rows(), m.cols());
    std::vector<std::vector<long long>> buf;
    TUReport report{true, std::nullopt};
    for (std::size_t k = 2; k <= kmax && report.is_tu; ++k) {
        buf.assign(k, std::vector<long long>(k));
        detail::for_each_combination(m.rows(), k, [&](const std::vector<std::size_t>& ri) {
            detail::for_each_combination(m.cols(), k, [&](const std::vector<std::size_t>& ci) {
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) buf[a][b] = grid[ri[a]][ci[b]];
                const long long d = det_small(buf);
                if (d < -1 || d > 1) {
                    report = {false, TUWitness{ri, ci, Int(d)}};
                    return false;
                }
                return true;
            });
            return report.is_tu;
        });
    }
    return report;
}

IntMatrix standard_form(const LatticePolytope& p, std::size_t facet_index) {
    const auto& fs = p.facets();
    if (facet_index >= fs.size()) throw std::invalid_argument("standard_form: facet index out of range");
    const auto& f = fs[facet_index];
    if (f.vertex_indices.size() != p.ambient_dim())
        throw std::domain_error("standard_form: facet vertex set is not a basis");
    std::vector<std::vector<Int>> rows;
    rows.reserve(f.vertex_indices.size());
    for (std::size_t i : f.vertex_indices) rows.push_back(p.vertex(i));
    const IntMatrix inv = inverse_unimodular(IntMatrix::from_rows(rows));
    return matmul(p.vertices(), inv);
}

std::optional<RowSplit> row_split(const IntMatrix& m, const std::vector<std::size_t>& rows) {
    const std::size_t k = rows.size();
    if (k > 30) throw std::invalid_argument("row_split: collection too large");
    for (std::size_t i : rows) {
        if (i >= m.rows()) throw std::invalid_argument("row_split: row index out of range");
    }

    const std::size_t n = m.cols();
    auto eval = [&](std::uint32_t minus_mask) -> std::optional<RowSplit> {
        std::vector<Int> sum(n, Int(0));
        for (std::size_t i = 0; i < k; ++i) {
            const bool neg = (minus_mask >> i) & 1u;
            for (std::size_t c = 0; c < n; ++c) {
                const Int& e = m.at(rows[i], c);
                if (neg)
                    sum[c] -= e;
                else
                    sum[c] += e;
            }
        }
        for (const Int& v : sum) {
            if (v < -1 || v > 1) return std::nullopt;
        }
        RowSplit rs;
        rs.sum = std::move(sum);
        for (std::size_t i = 0; i < k; ++i) {
            if ((minus_mask >> i) & 1u)
                rs.minus.push_back(rows[i]);
            else
                rs.plus.push_back(rows[i]);
        }
        return rs;
    };

    std::set<std::uint32_t> tried;
    for (std::size_t t = 1; t + 1 <= k && k >= 2; ++t) {
        const std::uint32_t mask = ((1u << t) - 1u) << (k - t);
        tried.insert(mask);
        if (auto rs = eval(mask)) return rs;
    }
    tried.insert(0);
    if (auto rs = eval(0)) return rs;
    for (std::uint32_t mask = 1; k > 0 && mask < (1u << k); ++mask) {
        if (tried.count(mask)) continue;
        if (auto rs = eval(mask)) return rs;
    }
    return std::nullopt;
}

bool ghouila_houri_is_tu(const IntMatrix& m) {
    std::vector<std::vector<long long>> grid;
    if (!entries_small(m, grid)) return false;
    const std::size_t rows = m.rows(), n = m.cols();
    if (rows > 24) throw std::invalid_argument("ghouila_houri_is_tu: too many rows");

    std::vector<long long> sum(n);
    for (std::uint32_t mask = 1; mask < (1u << rows); ++mask) {
        bool found = false;
        std::uint32_t sub = mask;
        while (true) {
            std::fill(sum.begin(), sum.end(), 0);
            for (std::size_t i = 0; i < rows; ++i) {
                if (!((mask >> i) & 1u)) continue;
                const long long s = ((sub >> i) & 1u) ? -1 : 1;
                for (std::size_t c = 0; c < n; ++c) sum[c] += s * grid[i][c];
            }
            bool ok = true;
            for (std::size_t c = 0; c < n; ++c) {
                if (sum[c] < -1 || sum[c] > 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                found = true;
                break;
            }
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
        if (!found) return false;
    }
    return true;
}

IntMatrix matroid_dual_matrix(const IntMatrix& m) {
    const std::size_t rows = m.rows(), n = m.cols();

    bool all_zero = true;
    for (std::size_t i = 0; i < rows && all_zero; ++i)
        for (std::size_t j = 0; j < n && all_zero; ++j)
            if (m.at(i, j) != 0) all_zero = false;
    if (all_zero) return IntMatrix::identity(rows);

    auto identity_top = [&]() {
        if (rows < n) return false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (m.at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    };
    auto identity_bottom = [&]() {
        if (rows < n) return false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (m.at(rows - n + i, j) != (i == j ? 1 : 0)) return false;
        return true;
    };

    if (identity_top()) {
        const std::size_t r = rows - n;
        if (r == 0) return IntMatrix(rows, 1);
        IntMatrix out(rows, r);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < r; ++j) out.at(i, j) = -m.at(n + j, i);
        for (std::size_t j = 0; j < r; ++j) out.at(n + j, j) = 1;
        return out;
    }
    if (identity_bottom()) {
        const std::size_t t = rows - n;
        if (t == 0) return IntMatrix(rows, 1);
        IntMatrix out(rows, t);
        for (std::size_t i = 0; i < t; ++i) out.at(i, i) = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < t; ++j) out.at(t + i, j) = -m.at(j, i);
        return out;
    }
    throw std::invalid_argument("matroid_dual_matrix: no identity block heads or tails the matrix");
}

IntMatrix k_sum(const IntMatrix& m1, const IntMatrix& m2, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("k_sum: k must be 1, 2 or 3");
    if (!is_totally_unimodular(m1).is_tu || !is_totally_unimodular(m2).is_tu)
        throw std::domain_error("k_sum: operand is not totally unimodular");

    const std::size_t p = m1.rows(), q = m1.cols(), r = m2.rows(), s = m2.cols();
    auto expect = [](bool cond) {
        if (!cond) throw std::invalid_argument("k_sum: operand does not match the template shape");
    };

    if (k == 1) {
        IntMatrix out(p + r, q + s);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < q; ++j) out.at(i, j) = m1.at(i, j);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < s; ++j) out.at(p + i, q + j) = m2.at(i, j);
        return out;
    }

    if (k == 2) {
        expect(p >= 2 && q >= 2 && r >= 2 && s >= 2);
        for (std::size_t j = 0; j < q; ++j) expect(m1.at(p - 1, j) == (j == q - 1 ? 1 : 0));
        for (std::size_t j = 0; j < s; ++j) expect(m2.at(0, j) == (j == 0 ? 1 : 0));

        IntMatrix out(p - 1 + r - 1, q - 1 + 1 + s - 1);
        for (std::size_t i = 0; i + 1 < p; ++i) {
            for (std::size_t j = 0; j + 1 < q; ++j) out.at(i, j) = m1.at(i, j);
            out.at(i, q - 1) = m1.at(i, q - 1);
        }
        for (std::size_t i = 0; i + 1 < r; ++i) {
            out.at(p - 1 + i, q - 1) = m2.at(i + 1, 0);
            for (std::size_t j = 0; j + 1 < s; ++j) out.at(p - 1 + i, q + j) = m2.at(i + 1, j + 1);
        }
        return out;
    }

    expect(p >= 4 && q >= 3 && r >= 4 && s >= 3);
    const Int tail1[3][2] = {{1, 1}, {1, 0}, {0, 1}};
    for (std::size_t t = 0; t < 3; ++t) {
        for (std::size_t j = 0; j < q; ++j) {
            const Int want = j + 2 >= q ? tail1[t][j - (q - 2)] : Int(0);
            expect(m1.at(p - 3 + t, j) == want);
        }
    }
    const Int head2[3][2] = {{1, 1}, {1, 0}, {0, 1}};
    for (std::size_t t = 0; t < 3; ++t) {
        for (std::size_t j = 0; j < s; ++j) {
            const Int want = j < 2 ? head2[t][j] : Int(0);
            expect(m2.at(t, j) == want);
        }
    }

    IntMatrix out(p - 3 + r - 3, q - 2 + 2 + s - 2);
    for (std::size_t i = 0; i + 3 < p; ++i) {
        for (std::size_t j = 0; j + 2 < q; ++j) out.at(i, j) = m1.at(i, j);
        out.at(i, q - 2) = m1.at(i, q - 2);
        out.at(i, q - 1) = m1.at(i, q - 1);
    }
    for (std::size_t i = 0; i + 3 < r; ++i) {
        out.at(p - 3 + i, q - 2) = m2.at(i + 3, 0);
        out.at(p - 3 + i, q - 1) = m2.at(i + 3, 1);
        for (std::size_t j = 0; j + 2 < s; ++j) out.at(p - 3 + i, q + j) = m2.at(i + 3, j + 2);
    }
    return out;
}

bool is_graphic_matrix(const IntMatrix& m) {
    auto columns_ok = [](const IntMatrix& a) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            int nonzero = 0;
            Int colsum(0);
            for (std::size_t i = 0; i < a.rows(); ++i) {
                const Int& e = a.at(i, j);
                if (e < -1 || e > 1) return false;
                if (e != 0) {
                    ++nonzero;
                    colsum += e;
                }
            }
            if (nonzero == 0 || nonzero > 2) return false;
            if (nonzero == 2 && colsum != 0) return false;
        }
        return true;
    };
    return columns_ok(m) || columns_ok(m.transpose());
}

}  // namespace fano
