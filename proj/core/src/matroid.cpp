#include "fano/matroid.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fano/linalg.hpp"
#include "fano/tu.hpp"
#include "internal.hpp"

namespace fano {
namespace {

std::size_t rank_small(std::vector<std::vector<long long>> a) {
    const std::size_t m = a.size();
    if (m == 0) return 0;
    const std::size_t n = a[0].size();
    std::size_t r = 0;
    long long prev = 1;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

struct Dsu {
    std::vector<std::size_t> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

using Edge = std::pair<std::size_t, std::size_t>;

// True iff the edges indexed by mask form one simple cycle (a self-loop counts).
bool is_cycle_in_graph(std::uint32_t mask, const std::vector<Edge>& edges) {
    std::map<std::size_t, int> degree;
    std::vector<std::pair<std::size_t, std::size_t>> used;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!((mask >> e) & 1u)) continue;
        degree[edges[e].first] += 1;
        degree[edges[e].second] += 1;
        used.push_back(edges[e]);
    }
    if (used.empty()) return false;
    for (const auto& [v, d] : degree) {
        if (d != 2) return false;
    }
    Dsu dsu(0);
    std::map<std::size_t, std::size_t> id;
    for (const auto& [v, d] : degree) {
        id[v] = dsu.parent.size();
        dsu.parent.push_back(dsu.parent.size());
    }
    std::size_t comps = degree.size();
    for (const auto& [a, b] : used) {
        if (a != b && dsu.unite(id[a], id[b])) --comps;
    }
    return comps == 1;
}

struct RealizationSearch {
    const LinearMatroid& matroid;
    std::size_t m0;
    std::vector<std::size_t> basis;        // greedy lex basis
    std::vector<std::size_t> nonbasis;     // non-basis, non-loop elements
    std::vector<std::size_t> loops;        // zero rows
    std::vector<std::uint32_t> circuit_masks;
    std::vector<std::uint32_t> fc_masks;   // fundamental circuit per nonbasis element
    std::size_t pool = 0;
    const std::function<bool(const GraphRealization&)>* fn = nullptr;
    bool stopped = false;

    std::vector<Edge> edges;               // per element, valid at leaves
    std::vector<Edge> basis_edges;         // per basis position during DFS

    bool leaf(std::size_t used, Dsu& /*dsu*/) {
        for (std::size_t i = 0; i < basis.size(); ++i) edges[basis[i]] = basis_edges[i];
        for (std::size_t e : loops) edges[e] = {0, 0};

        for (std::size_t k = 0; k < nonbasis.size(); ++k) {
            const std::uint32_t path_mask = fc_masks[k] & ~(1u << nonbasis[k]);
            std::map<std::size_t, int> degree;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (!((path_mask >> basis[i]) & 1u)) continue;
                degree[basis_edges[i].first] += 1;
                degree[basis_edges[i].second] += 1;
            }
            std::vector<std::size_t> ends;
            for (const auto& [v, d] : degree) {
                if (d > 2) return true;
                if (d == 1) ends.push_back(v);
            }
            if (ends.size() != 2) return true;
            edges[nonbasis[k]] = {std::min(ends[0], ends[1]), std::max(ends[0], ends[1])};
        }

        // Cycle space check: fundamental cycles of the nonbasis elements (and
        // loops) span all cycles over GF(2); the graph realizes the matroid iff
        // every matroid circuit is a graph cycle and the cycle counts agree.
        for (std::uint32_t c : circuit_masks) {
            if (!is_cycle_in_graph(c, edges)) return true;
        }
        std::vector<std::uint32_t> fundamental;
        for (std::size_t k = 0; k < nonbasis.size(); ++k) fundamental.push_back(fc_masks[k]);
        for (std::size_t e : loops) fundamental.push_back(1u << e);
        const std::size_t nf = fundamental.size();
        if (nf > 20) throw std::invalid_argument("graphic realization search: corank too large");
        std::size_t cycles = 0;
        for (std::uint32_t combo = 1; combo < (1u << nf); ++combo) {
            std::uint32_t support = 0;
            for (std::size_t t = 0; t < nf; ++t) {
                if ((combo >> t) & 1u) support ^= fundamental[t];
            }
            if (is_cycle_in_graph(support, edges)) ++cycles;
        }
        if (cycles != circuit_masks.size()) return true;

        GraphRealization real;
        real.vertex_count = used;
        real.edges = edges;
        if (!(*fn)(real)) {
            stopped = true;
            return false;
        }
        return true;
    }

    bool dfs(std::size_t i, std::size_t used, Dsu& dsu) {
        if (stopped) return false;
        if (i == basis.size()) return leaf(used, dsu);

        auto try_edge = [&](std::size_t x, std::size_t y, std::size_t new_used) {
            Dsu saved = dsu;
            dsu.unite(x, y);
            basis_edges[i] = {x, y};
            const bool keep = dfs(i + 1, new_used, dsu);
            dsu = saved;
            return keep;
        };

        for (std::size_t x = 0; x < used; ++x) {
            for (std::size_t y = x + 1; y < used; ++y) {
                if (dsu.find(x) == dsu.find(y)) continue;
                if (!try_edge(x, y, used)) return false;
            }
        }
        if (used < pool) {
            for (std::size_t x = 0; x < used; ++x) {
                if (!try_edge(x, used, used + 1)) return false;
            }
        }
        if (used + 1 < pool) {
            if (!try_edge(used, used + 1, used + 2)) return false;
        }
        return true;
    }
};

std::vector<std::size_t> greedy_basis(const LinearMatroid& m) {
    std::vector<std::size_t> basis;
    for (std::size_t e = 0; e < m.size(); ++e) {
        basis.push_back(e);
        if (m.rank_of(basis) != basis.size()) basis.pop_back();
    }
    return basis;
}

}  // namespace

LinearMatroid::LinearMatroid(const IntMatrix& source) : src_(source) {
    bool tiny_entries = true, small_entries = true;
    for (std::size_t i = 0; i < src_.rows(); ++i) {
        for (std::size_t j = 0; j < src_.cols(); ++j) {
            const Int& e = src_.at(i, j);
            if (e < -1 || e > 1) tiny_entries = false;
            if (e < -100 || e > 100) small_entries = false;
        }
    }
    small_ = (tiny_entries && src_.cols() <= 20) || (small_entries && src_.cols() <= 6);
    if (small_) {
        grid_.assign(src_.rows(), std::vector<long long>(src_.cols()));
        for (std::size_t i = 0; i < src_.rows(); ++i)
            for (std::size_t j = 0; j < src_.cols(); ++j)
                grid_[i][j] = static_cast<long long>(src_.at(i, j));
    }
    std::vector<std::size_t> all(src_.rows());
    std::iota(all.begin(), all.end(), 0);
    full_rank_ = rank_of(all);
}

std::size_t LinearMatroid::rank_of(const std::vector<std::size_t>& subset) const {
    if (subset.empty()) return 0;
    for (std::size_t i : subset) {
        if (i >= src_.rows()) throw std::invalid_argument("rank_of: element out of range");
    }
    if (small_) {
        std::vector<std::vector<long long>> rows;
        rows.reserve(subset.size());
        for (std::size_t i : subset) rows.push_back(grid_[i]);
        return rank_small(std::move(rows));
    }
    std::vector<std::vector<Int>> rows;
    rows.reserve(subset.size());
    for (std::size_t i : subset) rows.push_back(src_.row(i));
    return rank_rows(rows);
}

bool LinearMatroid::independent(const std::vector<std::size_t>& subset) const {
    return rank_of(subset) == subset.size();
}

std::vector<std::vector<std::size_t>> circuits(const LinearMatroid& m, std::size_t max_elements) {
    if (m.size() > max_elements) throw std::invalid_argument("circuits: ground set too large");
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::uint32_t> masks;
    const std::size_t kmax = std::min(m.size(), m.rank() + 1);
    for (std::size_t k = 1; k <= kmax; ++k) {
        detail::for_each_combination(m.size(), k, [&](const std::vector<std::size_t>& idx) {
            std::uint32_t mask = 0;
            for (std::size_t e : idx) mask |= 1u << e;
            for (std::uint32_t c : masks) {
                if ((c & mask) == c) return true;
            }
            if (m.rank_of(idx) < k) {
                out.push_back(idx);
                masks.push_back(mask);
            }
            return true;
        });
    }
    return out;
}

void for_each_graphic_realization(const LinearMatroid& m,
                                  const std::function<bool(const GraphRealization&)>& fn,
                                  std::size_t max_elements) {
    if (m.size() > max_elements) throw std::invalid_argument("is_graphic_matroid: ground set too large");
    const std::size_t m0 = m.size();

    if (m.rank() == 0) {
        GraphRealization real;
        real.vertex_count = 1;
        real.edges.assign(m0, {0, 0});
        fn(real);
        return;
    }

    RealizationSearch s{m, m0, {}, {}, {}, {}, {}, 0, &fn, false, {}, {}};
    s.basis = greedy_basis(m);
    std::uint32_t basis_mask = 0;
    for (std::size_t b : s.basis) basis_mask |= 1u << b;

    const auto circ = circuits(m, max_elements);
    for (const auto& c : circ) {
        std::uint32_t mask = 0;
        for (std::size_t e : c) mask |= 1u << e;
        s.circuit_masks.push_back(mask);
    }

    for (std::size_t e = 0; e < m0; ++e) {
        if ((basis_mask >> e) & 1u) continue;
        if (m.rank_of({e}) == 0) {
            s.loops.push_back(e);
            continue;
        }
        s.nonbasis.push_back(e);
        std::uint32_t fc = 0;
        for (std::uint32_t c : s.circuit_masks) {
            if (((c >> e) & 1u) && (c & ~(basis_mask | (1u << e))) == 0) {
                fc = c;
                break;
            }
        }
        if (fc == 0) throw std::logic_error("fundamental circuit not found");
        s.fc_masks.push_back(fc);
    }

    // Matroid components (circuit co-membership) bound the vertex pool at
    // rank + #components: each graph component spends one extra vertex.
    Dsu comp(m0);
    for (std::uint32_t c : s.circuit_masks) {
        std::size_t first = m0;
        for (std::size_t e = 0; e < m0; ++e) {
            if (!((c >> e) & 1u)) continue;
            if (first == m0)
                first = e;
            else
                comp.unite(first, e);
        }
    }
    std::set<std::size_t> roots;
    for (std::size_t e = 0; e < m0; ++e) roots.insert(comp.find(e));
    s.pool = m.rank() + roots.size();

    s.edges.assign(m0, {0, 0});
    s.basis_edges.assign(s.basis.size(), {0, 0});
    Dsu dsu(s.pool);
    s.dfs(0, 0, dsu);
}

std::optional<GraphRealization> is_graphic_matroid(const LinearMatroid& m,
                                                   std::size_t max_elements) {
    std::optional<GraphRealization> out;
    for_each_graphic_realization(
        m,
        [&](const GraphRealization& real) {
            out = real;
            return false;
        },
        max_elements);
    return out;
}

bool has_r10_restriction(const LinearMatroid& m, std::size_t max_elements) {
    if (m.rank() != 5)
        throw std::domain_error("has_r10_restriction: only rank-5 matroids are supported");
    if (m.size() > max_elements)
        throw std::invalid_argument("has_r10_restriction: ground set too large");
    if (m.size() < 10) return false;

    static const std::vector<std::vector<std::size_t>> r10_circuits = [] {
        const LinearMatroid r10(fixture("R10"));
        return circuits(r10, 10);
    }();
    static const std::vector<std::uint32_t> r10_masks = [] {
        std::vector<std::uint32_t> masks;
        for (const auto& c : r10_circuits) {
            std::uint32_t mask = 0;
            for (std::size_t e : c) mask |= 1u << e;
            masks.push_back(mask);
        }
        return masks;
    }();

    auto fingerprint = [](const std::vector<std::uint32_t>& masks, std::size_t element) {
        std::map<int, int> by_size;
        for (std::uint32_t c : masks) {
            if ((c >> element) & 1u) by_size[__builtin_popcount(c)] += 1;
        }
        return std::vector<std::pair<int, int>>(by_size.begin(), by_size.end());
    };
    static const auto r10_fp = fingerprint(r10_masks, 0);
    static const auto r10_sizes = [] {
        std::multiset<int> sizes;
        for (std::uint32_t c : r10_masks) sizes.insert(__builtin_popcount(c));
        return sizes;
    }();

    const auto all_circuits = circuits(m, max_elements);
    bool found = false;
    detail::for_each_combination(m.size(), 10, [&](const std::vector<std::size_t>& sub) {
        if (m.rank_of(sub) != 5) return true;

        std::vector<std::size_t> pos(m.size(), SIZE_MAX);
        for (std::size_t i = 0; i < 10; ++i) pos[sub[i]] = i;
        std::vector<std::uint32_t> restriction;
        for (const auto& c : all_circuits) {
            std::uint32_t mask = 0;
            bool inside = true;
            for (std::size_t e : c) {
                if (pos[e] == SIZE_MAX) {
                    inside = false;
                    break;
                }
                mask |= 1u << pos[e];
            }
            if (inside) restriction.push_back(mask);
        }
        if (restriction.size() != r10_masks.size()) return true;
        std::multiset<int> sizes;
        for (std::uint32_t c : restriction) sizes.insert(__builtin_popcount(c));
        if (sizes != r10_sizes) return true;
        for (std::size_t q = 0; q < 10; ++q) {
            if (fingerprint(restriction, q) != r10_fp) return true;
        }

        const std::set<std::uint32_t> target(restriction.begin(), restriction.end());
        std::vector<std::size_t> image(10, SIZE_MAX);
        std::vector<bool> taken(10, false);
        std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
            if (k == 10) return true;
            for (std::size_t q = 0; q < 10; ++q) {
                if (taken[q]) continue;
                image[k] = q;
                taken[q] = true;
                bool ok = true;
                for (std::uint32_t c : r10_masks) {
                    if ((c >> k) & 1u) {
                        bool complete = true;
                        std::uint32_t mapped = 0;
                        for (std::size_t e = 0; e < 10 && complete; ++e) {
                            if (!((c >> e) & 1u)) continue;
                            if (image[e] == SIZE_MAX)
                                complete = false;
                            else
                                mapped |= 1u << image[e];
                        }
                        if (complete && !target.count(mapped)) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok && extend(k + 1)) return true;
                taken[q] = false;
                image[k] = SIZE_MAX;
            }
            return false;
        };
        if (extend(0)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

LatticePolytope polytope_from_digraph(const Digraph& g) {
    if (g.arrows.empty()) throw std::invalid_argument("polytope_from_digraph: no arrows");
    if (g.vertex_count < 2) throw std::invalid_argument("polytope_from_digraph: need at least 2 vertices");
    const std::size_t d = g.vertex_count;
    std::vector<std::vector<Int>> rows;
    rows.reserve(g.arrows.size());
    for (const auto& [i, j] : g.arrows) {
        if (i >= d || j >= d) throw std::invalid_argument("polytope_from_digraph: arrow endpoint out of range");
        if (i == j) throw std::invalid_argument("polytope_from_digraph: loops are not allowed");
        std::vector<Int> row(d - 1, Int(0));
        if (i != d - 1) row[i] += 1;
        if (j != d - 1) row[j] -= 1;
        rows.push_back(std::move(row));
    }
    return LatticePolytope::from_rows(rows);
}

SfpdgResult is_sfpdg(const LatticePolytope& p, long long budget_ms) {
    if (!static_cast<bool>(is_smooth_fano(p)))
        throw std::domain_error("is_sfpdg: polytope is not smooth Fano");
    if (!is_unimodular_polytope(p)) return {SearchStatus::none, std::nullopt};

    const auto start = std::chrono::steady_clock::now();
    auto expired = [&] {
        if (budget_ms <= 0) return false;
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        return elapsed.count() > budget_ms;
    };

    const std::size_t n = p.ambient_dim();
    const std::size_t m0 = p.vertex_count();
    const LinearMatroid matroid(p.vertices());

    SfpdgResult result{SearchStatus::none, std::nullopt};
    for_each_graphic_realization(matroid, [&](const GraphRealization& real) {
        if (expired()) {
            result.status = SearchStatus::timeout;
            return false;
        }
        if (real.vertex_count != n + 1) return true;

        // Spanning tree of the realization; its elements form a lattice basis
        // because P is unimodular and the tree spans the n+1 vertices.
        Dsu dsu(real.vertex_count);
        std::vector<std::size_t> tree;
        for (std::size_t e = 0; e < m0; ++e) {
            const auto [a, b] = real.edges[e];
            if (a != b && dsu.unite(a, b)) tree.push_back(e);
        }
        if (tree.size() != n) return true;

        std::vector<std::vector<Int>> basis_rows;
        for (std::size_t e : tree) basis_rows.push_back(p.vertex(e));
        const Int d = det(IntMatrix::from_rows(basis_rows));
        if (d != 1 && d != -1) return true;
        const IntMatrix inv_bm = inverse_unimodular(IntMatrix::from_rows(basis_rows));

        auto rho = [&](std::size_t a, std::size_t b) {
            std::vector<Int> row(n, Int(0));
            if (a != n) row[a] += 1;
            if (b != n) row[b] -= 1;
            return row;
        };

        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (expired()) {
                result.status = SearchStatus::timeout;
                return false;
            }
            std::vector<Edge> oriented(m0, {0, 0});
            std::vector<std::vector<Int>> bg_rows;
            for (std::size_t t = 0; t < n; ++t) {
                auto [a, b] = real.edges[tree[t]];
                if ((mask >> t) & 1u) std::swap(a, b);
                oriented[tree[t]] = {a, b};
                bg_rows.push_back(rho(a, b));
            }
            const IntMatrix t_mat = matmul(inv_bm, IntMatrix::from_rows(bg_rows));

            bool ok = true;
            for (std::size_t e = 0; e < m0 && ok; ++e) {
                if (std::find(tree.begin(), tree.end(), e) != tree.end()) continue;
                const auto [a, b] = real.edges[e];
                const auto image = vecmat(p.vertex(e), t_mat);
                if (image == rho(a, b))
                    oriented[e] = {a, b};
                else if (image == rho(b, a))
                    oriented[e] = {b, a};
                else
                    ok = false;
            }
            if (!ok) continue;

            Digraph g;
            g.vertex_count = n + 1;
            g.arrows = oriented;
            const auto pg = polytope_from_digraph(g);
            if (pg.full_dimensional() && unimodular_equivalent(p, pg)) {
                result = {SearchStatus::found, g};
                return false;
            }
        }
        return true;
    });
    return result;
}

}  // namespace fano
