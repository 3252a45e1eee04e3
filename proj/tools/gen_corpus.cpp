// Enumerates smooth Fano polytopes of a fixed dimension up to unimodular
// equivalence and writes them as a JSON-lines corpus.
//
// The search roots every polytope at a special facet placed on the standard
// basis (a facet whose cone contains the vertex sum; every complete fan has
// one). In that position each further vertex v with level l = <1,v> satisfies
//   l in [-n, 0],   sum of all non-root levels >= -n,   v_j >= l - 1,
// so the candidate vertices form a small finite pool. Facet fans are grown by
// ridge expansion: the primitive cofactor vector h vanishing on a ridge has
// <h, x> = -1 against the dropped vertex, and unimodularity of the completed
// facet forces <h, w> = 1, making the neighbouring normal u + (1 - <u,w>) h.
// Every closed fan is certified through the library before being reduced to a
// canonical representative over all special-facet rebasings.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fano/linalg.hpp"
#include "fano/polytope.hpp"
#include "fano/types.hpp"

namespace {

using Vec = std::vector<long long>;

long long dot_ll(const Vec& a, const Vec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

long long det_ll(std::vector<Vec> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    long long prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = static_cast<long long>(
                    (static_cast<__int128>(m[k][k]) * m[i][j] -
                     static_cast<__int128>(m[i][k]) * m[k][j]) /
                    prev);
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

long long gcd_ll(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct FacetRec {
    std::vector<std::size_t> verts;  // sorted vertex indices
    Vec normal;
};

// Candidate vertices compatible with a special root facet: primitive, level in
// [-n, 0], every coordinate >= level - 1.
std::vector<Vec> candidate_pool(std::size_t n) {
    std::vector<Vec> pool;
    for (long long level = 0; level >= -static_cast<long long>(n); --level) {
        Vec v(n, level - 1);
        // odometer over coordinates shifted by (level - 1)
        long long budget = level - static_cast<long long>(n) * (level - 1);
        std::vector<long long> shift(n, 0);
        std::size_t i = 0;
        while (true) {
            long long used = 0;
            for (std::size_t j = 0; j < n; ++j) used += shift[j];
            if (used <= budget) {
                Vec w(n);
                long long rem = budget - used;
                // last coordinate absorbs the remainder exactly once per prefix
                for (std::size_t j = 0; j + 1 < n; ++j) w[j] = level - 1 + shift[j];
                w[n - 1] = level - 1 + shift[n - 1] + rem;
                (void)v;
                if (shift[n - 1] == 0) {
                    long long g = 0;
                    for (auto c : w) g = gcd_ll(g, c);
                    if (g == 1) pool.push_back(w);
                }
            }
            // advance odometer over the first n-1 coordinates
            for (i = 0; i < n; ++i) {
                if (i == n - 1) break;
                if (shift[i] < budget) {
                    ++shift[i];
                    break;
                }
                shift[i] = 0;
            }
            if (i == n - 1) break;
        }
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    return pool;
}

struct Stats {
    long long nodes = 0;
    long long leaves = 0;
    long long rejected = 0;  // leaves failing certification
};

struct Search {
    std::size_t n;
    std::size_t max_verts;
    std::vector<Vec> pool;
    bool progress = false;
    std::optional<Vec> forced_first;  // restrict the first expansion to one candidate

    std::vector<Vec> verts;
    std::map<Vec, std::size_t> vert_index;
    std::vector<FacetRec> facets;
    std::map<std::vector<std::size_t>, std::size_t> open;
    std::set<std::vector<std::size_t>> closed;
    long long deficit = 0;

    std::map<std::vector<std::vector<fano::Int>>, bool> classes;
    Stats stats;

    explicit Search(std::size_t dim) : n(dim), max_verts(3 * dim) {
        pool = candidate_pool(n);
        for (std::size_t i = 0; i < n; ++i) {
            Vec e(n, 0);
            e[i] = 1;
            verts.push_back(e);
            vert_index[e] = i;
        }
        FacetRec root;
        for (std::size_t i = 0; i < n; ++i) root.verts.push_back(i);
        root.normal = Vec(n, 1);
        facets.push_back(root);
        for (std::size_t skip = 0; skip < n; ++skip) {
            std::vector<std::size_t> ridge;
            for (std::size_t i = 0; i < n; ++i)
                if (i != skip) ridge.push_back(i);
            open[ridge] = 0;
        }
    }

    void run() {
        std::vector<std::size_t> alive(pool.size());
        for (std::size_t i = 0; i < pool.size(); ++i) alive[i] = i;
        dfs(alive);
    }

    Vec ridge_vector(const std::vector<std::size_t>& ridge, std::size_t dropped) const {
        std::vector<Vec> rows;
        for (auto i : ridge) rows.push_back(verts[i]);
        Vec h(n);
        int sign = 1;
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Vec> sub;
            for (const auto& r : rows) {
                Vec s;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != k) s.push_back(r[j]);
                sub.push_back(std::move(s));
            }
            h[k] = sign * det_ll(std::move(sub));
            sign = -sign;
        }
        long long hx = dot_ll(h, verts[dropped]);
        if (hx > 0)
            for (auto& c : h) c = -c;
        return h;
    }

    void dfs(const std::vector<std::size_t>& alive) {
        ++stats.nodes;
        if (open.empty()) {
            leaf();
            return;
        }
        const auto ridge = open.begin()->first;
        const std::size_t gidx = open.begin()->second;
        const FacetRec g = facets[gidx];
        std::size_t dropped = SIZE_MAX;
        for (auto i : g.verts)
            if (std::find(ridge.begin(), ridge.end(), i) == ridge.end()) dropped = i;
        Vec h = ridge_vector(ridge, dropped);
        if (dot_ll(h, verts[dropped]) != -1)
            throw std::logic_error("gen_corpus: ridge cofactor vector not unimodular");

        // existing vertices first, then fresh pool entries
        for (std::size_t vi = 0; vi < verts.size(); ++vi) {
            if (vi == dropped) continue;
            if (std::find(ridge.begin(), ridge.end(), vi) != ridge.end()) continue;
            try_candidate(ridge, g, h, verts[vi], vi, alive);
        }
        bool first = facets.size() == 1;
        for (auto pi : alive) {
            const Vec& w = pool[pi];
            if (vert_index.count(w)) continue;
            if (first && !first_move_allowed(w)) continue;
            try_candidate(ridge, g, h, w, SIZE_MAX, alive);
        }
    }

    // The initial state is symmetric under permutations of the first n-1
    // coordinates (they fix the first expanded ridge setwise), so the first new
    // vertex may be normalised to have those coordinates non-increasing.
    bool first_move_allowed(const Vec& w) const {
        if (forced_first) return w == *forced_first;
        for (std::size_t j = 0; j + 2 < n; ++j)
            if (w[j] < w[j + 1]) return false;
        return true;
    }

    std::vector<Vec> root_moves() {
        std::vector<Vec> moves;
        const auto ridge = open.begin()->first;
        const FacetRec& g = facets[0];
        std::size_t dropped = n - 1;
        Vec h = ridge_vector(ridge, dropped);
        for (const auto& w : pool) {
            if (vert_index.count(w)) continue;
            bool sorted = true;
            for (std::size_t j = 0; j + 2 < n; ++j)
                if (w[j] < w[j + 1]) sorted = false;
            if (!sorted) continue;
            if (dot_ll(h, w) != 1) continue;
            if (dot_ll(g.normal, w) > 0) continue;
            moves.push_back(w);
        }
        return moves;
    }

    void try_candidate(const std::vector<std::size_t>& ridge, const FacetRec& g, const Vec& h,
                       const Vec& w, std::size_t existing, const std::vector<std::size_t>& alive) {
        if (dot_ll(h, w) != 1) return;
        long long gw = dot_ll(g.normal, w);
        if (gw > 0) return;
        long long t = 1 - gw;
        Vec u(n);
        for (std::size_t j = 0; j < n; ++j) u[j] = g.normal[j] + t * h[j];

        bool fresh = existing == SIZE_MAX;
        if (fresh) {
            if (verts.size() + 1 > max_verts) return;
            long long level = 0;
            for (auto c : w) level += c;
            if (deficit + level < -static_cast<long long>(n)) return;
        }
        // convexity: every current vertex off the new facet must be strictly below
        for (std::size_t vi = 0; vi < verts.size(); ++vi) {
            if (std::find(ridge.begin(), ridge.end(), vi) != ridge.end()) continue;
            if (!fresh && vi == existing) continue;
            if (dot_ll(u, verts[vi]) > 0) return;
        }

        // commit vertex
        std::size_t widx = existing;
        long long level = 0;
        if (fresh) {
            widx = verts.size();
            verts.push_back(w);
            vert_index[w] = widx;
            for (auto c : w) level += c;
            deficit += level;
        }

        FacetRec f;
        f.verts = ridge;
        f.verts.push_back(widx);
        std::sort(f.verts.begin(), f.verts.end());
        f.normal = u;

        // ridge bookkeeping with undo support
        std::vector<std::vector<std::size_t>> newly_open, newly_closed;
        bool bad = false;
        for (std::size_t skip = 0; skip < n && !bad; ++skip) {
            std::vector<std::size_t> r;
            for (std::size_t i = 0; i < n; ++i)
                if (i != skip) r.push_back(f.verts[i]);
            if (closed.count(r)) {
                bad = true;
                break;
            }
            auto it = open.find(r);
            if (it != open.end()) {
                newly_closed.push_back(r);
            } else {
                newly_open.push_back(r);
            }
        }

        if (!bad) {
            facets.push_back(f);
            std::size_t fidx = facets.size() - 1;
            std::vector<std::pair<std::vector<std::size_t>, std::size_t>> reopen;
            for (const auto& r : newly_closed) {
                reopen.emplace_back(r, open[r]);
                open.erase(r);
                closed.insert(r);
            }
            for (const auto& r : newly_open) open[r] = fidx;

            std::vector<std::size_t> next_alive;
            for (auto pi : alive)
                if (dot_ll(u, pool[pi]) <= 0) next_alive.push_back(pi);
            dfs(next_alive);

            for (const auto& r : newly_open) open.erase(r);
            for (const auto& [r, owner] : reopen) {
                closed.erase(r);
                open[r] = owner;
            }
            facets.pop_back();
        }

        if (fresh) {
            vert_index.erase(w);
            verts.pop_back();
            deficit -= level;
        }
    }

    void leaf() {
        ++stats.leaves;
        std::vector<std::vector<fano::Int>> rows;
        for (const auto& v : verts) {
            std::vector<fano::Int> r;
            for (auto c : v) r.emplace_back(c);
            rows.push_back(std::move(r));
        }
        fano::LatticePolytope p = fano::LatticePolytope::from_rows(rows);
        if (p.vertex_count() != verts.size() || !is_smooth_fano(p) ||
            p.facets().size() != facets.size()) {
            ++stats.rejected;
            return;
        }
        classes[canonical_rows(p)] = true;
        if (progress && stats.leaves % 1000 == 0)
            std::cerr << "  leaves " << stats.leaves << "  classes " << classes.size() << "\n";
    }

    std::vector<std::vector<fano::Int>> canonical_rows(const fano::LatticePolytope& p) const {
        using fano::Int;
        std::vector<Int> sigma(n, 0);
        for (std::size_t i = 0; i < p.vertex_count(); ++i) {
            auto v = p.vertex(i);
            for (std::size_t j = 0; j < n; ++j) sigma[j] += v[j];
        }
        fano::RatVector sigma_q(n);
        for (std::size_t j = 0; j < n; ++j) sigma_q[j] = fano::Rational(sigma[j]);

        std::vector<std::vector<Int>> best;
        for (const auto& f : p.facets()) {
            std::vector<std::vector<Int>> frows;
            for (auto i : f.vertex_indices) frows.push_back(p.vertex(i));
            auto fm = fano::IntMatrix::from_rows(frows);
            auto lam = fano::solve_exact(fm.transpose(), sigma_q);
            if (!lam) continue;
            bool special = true;
            for (const auto& c : *lam)
                if (c < 0) special = false;
            if (!special) continue;

            std::vector<std::size_t> ord(n);
            for (std::size_t i = 0; i < n; ++i) ord[i] = i;
            do {
                std::vector<std::vector<Int>> basis;
                for (std::size_t i = 0; i < n; ++i) basis.push_back(frows[ord[i]]);
                auto t = fano::inverse_unimodular(fano::IntMatrix::from_rows(basis));
                auto w = fano::matmul(p.vertices(), t);
                std::vector<std::vector<Int>> rows;
                for (std::size_t i = 0; i < w.rows(); ++i) rows.push_back(w.row(i));
                std::sort(rows.begin(), rows.end());
                if (best.empty() || rows < best) best = std::move(rows);
            } while (std::next_permutation(ord.begin(), ord.end()));
        }
        if (best.empty())
            throw std::logic_error("gen_corpus: certified polytope has no special facet");
        return best;
    }
};

std::string pad4(std::size_t v) {
    std::string s = std::to_string(v);
    return std::string(s.size() < 4 ? 4 - s.size() : 0, '0') + s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"enumerate smooth Fano polytopes up to unimodular equivalence"};
    std::size_t dim = 0;
    std::string out = "-";
    bool progress = false;
    std::size_t jobs = 1;
    app.add_option("--dim", dim, "polytope dimension (2..6)")->required();
    app.add_option("--out", out, "output file (default stdout)");
    app.add_option("--jobs", jobs, "worker threads (0 = hardware)");
    app.add_flag("--progress", progress, "report progress on stderr");
    CLI11_PARSE(app, argc, argv);

    if (dim < 2 || dim > 6) {
        std::cerr << "gen_corpus: --dim must be between 2 and 6\n";
        return 2;
    }
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

    try {
        Search search(dim);
        search.progress = progress;
        if (jobs <= 1) {
            search.run();
        } else {
            auto moves = search.root_moves();
            std::atomic<std::size_t> next{0};
            std::atomic<long long> done{0};
            std::mutex merge_mutex;
            auto worker = [&]() {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= moves.size()) return;
                    Search branch(dim);
                    branch.forced_first = moves[i];
                    branch.run();
                    std::lock_guard<std::mutex> lock(merge_mutex);
                    for (auto& [rows, flag] : branch.classes) search.classes[rows] = flag;
                    search.stats.nodes += branch.stats.nodes;
                    search.stats.leaves += branch.stats.leaves;
                    search.stats.rejected += branch.stats.rejected;
                    if (progress)
                        std::cerr << "  branch " << ++done << "/" << moves.size() << "  classes "
                                  << search.classes.size() << "\n";
                }
            };
            std::vector<std::thread> threads;
            for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
            for (auto& t : threads) t.join();
        }

        std::ostream* os = &std::cout;
        std::ofstream file;
        if (out != "-") {
            file.open(out);
            if (!file) {
                std::cerr << "gen_corpus: cannot open " << out << "\n";
                return 2;
            }
            os = &file;
        }
        std::size_t idx = 0;
        for (const auto& [rows, unused] : search.classes) {
            (void)unused;
            nlohmann::json rec;
            rec["id"] = "SF." + std::to_string(dim) + "." + pad4(idx++);
            rec["dim"] = dim;
            nlohmann::json verts = nlohmann::json::array();
            for (const auto& r : rows) {
                nlohmann::json row = nlohmann::json::array();
                for (const auto& c : r) row.push_back(c.convert_to<long long>());
                verts.push_back(row);
            }
            rec["vertices"] = verts;
            (*os) << rec.dump() << "\n";
        }
        std::cerr << "dim " << dim << ": " << search.classes.size() << " classes, "
                  << search.stats.leaves << " leaves, " << search.stats.nodes << " nodes, "
                  << search.stats.rejected << " rejected\n";
    } catch (const std::exception& e) {
        std::cerr << "gen_corpus: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
