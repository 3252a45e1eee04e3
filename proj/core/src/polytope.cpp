#include "fano/polytope.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "fano/linalg.hpp"
#include "internal.hpp"

namespace fano {
namespace {

struct Hyperplane {
    std::vector<Int> normal;
    Int level;
    std::vector<std::size_t> tight;
};

// Any nonzero vector orthogonal to the rows of diffs ((d-1) x d), via cofactors.
// Returns the zero vector when rank(diffs) < d-1.
std::vector<Int> cofactor_normal(const std::vector<std::vector<Int>>& diffs) {
    const std::size_t d = diffs[0].size();
    std::vector<Int> h(d);
    std::vector<std::vector<Int>> minor(diffs.size(), std::vector<Int>(d - 1));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t r = 0; r < diffs.size(); ++r) {
            std::size_t c = 0;
            for (std::size_t k = 0; k < d; ++k) {
                if (k != j) minor[r][c++] = diffs[r][k];
            }
        }
        h[j] = det(IntMatrix::from_rows(minor));
        if (j % 2 == 1) h[j] = -h[j];
    }
    return h;
}

// All supporting hyperplanes of conv(pts) meeting it in a (d-1)-face. pts must
// affinely span R^d. Deterministic order (first discovery over lexicographic
// d-subsets).
std::vector<Hyperplane> supporting_hyperplanes(const std::vector<std::vector<Int>>& pts,
                                               std::size_t d) {
    std::vector<Hyperplane> out;
    if (d == 1) {
        Int lo = pts[0][0], hi = pts[0][0];
        for (const auto& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        Hyperplane top{{Int(1)}, hi, {}}, bot{{Int(-1)}, -lo, {}};
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (pts[i][0] == hi) top.tight.push_back(i);
            if (pts[i][0] == lo) bot.tight.push_back(i);
        }
        out.push_back(std::move(top));
        out.push_back(std::move(bot));
        return out;
    }

    std::set<std::pair<std::vector<Int>, Int>> seen;
    detail::for_each_combination(pts.size(), d, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::vector<Int>> diffs(d - 1, std::vector<Int>(d));
        for (std::size_t r = 0; r + 1 < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) diffs[r][c] = pts[idx[r + 1]][c] - pts[idx[0]][c];
        }
        std::vector<Int> h = cofactor_normal(diffs);
        bool zero = std::all_of(h.begin(), h.end(), [](const Int& v) { return v == 0; });
        if (zero) return true;
        const Int g = content(h);
        for (auto& v : h) v /= g;
        Int b = dot(h, pts[idx[0]]);

        bool above = false, below = false;
        std::vector<Int> vals(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            vals[i] = dot(h, pts[i]);
            if (vals[i] > b) above = true;
            if (vals[i] < b) below = true;
        }
        if (above && below) return true;
        if (above) {
            for (auto& v : h) v = -v;
            for (auto& v : vals) v = -v;
            b = -b;
        }
        if (!seen.insert({h, b}).second) return true;

        Hyperplane hp{std::move(h), b, {}};
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (vals[i] == hp.level) hp.tight.push_back(i);
        }
        out.push_back(std::move(hp));
        return true;
    });
    return out;
}

// Indices of the extreme points of conv(pts) (affinely spanning R^d), in input
// order. When facets_out is given, also emits the facet list re-indexed to the
// surviving points.
std::vector<std::size_t> extreme_indices(const std::vector<std::vector<Int>>& pts, std::size_t d,
                                         std::vector<Facet>* facets_out) {
    const auto hps = supporting_hyperplanes(pts, d);
    std::vector<std::vector<std::size_t>> tight_at(pts.size());
    for (std::size_t f = 0; f < hps.size(); ++f) {
        for (std::size_t i : hps[f].tight) tight_at[i].push_back(f);
    }

    std::vector<std::size_t> ext;
    std::vector<std::size_t> new_index(pts.size(), SIZE_MAX);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (tight_at[i].size() < d) continue;
        std::vector<std::vector<Int>> normals;
        normals.reserve(tight_at[i].size());
        for (std::size_t f : tight_at[i]) normals.push_back(hps[f].normal);
        if (rank_rows(normals) == d) {
            new_index[i] = ext.size();
            ext.push_back(i);
        }
    }

    if (facets_out) {
        facets_out->clear();
        for (const auto& hp : hps) {
            Facet fc;
            fc.normal = hp.normal;
            fc.level = hp.level;
            for (std::size_t i : hp.tight) {
                if (new_index[i] != SIZE_MAX) fc.vertex_indices.push_back(new_index[i]);
            }
            facets_out->push_back(std::move(fc));
        }
    }
    return ext;
}

std::vector<std::vector<Int>> matrix_rows(const IntMatrix& m) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

RatVector to_rational(const std::vector<Int>& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

}  // namespace

LatticePolytope::LatticePolytope(const IntMatrix& points) : verts_(points) {
    const std::size_t n = points.cols();
    std::vector<std::vector<Int>> pts;
    std::set<std::vector<Int>> distinct;
    for (std::size_t i = 0; i < points.rows(); ++i) {
        auto r = points.row(i);
        if (distinct.insert(r).second) pts.push_back(std::move(r));
    }

    if (pts.size() == 1) {
        dim_ = 0;
        base_ = pts[0];
        verts_ = IntMatrix::from_rows({pts[0]});
        return;
    }

    std::vector<std::vector<Int>> diffs(pts.size() - 1, std::vector<Int>(n));
    for (std::size_t i = 1; i < pts.size(); ++i) {
        for (std::size_t c = 0; c < n; ++c) diffs[i - 1][c] = pts[i][c] - pts[0][c];
    }
    const std::size_t r = rank_rows(diffs);
    dim_ = static_cast<int>(r);

    std::vector<std::size_t> ext;
    if (r == n) {
        auto fcts = std::make_shared<std::vector<Facet>>();
        ext = extreme_indices(pts, n, fcts.get());
        facet_cache_ = std::move(fcts);
    } else {
        base_ = pts[0];
        const auto ortho = integer_kernel(IntMatrix::from_rows(diffs));
        dir_basis_ = integer_kernel(IntMatrix::from_rows(ortho));

        std::vector<std::vector<Rational>> bt(n, std::vector<Rational>(r));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < r; ++j) bt[i][j] = Rational(dir_basis_[j][i]);
        }
        std::vector<std::vector<Int>> locals(pts.size(), std::vector<Int>(r));
        for (std::size_t i = 0; i < pts.size(); ++i) {
            RatVector rhs(n);
            for (std::size_t c = 0; c < n; ++c) rhs[c] = Rational(pts[i][c] - base_[c]);
            auto sol = detail::solve_linear(bt, rhs);
            if (!sol) throw std::logic_error("affine hull basis does not span its points");
            for (std::size_t j = 0; j < r; ++j) {
                if (boost::multiprecision::denominator((*sol)[j]) != 1)
                    throw std::logic_error("lattice point has non-integral hull coordinates");
                locals[i][j] = boost::multiprecision::numerator((*sol)[j]);
            }
        }
        ext = extreme_indices(locals, r, nullptr);
    }

    std::vector<std::vector<Int>> keep;
    keep.reserve(ext.size());
    for (std::size_t i : ext) keep.push_back(pts[i]);
    verts_ = IntMatrix::from_rows(keep);
}

LatticePolytope LatticePolytope::from_rows(const std::vector<std::vector<Int>>& rows) {
    return LatticePolytope(IntMatrix::from_rows(rows));
}

LatticePolytope::LatticePolytope(const LatticePolytope& other)
    : verts_(other.verts_), dim_(other.dim_), base_(other.base_), dir_basis_(other.dir_basis_) {
    std::scoped_lock lk(other.cache_mutex_);
    facet_cache_ = other.facet_cache_;
    embedded_cache_ = other.embedded_cache_;
}

LatticePolytope& LatticePolytope::operator=(const LatticePolytope& other) {
    if (this == &other) return *this;
    std::shared_ptr<const std::vector<Facet>> fc;
    std::shared_ptr<const LatticePolytope> ec;
    {
        std::scoped_lock lk(other.cache_mutex_);
        fc = other.facet_cache_;
        ec = other.embedded_cache_;
    }
    verts_ = other.verts_;
    dim_ = other.dim_;
    base_ = other.base_;
    dir_basis_ = other.dir_basis_;
    std::scoped_lock lk(cache_mutex_);
    facet_cache_ = std::move(fc);
    embedded_cache_ = std::move(ec);
    return *this;
}

const std::vector<Facet>& LatticePolytope::facets() const {
    if (!full_dimensional()) throw std::domain_error("facets: polytope is not full-dimensional");
    return *facet_cache_;
}

bool LatticePolytope::contains(const std::vector<Int>& x) const {
    if (x.size() != ambient_dim()) throw std::invalid_argument("contains: dimension mismatch");
    if (dim_ == 0) return x == verts_.row(0);
    if (full_dimensional()) {
        for (const auto& f : facets()) {
            if (dot(f.normal, x) > f.level) return false;
        }
        return true;
    }
    auto local = to_local(x);
    return local && embedded().contains(*local);
}

bool LatticePolytope::contains_rational(const RatVector& x) const {
    if (x.size() != ambient_dim()) throw std::invalid_argument("contains: dimension mismatch");
    if (full_dimensional()) {
        for (const auto& f : facets()) {
            Rational s(0);
            for (std::size_t c = 0; c < x.size(); ++c) s += Rational(f.normal[c]) * x[c];
            if (s > Rational(f.level)) return false;
        }
        return true;
    }
    if (dim_ == 0) return x == to_rational(verts_.row(0));
    std::vector<std::vector<Rational>> bt(ambient_dim(), std::vector<Rational>(dir_basis_.size()));
    for (std::size_t i = 0; i < ambient_dim(); ++i) {
        for (std::size_t j = 0; j < dir_basis_.size(); ++j) bt[i][j] = Rational(dir_basis_[j][i]);
    }
    RatVector rhs(ambient_dim());
    for (std::size_t c = 0; c < ambient_dim(); ++c) rhs[c] = x[c] - Rational(base_[c]);
    auto sol = detail::solve_linear(bt, rhs);
    return sol && embedded().contains_rational(*sol);
}

const LatticePolytope& LatticePolytope::embedded() const {
    if (dim_ < 1 || full_dimensional())
        throw std::domain_error("embedded: requires 1 <= dim < ambient dimension");
    std::scoped_lock lk(cache_mutex_);
    if (!embedded_cache_) {
        std::vector<std::vector<Int>> locals;
        locals.reserve(verts_.rows());
        for (std::size_t i = 0; i < verts_.rows(); ++i) {
            auto l = to_local(verts_.row(i));
            locals.push_back(std::move(*l));
        }
        embedded_cache_ = std::make_shared<const LatticePolytope>(IntMatrix::from_rows(locals));
    }
    return *embedded_cache_;
}

const std::vector<Int>& LatticePolytope::embedding_base() const { return base_; }

const std::vector<std::vector<Int>>& LatticePolytope::embedding_basis() const { return dir_basis_; }

std::optional<std::vector<Int>> LatticePolytope::to_local(const std::vector<Int>& ambient) const {
    if (ambient.size() != ambient_dim()) throw std::invalid_argument("to_local: dimension mismatch");
    if (full_dimensional()) return ambient;
    if (dim_ == 0) {
        if (ambient == verts_.row(0)) return std::vector<Int>{};
        return std::nullopt;
    }
    const std::size_t n = ambient_dim(), d = dir_basis_.size();
    std::vector<std::vector<Rational>> bt(n, std::vector<Rational>(d));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) bt[i][j] = Rational(dir_basis_[j][i]);
    }
    RatVector rhs(n);
    for (std::size_t c = 0; c < n; ++c) rhs[c] = Rational(ambient[c] - base_[c]);
    auto sol = detail::solve_linear(bt, rhs);
    if (!sol) return std::nullopt;
    std::vector<Int> out(d);
    for (std::size_t j = 0; j < d; ++j) {
        if (boost::multiprecision::denominator((*sol)[j]) != 1) return std::nullopt;
        out[j] = boost::multiprecision::numerator((*sol)[j]);
    }
    return out;
}

std::vector<Int> LatticePolytope::to_ambient(const std::vector<Int>& local) const {
    if (full_dimensional()) {
        if (local.size() != ambient_dim())
            throw std::invalid_argument("to_ambient: dimension mismatch");
        return local;
    }
    if (local.size() != dir_basis_.size())
        throw std::invalid_argument("to_ambient: dimension mismatch");
    std::vector<Int> out = base_;
    for (std::size_t j = 0; j < dir_basis_.size(); ++j) {
        for (std::size_t c = 0; c < out.size(); ++c) out[c] += local[j] * dir_basis_[j][c];
    }
    return out;
}

bool is_projective(const LatticePolytope& p) {
    if (!p.full_dimensional()) return false;
    for (const auto& f : p.facets()) {
        if (f.level < 1) return false;
    }
    return true;
}

SmoothFanoFlags is_smooth_fano(const LatticePolytope& p) {
    SmoothFanoFlags flags;
    if (!p.full_dimensional()) return flags;
    const std::size_t n = p.ambient_dim();

    flags.fano = is_projective(p);
    for (std::size_t i = 0; i < p.vertex_count() && flags.fano; ++i) {
        const auto v = p.vertex(i);
        bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
        if (zero || !is_primitive(v)) flags.fano = false;
    }

    flags.simplicial = true;
    flags.smooth = true;
    for (const auto& f : p.facets()) {
        if (f.vertex_indices.size() != n) {
            flags.simplicial = false;
            flags.smooth = false;
            break;
        }
    }
    if (flags.simplicial) {
        for (const auto& f : p.facets()) {
            std::vector<std::vector<Int>> rows;
            rows.reserve(n);
            for (std::size_t i : f.vertex_indices) rows.push_back(p.vertex(i));
            const Int d = det(IntMatrix::from_rows(rows));
            if (d != 1 && d != -1) {
                flags.smooth = false;
                break;
            }
        }
    }
    return flags;
}

bool is_reflexive(const LatticePolytope& p) {
    if (!is_projective(p)) throw std::domain_error("is_reflexive: polytope is not projective");
    for (const auto& f : p.facets()) {
        if (f.level != 1) return false;
    }
    return true;
}

LatticePolytope dual_polytope(const LatticePolytope& p) {
    if (!is_reflexive(p)) throw std::domain_error("dual_polytope: polytope is not reflexive");
    std::vector<std::vector<Int>> rows;
    rows.reserve(p.facets().size());
    for (const auto& f : p.facets()) {
        std::vector<Int> v = f.normal;
        for (auto& x : v) x = -x;
        rows.push_back(std::move(v));
    }
    return LatticePolytope(IntMatrix::from_rows(rows));
}

std::vector<FaceRef> faces(const LatticePolytope& p) {
    if (p.dim() <= 0) return {};
    if (!p.full_dimensional()) return faces(p.embedded());

    const auto& fs = p.facets();
    std::vector<std::vector<std::size_t>> fsets;
    fsets.reserve(fs.size());
    for (const auto& f : fs) fsets.push_back(f.vertex_indices);

    std::set<std::vector<std::size_t>> known;
    std::deque<std::vector<std::size_t>> work;
    for (const auto& s : fsets) {
        if (known.insert(s).second) work.push_back(s);
    }
    while (!work.empty()) {
        auto s = std::move(work.front());
        work.pop_front();
        for (const auto& f : fsets) {
            auto t = detail::intersect_sorted(s, f);
            if (!t.empty() && known.insert(t).second) work.push_back(t);
        }
    }

    std::vector<FaceRef> out;
    out.reserve(known.size());
    for (const auto& s : known) {
        FaceRef face;
        face.vertex_indices = s;
        for (std::size_t i = 0; i < fsets.size(); ++i) {
            if (detail::is_subset_sorted(s, fsets[i])) face.facet_indices.push_back(i);
        }
        if (s.size() == 1) {
            face.dim = 0;
        } else {
            std::vector<std::vector<Int>> diffs;
            const auto v0 = p.vertex(s[0]);
            for (std::size_t k = 1; k < s.size(); ++k) {
                auto v = p.vertex(s[k]);
                for (std::size_t c = 0; c < v.size(); ++c) v[c] -= v0[c];
                diffs.push_back(std::move(v));
            }
            face.dim = static_cast<int>(rank_rows(diffs));
        }
        out.push_back(std::move(face));
    }
    std::sort(out.begin(), out.end(), [](const FaceRef& a, const FaceRef& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_indices < b.vertex_indices;
    });
    return out;
}

std::vector<std::vector<Int>> lattice_points(const LatticePolytope& p) {
    const std::size_t n = p.ambient_dim();
    if (p.dim() == 0) return {p.vertex(0)};
    if (!p.full_dimensional()) {
        std::vector<std::vector<Int>> out;
        for (const auto& l : lattice_points(p.embedded())) out.push_back(p.to_ambient(l));
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<Int> lo = p.vertex(0), hi = p.vertex(0);
    for (std::size_t i = 1; i < p.vertex_count(); ++i) {
        const auto v = p.vertex(i);
        for (std::size_t c = 0; c < n; ++c) {
            lo[c] = std::min(lo[c], v[c]);
            hi[c] = std::max(hi[c], v[c]);
        }
    }

    std::vector<std::vector<Int>> out;
    std::vector<Int> cur = lo;
    while (true) {
        if (p.contains(cur)) out.push_back(cur);
        std::size_t c = n;
        while (c > 0) {
            --c;
            if (cur[c] < hi[c]) {
                ++cur[c];
                for (std::size_t k = c + 1; k < n; ++k) cur[k] = lo[k];
                break;
            }
            if (c == 0) return out;
        }
    }
}

std::vector<std::vector<Int>> symmetric_points(const LatticePolytope& p) {
    const auto pts = lattice_points(p);
    std::set<std::vector<Int>> have(pts.begin(), pts.end());
    std::vector<std::vector<Int>> out;
    for (const auto& x : pts) {
        std::vector<Int> neg = x;
        for (auto& v : neg) v = -v;
        if (have.count(neg)) out.push_back(x);
    }
    return out;
}

bool is_unimodular_polytope(const IntMatrix& m) {
    const std::size_t n = m.cols();
    if (m.rows() < n) return true;
    std::vector<std::size_t> all_cols(n);
    for (std::size_t c = 0; c < n; ++c) all_cols[c] = c;
    bool ok = true;
    detail::for_each_combination(m.rows(), n, [&](const std::vector<std::size_t>& idx) {
        const Int d = det(m.submatrix(idx, all_cols));
        if (d > 1 || d < -1) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

bool is_unimodular_polytope(const LatticePolytope& p) { return is_unimodular_polytope(p.vertices()); }

std::optional<IntMatrix> unimodular_equivalent(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw std::invalid_argument("unimodular_equivalent: ambient dimension mismatch");
    if (!p.full_dimensional() || !q.full_dimensional())
        throw std::domain_error("unimodular_equivalent: inputs must be smooth Fano");
    if (p.vertex_count() != q.vertex_count()) return std::nullopt;
    if (p.facets().size() != q.facets().size()) return std::nullopt;

    const std::size_t n = p.ambient_dim();
    const auto& f0 = p.facets().front();
    if (f0.vertex_indices.size() != n)
        throw std::domain_error("unimodular_equivalent: inputs must be smooth Fano");
    std::vector<std::vector<Int>> nprows;
    for (std::size_t i : f0.vertex_indices) nprows.push_back(p.vertex(i));
    const IntMatrix inv_np = inverse_unimodular(IntMatrix::from_rows(nprows));

    std::set<std::vector<Int>> qset;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) qset.insert(q.vertex(i));

    for (const auto& g : q.facets()) {
        if (g.vertex_indices.size() != n)
            throw std::domain_error("unimodular_equivalent: inputs must be smooth Fano");
        std::vector<std::size_t> perm = g.vertex_indices;
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<std::vector<Int>> nqrows;
            for (std::size_t i : perm) nqrows.push_back(q.vertex(i));
            const IntMatrix t = matmul(inv_np, IntMatrix::from_rows(nqrows));
            const IntMatrix image = matmul(p.vertices(), t);
            bool match = true;
            for (std::size_t i = 0; i < image.rows() && match; ++i) {
                if (!qset.count(image.row(i))) match = false;
            }
            if (match) return t;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
}

LatticePolytope project(const LatticePolytope& p, const std::vector<std::size_t>& keep) {
    return LatticePolytope(delete_columns(p.vertices(), keep));
}

}  // namespace fano
