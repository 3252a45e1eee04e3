#include "fano/ewald.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fano/linalg.hpp"
#include "fano/tu.hpp"
#include "internal.hpp"

namespace fano {
namespace {

void require_smooth_fano(const LatticePolytope& p, const char* who) {
    if (!static_cast<bool>(is_smooth_fano(p)))
        throw std::domain_error(std::string(who) + ": polytope is not smooth Fano");
}

std::optional<std::vector<std::vector<Int>>> find_unimodular_basis(
    const std::vector<std::vector<Int>>& pts, std::size_t n) {
    std::vector<std::vector<Int>> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        if (chosen.size() == n) {
            const Int d = det(IntMatrix::from_rows(chosen));
            return d == 1 || d == -1;
        }
        for (std::size_t i = start; i < pts.size(); ++i) {
            chosen.push_back(pts[i]);
            if (rank_rows(chosen) == chosen.size() && rec(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (rec(0)) return chosen;
    return std::nullopt;
}

std::vector<Int> negated(const std::vector<Int>& v) {
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

}  // namespace

std::vector<std::vector<Int>> ewald_points(const LatticePolytope& p) {
    require_smooth_fano(p, "ewald_points");
    return symmetric_points(dual_polytope(p));
}

std::optional<EwaldWitness> weak_ewald(const LatticePolytope& p) {
    require_smooth_fano(p, "weak_ewald");
    const auto e = symmetric_points(dual_polytope(p));
    auto basis = find_unimodular_basis(e, p.ambient_dim());
    if (!basis) return std::nullopt;
    EwaldWitness w;
    w.kind = EwaldKind::weak;
    w.basis = std::move(*basis);
    return w;
}

StrongEwaldResult strong_ewald(const LatticePolytope& p) {
    require_smooth_fano(p, "strong_ewald");
    const auto e = symmetric_points(dual_polytope(p));
    StrongEwaldResult result;
    for (std::size_t vi = 0; vi < p.vertex_count(); ++vi) {
        const auto v = p.vertex(vi);
        std::vector<std::vector<Int>> on_facet;
        for (const auto& x : e) {
            if (dot(x, v) == -1) on_facet.push_back(x);
        }
        auto basis = find_unimodular_basis(on_facet, p.ambient_dim());
        if (!basis) {
            result.failure_vertex = vi;
            return result;
        }
        EwaldWitness w;
        w.kind = EwaldKind::strong;
        w.basis = std::move(*basis);
        w.vertex_index = vi;
        result.witnesses.push_back(std::move(w));
    }
    return result;
}

IntMatrix strong_ewald_transform(const LatticePolytope& p, std::size_t vertex_index) {
    require_smooth_fano(p, "strong_ewald_transform");
    if (!is_unimodular_polytope(p))
        throw std::domain_error("strong_ewald_transform: polytope is not unimodular");
    if (vertex_index >= p.vertex_count())
        throw std::invalid_argument("strong_ewald_transform: vertex index out of range");

    const std::size_t n = p.ambient_dim();
    const auto& facets = p.facets();
    const Facet* home = nullptr;
    for (const auto& f : facets) {
        if (std::find(f.vertex_indices.begin(), f.vertex_indices.end(), vertex_index) !=
            f.vertex_indices.end()) {
            home = &f;
            break;
        }
    }
    if (home == nullptr) throw std::logic_error("vertex lies on no facet");

    std::vector<std::vector<Int>> basis_rows;
    basis_rows.push_back(p.vertex(vertex_index));
    for (std::size_t idx : home->vertex_indices) {
        if (idx != vertex_index) basis_rows.push_back(p.vertex(idx));
    }
    IntMatrix t = inverse_unimodular(IntMatrix::from_rows(basis_rows));
    IntMatrix w = matmul(p.vertices(), t);
    const std::size_t m = w.rows();

    auto in_range = [&](const std::vector<Int>& col) {
        for (const Int& x : col) {
            if (x < -1 || x > 1) return false;
        }
        return true;
    };
    auto column = [](const IntMatrix& mat, std::size_t j) {
        std::vector<Int> col(mat.rows());
        for (std::size_t i = 0; i < mat.rows(); ++i) col[i] = mat.at(i, j);
        return col;
    };

    // Row of the chosen vertex is e_1 in W; every other column may be shifted
    // by ±(column 0) while keeping entries in {-1,0,1}.
    for (std::size_t j = 1; j < n; ++j) {
        if (w.at(vertex_index, j) != 0) continue;
        std::vector<Int> minus(m), plus(m);
        for (std::size_t i = 0; i < m; ++i) {
            minus[i] = w.at(i, j) - w.at(i, 0);
            plus[i] = w.at(i, j) + w.at(i, 0);
        }
        int sign;
        if (in_range(minus))
            sign = -1;
        else if (in_range(plus))
            sign = 1;
        else
            throw std::domain_error("strong_ewald_transform: polytope is not unimodular");
        for (std::size_t i = 0; i < m; ++i) w.at(i, j) = (sign < 0) ? minus[i] : plus[i];
        for (std::size_t i = 0; i < n; ++i) t.at(i, j) += Int(sign) * t.at(i, 0);
    }

    for (std::size_t j = 0; j < n; ++j) {
        if (w.at(vertex_index, j) == -1) {
            for (std::size_t i = 0; i < m; ++i) w.at(i, j) = -w.at(i, j);
            for (std::size_t i = 0; i < n; ++i) t.at(i, j) = -t.at(i, j);
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        if (w.at(vertex_index, j) != 1) throw std::logic_error("transform failed to normalize vertex");
    }
    if (!in_range(column(w, 0))) throw std::logic_error("transform image left [-1,1]^n");
    for (std::size_t j = 1; j < n; ++j) {
        if (!in_range(column(w, j))) throw std::logic_error("transform image left [-1,1]^n");
    }
    return t;
}

StarEwaldResult star_ewald(const LatticePolytope& p) {
    require_smooth_fano(p, "star_ewald");
    const auto q = dual_polytope(p);
    const auto e = symmetric_points(q);
    const auto& qfacets = q.facets();
    std::vector<std::vector<Int>> pv;  // P-vertex attached to each dual facet
    pv.reserve(qfacets.size());
    for (const auto& f : qfacets) pv.push_back(negated(f.normal));

    StarEwaldResult result;
    for (const auto& face : faces(q)) {
        bool found = false;
        for (const auto& lambda : e) {
            std::size_t hits = 0;
            bool blocked = false;
            for (std::size_t j : face.facet_indices) {
                const Int ip = dot(lambda, pv[j]);
                if (ip == -1) ++hits;
                if (ip == 1) {
                    blocked = true;
                    break;
                }
            }
            if (blocked || hits != 1) continue;
            EwaldWitness w;
            w.kind = EwaldKind::star;
            w.lambda = lambda;
            w.face = face;
            result.witnesses.push_back(std::move(w));
            found = true;
            break;
        }
        if (!found) {
            result.failure_face = face;
            return result;
        }
    }
    return result;
}

std::vector<Int> find_star_ewald_point(const LatticePolytope& p, const FaceRef& face) {
    require_smooth_fano(p, "find_star_ewald_point");
    if (!is_unimodular_polytope(p))
        throw std::domain_error("find_star_ewald_point: polytope is not unimodular");
    if (face.facet_indices.empty() || face.vertex_indices.empty())
        throw std::invalid_argument("find_star_ewald_point: empty face reference");

    const std::size_t n = p.ambient_dim();
    const auto q = dual_polytope(p);
    const auto& qfacets = q.facets();
    const std::size_t d = face.facet_indices.size();

    std::vector<std::vector<Int>> spanning;  // P-vertices whose dual facets contain the face
    for (std::size_t j : face.facet_indices) {
        if (j >= qfacets.size()) throw std::invalid_argument("find_star_ewald_point: bad facet index");
        spanning.push_back(negated(qfacets[j].normal));
    }

    const auto y = q.vertex(face.vertex_indices[0]);
    const auto want = negated(y);
    const Facet* home = nullptr;
    for (const auto& f : p.facets()) {
        if (f.normal == want) {
            home = &f;
            break;
        }
    }
    if (home == nullptr) throw std::logic_error("dual vertex does not match a facet normal");

    std::vector<std::vector<Int>> basis_rows = spanning;
    for (std::size_t idx : home->vertex_indices) {
        const auto v = p.vertex(idx);
        if (std::find(spanning.begin(), spanning.end(), v) == spanning.end())
            basis_rows.push_back(v);
    }
    if (basis_rows.size() != n)
        throw std::logic_error("face spanning vertices do not extend to a facet basis");

    const IntMatrix inv = inverse_unimodular(IntMatrix::from_rows(basis_rows));
    const IntMatrix w = matmul(p.vertices(), inv);

    // Rows of the split instance: column 0 of W, then columns d..n-1.
    std::vector<std::vector<Int>> split_rows;
    std::vector<std::size_t> cols{0};
    for (std::size_t j = d; j < n; ++j) cols.push_back(j);
    for (std::size_t j : cols) {
        std::vector<Int> row(w.rows());
        for (std::size_t i = 0; i < w.rows(); ++i) row[i] = w.at(i, j);
        split_rows.push_back(std::move(row));
    }
    const IntMatrix inst = IntMatrix::from_rows(split_rows);
    std::vector<std::size_t> all(inst.rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const auto split = row_split(inst, all);
    if (!split)
        throw std::domain_error("find_star_ewald_point: polytope is not unimodular");

    std::vector<int> sign(inst.rows(), -1);
    for (std::size_t r : split->plus) sign[r] = 1;
    if (sign[0] == 1) {
        for (auto& s : sign) s = -s;
    }

    std::vector<Int> t(n, Int(0));
    t[0] = sign[0];
    for (std::size_t k = 0; k + 1 < cols.size(); ++k) t[d + k] = sign[k + 1];

    std::vector<Int> lambda(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) lambda[i] += inv.at(i, k) * t[k];

    for (std::size_t i = 0; i < p.vertex_count(); ++i) {
        const Int ip = dot(p.vertex(i), lambda);
        if (ip < -1 || ip > 1) throw std::logic_error("star point escapes E(P*)");
    }
    std::size_t hits = 0;
    for (const auto& u : spanning) {
        const Int ip = dot(u, lambda);
        if (ip == 1) throw std::logic_error("star point fails the star condition");
        if (ip == -1) ++hits;
    }
    if (hits != 1) throw std::logic_error("star point fails the star condition");
    return lambda;
}

}  // namespace fano
