#include "fano/monotone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fano/linalg.hpp"
#include "internal.hpp"

namespace fano {
namespace {

std::vector<Int> diff(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

CornerFrame frame_from_faces(const LatticePolytope& q, std::size_t vertex_index,
                             const std::vector<FaceRef>& all_faces) {
    if (vertex_index >= q.vertex_count())
        throw std::invalid_argument("corner_frame: vertex index out of range");
    std::vector<std::size_t> neighbors;
    for (const auto& f : all_faces) {
        if (f.dim != 1) continue;
        if (f.vertex_indices.size() != 2) continue;
        if (f.vertex_indices[0] == vertex_index)
            neighbors.push_back(f.vertex_indices[1]);
        else if (f.vertex_indices[1] == vertex_index)
            neighbors.push_back(f.vertex_indices[0]);
    }
    std::sort(neighbors.begin(), neighbors.end());
    if (neighbors.size() != q.dim())
        throw std::domain_error("corner_frame: vertex is not simple");
    CornerFrame frame;
    frame.vertex_index = vertex_index;
    for (std::size_t w : neighbors)
        frame.directions.push_back(make_primitive(diff(q.vertex(w), q.vertex(vertex_index))));
    return frame;
}

bool triangle_all_edges_primitive(const std::vector<Int>& a, const std::vector<Int>& b,
                                  const std::vector<Int>& c) {
    return is_primitive(diff(b, a)) && is_primitive(diff(c, a)) && is_primitive(diff(c, b));
}

bool triangle_normalized_area_one(const std::vector<Int>& a, const std::vector<Int>& b,
                                  const std::vector<Int>& c) {
    const auto d1 = diff(b, a);
    const auto d2 = diff(c, a);
    Int g = 0;
    for (std::size_t i = 0; i < d1.size(); ++i) {
        for (std::size_t j = i + 1; j < d1.size(); ++j) {
            const Int minor = d1[i] * d2[j] - d1[j] * d2[i];
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(minor));
        }
    }
    return g == 1;
}

template <typename TriPredicate>
bool ut_free_impl(const LatticePolytope& q, const TriPredicate& is_ut) {
    if (q.dim() < 2) return true;
    if (q.dim() == 2) {
        if (q.vertex_count() != 3) return true;
        return !is_ut(q.vertex(0), q.vertex(1), q.vertex(2));
    }
    for (const auto& f : faces(q)) {
        if (f.dim != 2 || f.vertex_indices.size() != 3) continue;
        if (is_ut(q.vertex(f.vertex_indices[0]), q.vertex(f.vertex_indices[1]),
                  q.vertex(f.vertex_indices[2])))
            return false;
    }
    return true;
}

}  // namespace

CornerFrame corner_frame(const LatticePolytope& q, std::size_t vertex_index) {
    return frame_from_faces(q, vertex_index, faces(q));
}

bool is_deeply_smooth(const LatticePolytope& q) {
    if (!q.full_dimensional())
        throw std::domain_error("is_deeply_smooth: polytope must be full-dimensional");
    const std::size_t n = q.dim();
    const auto all_faces = faces(q);
    for (std::size_t vi = 0; vi < q.vertex_count(); ++vi) {
        const auto frame = frame_from_faces(q, vi, all_faces);
        const auto v = q.vertex(vi);
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            auto pt = v;
            for (std::size_t i = 0; i < n; ++i) {
                if (!((mask >> i) & 1u)) continue;
                for (std::size_t c = 0; c < pt.size(); ++c) pt[c] += frame.directions[i][c];
            }
            if (!q.contains(pt)) return false;
        }
    }
    return true;
}

bool is_ut_free(const LatticePolytope& q) {
    return ut_free_impl(q, triangle_all_edges_primitive);
}

bool is_ut_free_normalized_area(const LatticePolytope& q) {
    return ut_free_impl(q, triangle_normalized_area_one);
}

DisplacementReport first_displacement(const LatticePolytope& q, const FaceRef& face) {
    if (!q.full_dimensional())
        throw std::domain_error("first_displacement: polytope must be full-dimensional");
    const std::size_t n = q.dim();
    const auto& facets = q.facets();
    std::vector<std::size_t> s = face.facet_indices;
    std::sort(s.begin(), s.end());
    if (s.empty()) throw std::invalid_argument("first_displacement: face has no cutting facets");
    for (std::size_t j : s) {
        if (j >= facets.size()) throw std::invalid_argument("first_displacement: bad facet index");
    }
    const std::size_t k = s.size();
    if (k > n) throw std::domain_error("first_displacement: face lies on more than dim facets");

    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < facets.size(); ++j) {
        if (!std::binary_search(s.begin(), s.end(), j)) others.push_back(j);
    }

    std::set<RatVector> points;
    detail::for_each_combination(others.size(), n - k, [&](const std::vector<std::size_t>& pick) {
        std::vector<std::vector<Int>> rows;
        RatVector rhs;
        for (std::size_t j : s) {
            rows.push_back(facets[j].normal);
            rhs.push_back(Rational(facets[j].level - 1));
        }
        for (std::size_t t : pick) {
            rows.push_back(facets[others[t]].normal);
            rhs.push_back(Rational(facets[others[t]].level));
        }
        const auto x = solve_exact(IntMatrix::from_rows(rows), rhs);
        if (!x) return true;
        for (const auto& f : facets) {
            Rational val(0);
            for (std::size_t c = 0; c < n; ++c) val += Rational(f.normal[c]) * (*x)[c];
            if (val > f.level) return true;
        }
        points.insert(*x);
        return true;
    });
    if (points.empty()) throw std::domain_error("first_displacement: empty slice");

    DisplacementReport report;
    report.face = face;
    report.slice_vertices.assign(points.begin(), points.end());

    report.is_lattice = true;
    std::vector<std::vector<Int>> lattice_rows;
    for (const auto& pt : report.slice_vertices) {
        std::vector<Int> row;
        for (const auto& c : pt) {
            if (boost::multiprecision::denominator(c) != 1) {
                report.is_lattice = false;
                break;
            }
            row.push_back(boost::multiprecision::numerator(c));
        }
        if (!report.is_lattice) break;
        lattice_rows.push_back(std::move(row));
    }
    if (!report.is_lattice) {
        report.note = "slice has non-integral vertices";
        return report;
    }
    report.slice = LatticePolytope::from_rows(lattice_rows);
    const LatticePolytope& sl = *report.slice;

    if (sl.dim() == 0) {
        report.is_reflexive_after_recentering = true;
    } else {
        const LatticePolytope emb = sl.full_dimensional() ? sl : sl.embedded();
        std::vector<std::vector<Int>> interior;
        for (const auto& pt : lattice_points(emb)) {
            bool strict = true;
            for (const auto& f : emb.facets()) {
                if (dot(f.normal, pt) == f.level) {
                    strict = false;
                    break;
                }
            }
            if (strict) interior.push_back(pt);
        }
        if (interior.size() != 1) {
            report.note = interior.empty() ? "slice has no interior lattice point"
                                           : "interior lattice point is not unique";
        } else {
            std::vector<std::vector<Int>> shifted;
            for (std::size_t i = 0; i < emb.vertex_count(); ++i)
                shifted.push_back(diff(emb.vertex(i), interior[0]));
            const LatticePolytope centered = LatticePolytope::from_rows(shifted);
            if (is_projective(centered) && is_reflexive(centered))
                report.is_reflexive_after_recentering = true;
            else
                report.note = "recentered slice is not reflexive";
        }
    }

    // Face/slice correspondence through shared cutting facets: compare the
    // multisets of (extra tight facets of Q, face dim) labels on both sides.
    std::vector<std::size_t> fverts = face.vertex_indices;
    std::sort(fverts.begin(), fverts.end());
    std::map<std::pair<std::vector<std::size_t>, std::size_t>, int> face_labels, slice_labels;
    for (const auto& g : faces(q)) {
        if (!detail::is_subset_sorted(g.vertex_indices, fverts)) continue;
        std::vector<std::size_t> extra;
        for (std::size_t j : g.facet_indices) {
            if (!std::binary_search(s.begin(), s.end(), j)) extra.push_back(j);
        }
        face_labels[{extra, g.dim}] += 1;
    }
    auto slice_label = [&](const std::vector<std::size_t>& verts, std::size_t gdim) {
        std::vector<std::size_t> extra;
        for (std::size_t j : others) {
            bool tight = true;
            for (std::size_t vi : verts) {
                if (dot(facets[j].normal, sl.vertex(vi)) != facets[j].level) {
                    tight = false;
                    break;
                }
            }
            if (tight) extra.push_back(j);
        }
        slice_labels[{extra, gdim}] += 1;
    };
    if (sl.dim() > 0) {
        for (const auto& g : faces(sl)) slice_label(g.vertex_indices, g.dim);
    }
    std::vector<std::size_t> all_sl(sl.vertex_count());
    for (std::size_t i = 0; i < all_sl.size(); ++i) all_sl[i] = i;
    slice_label(all_sl, sl.dim());
    report.normal_match = (face_labels == slice_labels);
    return report;
}

bool deeply_smooth_via_displacements(const LatticePolytope& q) {
    if (!q.full_dimensional())
        throw std::domain_error("deeply_smooth_via_displacements: polytope must be full-dimensional");
    if (!is_ut_free(q)) return false;
    for (const auto& f : faces(q)) {
        DisplacementReport report;
        try {
            report = first_displacement(q, f);
        } catch (const std::domain_error&) {
            continue;  // empty slice: nothing to test
        }
        if (!report.is_lattice) return false;
        if (!is_ut_free(*report.slice)) return false;
    }
    return true;
}

bool lemma7_holds(const LatticePolytope& q, std::size_t vertex_index) {
    const auto frame = corner_frame(q, vertex_index);
    const auto v = q.vertex(vertex_index);
    std::vector<Int> sum(v.size(), Int(0));
    for (const auto& u : frame.directions)
        for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += u[c];
    for (std::size_t c = 0; c < sum.size(); ++c) {
        if (v[c] != -sum[c]) return false;
    }
    return true;
}

Theorem6Report theorem6_witnesses(const LatticePolytope& q) {
    const auto pts = symmetric_points(q);
    const std::set<std::vector<Int>> e(pts.begin(), pts.end());
    const auto all_faces = faces(q);

    Theorem6Report report;
    for (std::size_t vi = 0; vi < q.vertex_count(); ++vi) {
        const auto frame = frame_from_faces(q, vi, all_faces);
        const std::size_t n = frame.directions.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const auto& u1 = frame.directions[i];
                const auto& u2 = frame.directions[j];
                std::vector<Int> sum(u1.size()), d(u1.size());
                for (std::size_t c = 0; c < u1.size(); ++c) {
                    sum[c] = u1[c] + u2[c];
                    d[c] = u1[c] - u2[c];
                }
                Theorem6Entry entry;
                entry.vertex_index = vi;
                entry.i = i;
                entry.j = j;
                entry.u1_in = e.count(u1) > 0;
                entry.u2_in = e.count(u2) > 0;
                entry.sum_in = e.count(sum) > 0;
                entry.diff_in = e.count(d) > 0;
                entry.ok = entry.u1_in && entry.u2_in && (entry.sum_in || entry.diff_in);
                report.all_ok = report.all_ok && entry.ok;
                report.entries.push_back(entry);
            }
        }
    }
    return report;
}

}  // namespace fano
