#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fano/types.hpp"

namespace fano {

// Supporting hyperplane <u,x> <= level with primitive u; vertex_indices are the
// polytope vertices satisfying it with equality (sorted).
struct Facet {
    std::vector<std::size_t> vertex_indices;
    std::vector<Int> normal;
    Int level;
};

// A nonempty proper face: the (closed) set of facets containing it, the vertices
// lying on all of them, and its affine dimension.
struct FaceRef {
    std::vector<std::size_t> facet_indices;
    std::vector<std::size_t> vertex_indices;
    int dim = 0;
};

// Convex hull of integer points, stored as its extreme points in input order.
// Lower-dimensional hulls keep their ambient coordinates and expose an exact
// re-embedding into the lattice of their affine hull.
class LatticePolytope {
  public:
    explicit LatticePolytope(const IntMatrix& points);
    static LatticePolytope from_rows(const std::vector<std::vector<Int>>& rows);

    LatticePolytope(const LatticePolytope& other);
    LatticePolytope& operator=(const LatticePolytope& other);

    std::size_t ambient_dim() const { return verts_.cols(); }
    int dim() const { return dim_; }
    bool full_dimensional() const { return dim_ >= 0 && static_cast<std::size_t>(dim_) == ambient_dim(); }
    const IntMatrix& vertices() const { return verts_; }
    std::size_t vertex_count() const { return verts_.rows(); }
    std::vector<Int> vertex(std::size_t i) const { return verts_.row(i); }

    // Complete facet list; cached after the first call (single writer).
    // Throws std::domain_error when the polytope is not full-dimensional.
    const std::vector<Facet>& facets() const;

    // Exact membership tests (any dimension).
    bool contains(const std::vector<Int>& x) const;
    bool contains_rational(const RatVector& x) const;

    // Re-embedding of a lower-dimensional polytope into Z^dim via a basis of the
    // lattice of its affine hull: ambient point = base + local * basis.
    // Requires 1 <= dim < ambient_dim.
    const LatticePolytope& embedded() const;
    const std::vector<Int>& embedding_base() const;
    const std::vector<std::vector<Int>>& embedding_basis() const;
    std::optional<std::vector<Int>> to_local(const std::vector<Int>& ambient) const;
    std::vector<Int> to_ambient(const std::vector<Int>& local) const;

  private:
    IntMatrix verts_;
    int dim_ = 0;
    std::vector<Int> base_;
    std::vector<std::vector<Int>> dir_basis_;

    mutable std::mutex cache_mutex_;
    mutable std::shared_ptr<const std::vector<Facet>> facet_cache_;
    mutable std::shared_ptr<const LatticePolytope> embedded_cache_;
};

struct SmoothFanoFlags {
    bool fano = false;        // projective with primitive vertices
    bool simplicial = false;  // every facet has exactly n vertices
    bool smooth = false;      // simplicial with facet bases of determinant +-1
    explicit operator bool() const { return fano && smooth; }
};

// Full-dimensional with the origin strictly interior.
bool is_projective(const LatticePolytope& p);

SmoothFanoFlags is_smooth_fano(const LatticePolytope& p);

// Every facet at level 1 (primitive normals). Throws std::domain_error when not projective.
bool is_reflexive(const LatticePolytope& p);

// Polar dual {x : <x,y> >= -1 for all y in P}; vertices are -u per facet.
// Throws std::domain_error when P is not reflexive.
LatticePolytope dual_polytope(const LatticePolytope& p);

// All nonempty proper faces (vertices through facets), sorted by (dim, vertex set).
std::vector<FaceRef> faces(const LatticePolytope& p);

// All lattice points of P, in lexicographic order.
std::vector<std::vector<Int>> lattice_points(const LatticePolytope& p);

// E(P) = P cap (-P) cap Z^n, in lexicographic order.
std::vector<std::vector<Int>> symmetric_points(const LatticePolytope& p);

// Every maximal minor of the vertex matrix lies in {-1,0,1}.
bool is_unimodular_polytope(const IntMatrix& m);
bool is_unimodular_polytope(const LatticePolytope& p);

// Integer T with |det T| = 1 and {v T : v in vertices(P)} = vertices(Q), or nullopt.
// Both polytopes must be smooth Fano. Throws std::invalid_argument on an
// ambient-dimension mismatch.
std::optional<IntMatrix> unimodular_equivalent(const LatticePolytope& p, const LatticePolytope& q);

// Coordinate projection keeping the columns in `keep`, re-extremized.
LatticePolytope project(const LatticePolytope& p, const std::vector<std::size_t>& keep);

}  // namespace fano
