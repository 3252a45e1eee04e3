#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fano/polytope.hpp"
#include "fano/types.hpp"

namespace fano {

enum class EwaldKind { weak, strong, star };

// A certificate for one of the Ewald conditions on a smooth Fano polytope P
// with dual Q = P*.  E(P*) = Q ∩ (−Q) ∩ Z^n is the symmetric lattice point
// set all three conditions quantify over.
//
//  weak   — `basis` is a lattice basis contained in E(P*).
//  strong — `basis` is a lattice basis in E(P*) lying on the dual facet of
//           the P-vertex `vertex_index` (inner product −1 with it); the
//           column operation sequence normalizing that vertex is recorded in
//           `transform` when requested.
//  star   — `lambda` is a point of E(P*) whose inner products with the
//           vertices spanning the dual face `face` realize the star
//           condition: exactly one equals −1 and none equals +1.
struct EwaldWitness {
    EwaldKind kind = EwaldKind::weak;
    std::vector<std::vector<Int>> basis;
    std::vector<Int> lambda;
    std::size_t vertex_index = SIZE_MAX;
    std::optional<FaceRef> face;
    std::optional<IntMatrix> transform;
};

struct StrongEwaldResult {
    std::vector<EwaldWitness> witnesses;
    std::optional<std::size_t> failure_vertex;
    bool ok() const { return !failure_vertex.has_value(); }
};

struct StarEwaldResult {
    std::vector<EwaldWitness> witnesses;
    std::optional<FaceRef> failure_face;
    bool ok() const { return !failure_face.has_value(); }
};

// Symmetric lattice points of the dual, sorted lexicographically.
std::vector<std::vector<Int>> ewald_points(const LatticePolytope& p);

// Weak Ewald: some lattice basis lies in E(P*).  Requires reflexive smooth
// Fano input (throws std::domain_error otherwise).
std::optional<EwaldWitness> weak_ewald(const LatticePolytope& p);

// Strong Ewald: for every vertex v of P there is a lattice basis in
// E(P*) ∩ {x : <x,v> = −1}.  One witness per vertex on success.
StrongEwaldResult strong_ewald(const LatticePolytope& p);

// For a unimodular smooth Fano polytope, produces the unimodular transform T
// that maps P into [−1,1]^n with vertex `vertex_index` landing on (1,...,1).
// Throws std::domain_error when P is not a unimodular smooth Fano polytope.
IntMatrix strong_ewald_transform(const LatticePolytope& p, std::size_t vertex_index);

// Star Ewald: every nonempty proper face f of P* admits λ ∈ E(P*) with
// λ ∈ star(f) and −λ ∉ star(f).  One witness per face on success.
StarEwaldResult star_ewald(const LatticePolytope& p);

// Constructive witness for the star condition on one dual face, valid for
// unimodular smooth Fano polytopes.  `face` must be a face of dual_polytope(p)
// as returned by faces().  Throws std::domain_error when the construction's
// preconditions fail (e.g. P is not unimodular).
std::vector<Int> find_star_ewald_point(const LatticePolytope& p, const FaceRef& face);

}  // namespace fano
