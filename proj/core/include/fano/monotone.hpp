#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fano/polytope.hpp"
#include "fano/types.hpp"

namespace fano {

// Primitive edge directions at a vertex, ordered by neighbor vertex index.
// For a smooth polytope these form a lattice basis.
struct CornerFrame {
    std::size_t vertex_index = 0;
    std::vector<std::vector<Int>> directions;
};

// Throws std::domain_error when the vertex is not simple (edge count differs
// from dim).
CornerFrame corner_frame(const LatticePolytope& q, std::size_t vertex_index);

// True iff every vertex's corner parallelepiped (the 2^n points
// v + sum of a subset of its frame) lies inside the polytope.
bool is_deeply_smooth(const LatticePolytope& q);

// UT-free: no 2-face is a triangle whose three edges are all primitive.
bool is_ut_free(const LatticePolytope& q);

// Alternate, stricter reading: no 2-face is a triangle of normalized area 1.
bool is_ut_free_normalized_area(const LatticePolytope& q);

struct DisplacementReport {
    FaceRef face;
    std::vector<RatVector> slice_vertices;        // exact vertices of the slice
    std::optional<LatticePolytope> slice;         // present iff is_lattice
    bool is_lattice = false;
    bool is_reflexive_after_recentering = false;  // recentering at the unique
                                                  // interior lattice point
    bool normal_match = false;
    std::string note;
};

// First displacement of a proper face: the polytope cut out by shifting the
// defining facet inequalities of the face inward by one.  Throws
// std::domain_error when the slice is empty.
DisplacementReport first_displacement(const LatticePolytope& q, const FaceRef& face);

// True iff Q and the first displacement of each proper face are all UT-free.
bool deeply_smooth_via_displacements(const LatticePolytope& q);

// v = -(sum of its corner frame).  No precondition is enforced beyond the
// frame being well-defined.
bool lemma7_holds(const LatticePolytope& q, std::size_t vertex_index);

struct Theorem6Entry {
    std::size_t vertex_index = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    bool u1_in = false;
    bool u2_in = false;
    bool sum_in = false;
    bool diff_in = false;
    bool ok = false;
};

struct Theorem6Report {
    std::vector<Theorem6Entry> entries;
    bool all_ok = true;
};

// For every vertex and every unordered frame pair (u1, u2): u1 and u2 lie in
// E(Q) = Q ∩ (−Q) ∩ Z^n and at least one of u1+u2, u1−u2 does as well.
Theorem6Report theorem6_witnesses(const LatticePolytope& q);

}  // namespace fano
