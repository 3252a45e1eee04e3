#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano/polytope.hpp"
#include "fano/types.hpp"

namespace fano {

// A split of a row collection: (sum of plus rows) - (sum of minus rows) has
// every entry in {-1,0,1}. Indices refer to rows of the original matrix.
struct RowSplit {
    std::vector<std::size_t> plus;
    std::vector<std::size_t> minus;
    std::vector<Int> sum;
};

// Offending square submatrix when a matrix fails total unimodularity.
struct TUWitness {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    Int det;
};

struct TUReport {
    bool is_tu = false;
    std::optional<TUWitness> witness;
    explicit operator bool() const { return is_tu; }
};

// Brute-force check that every square submatrix has determinant in {-1,0,1}.
TUReport is_totally_unimodular(const IntMatrix& m);

// M * N^-1 where N is the vertex basis of facet k (rows in facet vertex order)
// and M the full vertex matrix. Throws std::invalid_argument for a bad facet
// index and std::domain_error when the facet basis is not unimodular.
IntMatrix standard_form(const LatticePolytope& p, std::size_t facet_index);

// First valid split of the given rows, preferring suffixes of the collection as
// the minus part, then the empty minus part, then all remaining sign patterns.
// nullopt means no split exists (so m is not totally unimodular).
std::optional<RowSplit> row_split(const IntMatrix& m, const std::vector<std::size_t>& rows);

// Ghouila-Houri criterion: every row subset admits a split. Independent TU oracle.
bool ghouila_houri_is_tu(const IntMatrix& m);

// Matroid dual of a standard representative [I_n; B]: returns [-B^T; I_{m-n}].
// Rows keep representing the same ground elements in the same order. An all-zero
// matrix (rank 0) dualizes to the identity; a square identity dualizes to an
// all-zero single column. Throws std::invalid_argument when no identity block
// heads the matrix.
IntMatrix matroid_dual_matrix(const IntMatrix& m);

// k-sum of two totally unimodular matrices given in the template layouts
//   k=1:  any M1, M2                        -> [M1 0; 0 M2]
//   k=2:  M1 = [A1 a1; 0 1], M2 = [1 0; a2 A2]
//                                           -> [A1 a1 0; 0 a2 A2]
//   k=3:  M1 = [A1 a1 b1; 0 1 1; 0 1 0; 0 0 1],
//         M2 = [1 1 0; 1 0 0; 0 1 0; a2 b2 A2]
//                                           -> [A1 a1 b1 0; 0 a2 b2 A2]
// Throws std::invalid_argument on shape mismatch and std::domain_error when an
// operand is not totally unimodular.
IntMatrix k_sum(const IntMatrix& m1, const IntMatrix& m2, int k);

// Structural graphicness: M or M^T has at most two nonzero entries per column,
// all in {-1,0,1}, and any column with two nonzeros has one +1 and one -1.
bool is_graphic_matrix(const IntMatrix& m);

// Named matrices used throughout the test corpus:
// R10, K5dual, K33dual, example1, example2, example3.
// Throws std::invalid_argument for an unknown name.
IntMatrix fixture(const std::string& name);

}  // namespace fano
