#pragma once

#include <optional>
#include <vector>

#include "fano/types.hpp"

namespace fano {

// Exact determinant of a square matrix (fraction-free Bareiss elimination).
// Throws std::invalid_argument on non-square input.
Int det(const IntMatrix& m);

// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

// Rank of a list of integer row vectors (all the same length; empty list has rank 0).
std::size_t rank_rows(const std::vector<std::vector<Int>>& rows);

// Unique solution x of A x = b for square nonsingular A; nullopt when A is singular.
// Throws std::invalid_argument when sizes do not match.
std::optional<RatVector> solve_exact(const IntMatrix& a, const RatVector& b);

// Exact integer inverse of a matrix with determinant +-1.
// Throws std::domain_error when |det| != 1, std::invalid_argument when non-square.
IntMatrix inverse_unimodular(const IntMatrix& n);

// True iff gcd of the entries is 1. Throws std::domain_error on the zero vector.
bool is_primitive(const std::vector<Int>& v);

// Matrix of the columns indexed by `keep` (ascending, deduplicated), order preserved.
// Throws std::invalid_argument on empty or out-of-range index sets.
IntMatrix delete_columns(const IntMatrix& m, const std::vector<std::size_t>& keep);

// Lattice basis of the right kernel {x in Z^c : M x = 0}. The returned rows span the
// kernel saturated in Z^c (every integer kernel vector is an integer combination).
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m);

// gcd of the absolute values of the entries (0 for the zero vector).
Int content(const std::vector<Int>& v);

// Divide by the content to make the vector primitive. Throws on the zero vector.
std::vector<Int> make_primitive(const std::vector<Int>& v);

}  // namespace fano
