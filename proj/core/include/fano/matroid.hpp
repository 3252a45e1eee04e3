#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fano/polytope.hpp"
#include "fano/types.hpp"

namespace fano {

// Row matroid of an integer matrix: ground elements are the rows, independence
// is linear independence over Q.
class LinearMatroid {
  public:
    explicit LinearMatroid(const IntMatrix& source);

    const IntMatrix& source() const { return src_; }
    std::size_t size() const { return src_.rows(); }
    std::size_t rank() const { return full_rank_; }

    // Exact rank of the rows indexed by subset. Throws std::invalid_argument on
    // an out-of-range index.
    std::size_t rank_of(const std::vector<std::size_t>& subset) const;
    bool independent(const std::vector<std::size_t>& subset) const;

  private:
    IntMatrix src_;
    std::vector<std::vector<long long>> grid_;
    bool small_;
    std::size_t full_rank_ = 0;
};

// All circuits (minimal dependent subsets), sorted, ordered by (size, lex).
// Throws std::invalid_argument when the ground set exceeds max_elements.
std::vector<std::vector<std::size_t>> circuits(const LinearMatroid& m,
                                               std::size_t max_elements = 16);

// An undirected multigraph realization: edges[i] is the edge of ground element i
// (a self-loop for matroid loops). Subset independence equals acyclicity.
struct GraphRealization {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// First graph realization found (canonical search order), or nullopt when the
// matroid is not graphic. Throws std::invalid_argument beyond max_elements.
std::optional<GraphRealization> is_graphic_matroid(const LinearMatroid& m,
                                                   std::size_t max_elements = 16);

// Enumerates every graph realization up to vertex relabeling; fn returning
// false stops the enumeration.
void for_each_graphic_realization(const LinearMatroid& m,
                                  const std::function<bool(const GraphRealization&)>& fn,
                                  std::size_t max_elements = 16);

// True iff some 10-element subset restricts to a matroid isomorphic to R10.
// Only rank-5 matroids are supported (an R10 minor then needs no contraction);
// other ranks throw std::domain_error.
bool has_r10_restriction(const LinearMatroid& m, std::size_t max_elements = 16);

struct Digraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;  // ordered (i,j), i != j
};

// conv{e_i - e_j : (i,j) arrow} with the last coordinate dropped; the result
// lives in dimension vertex_count - 1. Throws std::invalid_argument on loops,
// out-of-range endpoints, or an empty arrow list.
LatticePolytope polytope_from_digraph(const Digraph& g);

enum class SearchStatus { found, none, timeout };

struct SfpdgResult {
    SearchStatus status = SearchStatus::none;
    std::optional<Digraph> witness;
    explicit operator bool() const { return status == SearchStatus::found; }
};

// Searches for a digraph G with polytope_from_digraph(G) unimodularly
// equivalent to P. Requires P smooth Fano (std::domain_error otherwise).
// budget_ms > 0 sets a cooperative deadline; exceeding it yields timeout.
SfpdgResult is_sfpdg(const LatticePolytope& p, long long budget_ms = 0);

}  // namespace fano
