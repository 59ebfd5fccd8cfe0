#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "equidist/bounds.hpp"
#include "equidist/core.hpp"

namespace equidist {

inline constexpr std::uint64_t kDefaultMaxVertices = 4096;

/// Find the largest family in {0,...,q-1}^n with all pairwise distances equal
/// to lambda. This is a maximum clique in the distance-lambda graph.
struct SearchProblem {
    int n = 1;
    int q = 2;
    int lambda = 1;
    std::optional<std::uint64_t> node_budget;
    std::optional<std::chrono::milliseconds> time_budget;
    unsigned thread_count = 1;
    /// Fix the all-zero word and the word 0...01...1 (lambda trailing ones)
    /// as the first two members. Valid because the isometry group is
    /// transitive on words and on pairs at distance lambda.
    bool symmetry_reduction = true;
    /// Refuse problems with q^n above this.
    std::uint64_t max_vertices = kDefaultMaxVertices;
};

struct SearchResult {
    std::size_t max_size = 0;
    Family witness{1, 2};
    std::uint64_t nodes_explored = 0;
    /// True iff the search exhausted the space (up to symmetry).
    bool complete = false;
    BoundReport bound_comparison;
};

/// Branch-and-bound maximum clique with greedy-colouring bounds on
/// bit-packed candidate sets. For complete results the witness is the
/// lexicographically least maximum family, independent of thread_count.
///
/// The search never prunes with the single-distance bounds it is used to
/// test. Throws InvalidInput for bad parameters and ResourceLimit when q^n
/// exceeds max_vertices. A spent budget yields complete = false with the
/// best family found so far.
SearchResult max_equidistant(const SearchProblem& problem);

inline constexpr int kMaxExtremalLength = 6;

/// Every binary family of exactly n members at common distance lambda, one
/// canonical representative (lexicographically least image) per isometry
/// orbit, sorted. Empty when n members are not attainable.
///
/// Throws InvalidInput for the excluded lambda = (n+1)/2 (use max_equidistant
/// there) and ResourceLimit for n > kMaxExtremalLength.
std::vector<Family> enumerate_extremal(int n, int lambda);

}  // namespace equidist
