#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "lwl/graph.hpp"

namespace lwl {

/// Thrown when path enumeration would exceed the configured path budget
/// (dense graphs make the oriented-path sets blow up).
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultPathBudget = 1'000'000;
inline constexpr int kMaxPathLength = 8;

/// Oriented simple paths of length q between two distinct neighbors of a
/// vertex, avoiding the vertex itself, for every vertex and every
/// q = 1..r. Level q=0 is the plain neighbor list and lives in the graph.
///
/// Both orientations of each geometric path are stored; with that
/// convention |paths(v, q)| equals the number of injective homomorphisms
/// of the (q+2)-cycle into the graph that root a fixed cycle vertex at v.
///
/// Storage is a flat node array per (v, q) bucket, paths back to back in
/// lexicographic order, each of q+1 vertex ids.
class PathNeighborhood {
public:
    PathNeighborhood(int n, int r);

    int num_vertices() const { return n_; }
    int max_length() const { return r_; }
    std::size_t total_paths() const { return total_; }

    /// Number of stored oriented paths of length q at v.
    std::size_t count(int v, int q) const;

    /// Total paths at v summed over q = 1..r.
    std::size_t count_all(int v) const;

    /// Node sequence of the i-th path in bucket (v, q); q+1 ids.
    std::span<const int> path(int v, int q, std::size_t i) const;

    /// Whole flat bucket, length count(v,q) * (q+1).
    std::span<const int> bucket(int v, int q) const;

private:
    friend PathNeighborhood precompute_all(const Graph&, int, std::size_t);

    const std::vector<int>& raw(int v, int q) const;

    int n_ = 0;
    int r_ = 0;
    std::size_t total_ = 0;
    // store_[v][q-1] = flat node array
    std::vector<std::vector<std::vector<int>>> store_;
};

/// All oriented simple q-paths with both endpoints in N(v) and v excluded,
/// in lexicographic order by node sequence.
std::vector<std::vector<int>> enumerate_neighborhood(const Graph& g, int v, int q);

/// Bounded-depth DFS from each neighbor of v with v forbidden, for all
/// vertices and lengths up to r. Throws BudgetExceeded when the total
/// number of enumerated paths would pass `budget`.
PathNeighborhood precompute_all(const Graph& g, int r, std::size_t budget = kDefaultPathBudget);

/// Number of distinct simple L-cycles through v, i.e. |paths(v, L-2)| / 2.
long long count_cycles_through(const PathNeighborhood& pn, int v, int cycle_len);

}  // namespace lwl
