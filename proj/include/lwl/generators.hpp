#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lwl/graph.hpp"

namespace lwl {

/// Deterministic PRNG wrapper; same seed, same graphs, on every platform
/// (mt19937_64 output is pinned by the standard, and the bounded draws
/// below avoid the implementation-defined distribution classes).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    /// Uniform-enough draw from 0..n-1 (n > 0); modulo bias is irrelevant
    /// at the sizes used here and keeps the sequence reproducible.
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    /// Uniform double in [0,1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 eng_;
};

Graph gen_cycle(int n);
Graph gen_path(int n);
Graph gen_complete(int n);

/// The hierarchy-separating pair: left is the (2r+6)-cycle with a chord
/// between antipodal-ish vertices {0, r+3}; right is two (r+3)-cycles
/// joined by a bridge. Same order, size and degree sequence.
std::pair<Graph, Graph> gen_chordal_pair(int r);

/// Cycle with skip links: edges {i, i+1} and {i, i+s} modulo n.
/// Duplicate edges collapse, keeping the graph simple.
Graph gen_csl(int n, int s);

Graph gen_shrikhande();
Graph gen_rook44();

/// Two triangles {0,1,2} and {3,4,5} joined by the bridge {2,3}.
Graph gen_two_triangles_bridge();

/// CFI graph over a connected base: one vertex per even-cardinality subset
/// of each base vertex's incident edges; (u,S) and (v,T) adjacent for a
/// base edge e = {u,v} iff S and T agree on e. The twisted variant flips
/// that relation at one edge-end. |V| = sum over v of 2^(deg(v)-1).
Graph gen_cfi(const Graph& base, bool twisted);

/// Random cactus grown from a single vertex by attaching pendant edges or
/// cycles of length 3..max_cycle_len at uniformly random vertices.
Graph gen_random_cactus(int n_target, int max_cycle_len, std::uint64_t seed);

/// Random rooted cactus (root 0) plus, per cycle, chords from the cycle
/// vertex closest to the root, each added with probability chord_prob.
std::pair<Graph, int> gen_fan_cactus(int n_target, int max_cycle_len, double chord_prob,
                                     std::uint64_t seed);

/// Erdos-Renyi G(n, p); handy for randomized fixtures and benchmarks.
Graph gen_gnp(int n, double p, std::uint64_t seed);

/// Uniformly random permutation of 0..n-1.
VertexPermutation gen_permutation(int n, Rng& rng);

}  // namespace lwl
