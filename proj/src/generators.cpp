#include "lwl/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lwl {

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle: need n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("gen_path: need n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("gen_complete: need n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

std::pair<Graph, Graph> gen_chordal_pair(int r) {
    if (r < 0) throw std::invalid_argument("gen_chordal_pair: need r >= 0");
    const int n = 2 * r + 6;
    Graph left = gen_cycle(n);
    left.add_edge(0, r + 3);

    const int c = r + 3;  // cycle length on each side
    Graph right(n);
    for (int i = 0; i < c; ++i) right.add_edge(i, (i + 1) % c);
    for (int i = 0; i < c; ++i) right.add_edge(c + i, c + (i + 1) % c);
    right.add_edge(0, c);
    return {std::move(left), std::move(right)};
}

Graph gen_csl(int n, int s) {
    if (n < 5) throw std::invalid_argument("gen_csl: need n >= 5");
    if (s < 2 || s > n - 2) throw std::invalid_argument("gen_csl: need 2 <= s <= n-2");
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, (i + s) % n);
    }
    return g;
}

Graph gen_shrikhande() {
    // Cayley graph of Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
    Graph g(16);
    const int diffs[][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (auto [da, db] : diffs) {
                int u = 4 * a + b;
                int v = 4 * ((a + da) % 4) + (b + db) % 4;
                if (u != v) g.add_edge(u, v);
            }
    return g;
}

Graph gen_rook44() {
    Graph g(16);
    for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j) {
            const bool same_row = i / 4 == j / 4;
            const bool same_col = i % 4 == j % 4;
            if (same_row != same_col) g.add_edge(i, j);
        }
    return g;
}

Graph gen_two_triangles_bridge() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    g.add_edge(2, 3);
    return g;
}

Graph gen_cfi(const Graph& base, bool twisted) {
    const int n = base.num_vertices();
    if (n == 0) throw std::invalid_argument("gen_cfi: empty base");
    if (!is_connected(base)) throw std::invalid_argument("gen_cfi: base must be connected");
    for (int v = 0; v < n; ++v)
        if (base.degree(v) > 8)
            throw std::invalid_argument("gen_cfi: base degree " + std::to_string(base.degree(v)) +
                                        " exceeds the budget of 8");

    const auto base_edges = base.edges();
    const int m = static_cast<int>(base_edges.size());
    // Edge index lookup per incidence.
    std::vector<std::vector<std::pair<int, int>>> incident(static_cast<std::size_t>(n));  // (edge id, other end)
    for (int e = 0; e < m; ++e) {
        auto [u, v] = base_edges[static_cast<std::size_t>(e)];
        incident[static_cast<std::size_t>(u)].emplace_back(e, v);
        incident[static_cast<std::size_t>(v)].emplace_back(e, u);
    }

    // Gadget vertices: (v, S) for every even-cardinality S, S encoded as a
    // bitmask over the local incidence list of v.
    std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> masks(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        offset[static_cast<std::size_t>(v) + 1] = offset[static_cast<std::size_t>(v)];
        const int d = base.degree(v);
        for (int mask = 0; mask < (1 << d); ++mask)
            if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 == 0) {
                masks[static_cast<std::size_t>(v)].push_back(mask);
                ++offset[static_cast<std::size_t>(v) + 1];
            }
    }
    Graph out(offset[static_cast<std::size_t>(n)]);

    auto local_bit = [&](int v, int e) {
        const auto& inc = incident[static_cast<std::size_t>(v)];
        for (int i = 0; i < static_cast<int>(inc.size()); ++i)
            if (inc[static_cast<std::size_t>(i)].first == e) return i;
        throw std::logic_error("gen_cfi: edge not incident");
    };

    // The twist flips the agreement relation at one end of one edge; for a
    // connected base the choice is irrelevant up to isomorphism, so take
    // edge 0 at its first endpoint.
    const int twist_edge = 0;
    const int twist_vertex = twisted ? base_edges[0].first : -1;

    for (int e = 0; e < m; ++e) {
        auto [u, v] = base_edges[static_cast<std::size_t>(e)];
        const int bu = local_bit(u, e);
        const int bv = local_bit(v, e);
        for (int i = 0; i < static_cast<int>(masks[static_cast<std::size_t>(u)].size()); ++i)
            for (int j = 0; j < static_cast<int>(masks[static_cast<std::size_t>(v)].size()); ++j) {
                bool in_u = (masks[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)] >> bu) & 1;
                bool in_v = (masks[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] >> bv) & 1;
                bool agree = in_u == in_v;
                if (e == twist_edge && (u == twist_vertex || v == twist_vertex)) agree = !agree;
                if (agree)
                    out.add_edge(offset[static_cast<std::size_t>(u)] + i,
                                 offset[static_cast<std::size_t>(v)] + j);
            }
    }
    return out;
}

namespace {

struct CactusBuilder {
    Graph g{1};
    Rng rng;
    // One entry per attached cycle: the attachment vertex followed by the
    // new vertices in cycle order.
    std::vector<std::vector<int>> cycles;

    explicit CactusBuilder(std::uint64_t seed) : rng(seed) {}

    void grow(int n_target, int max_cycle_len) {
        while (g.num_vertices() < n_target) {
            const int at = rng.below(g.num_vertices());
            const bool attach_cycle = rng.below(2) == 1;
            if (attach_cycle) {
                const int len = 3 + rng.below(max_cycle_len - 2);
                std::vector<int> cyc{at};
                int prev = at;
                for (int i = 0; i < len - 1; ++i) {
                    const int fresh = g.add_vertex();
                    g.add_edge(prev, fresh);
                    cyc.push_back(fresh);
                    prev = fresh;
                }
                g.add_edge(prev, at);
                cycles.push_back(std::move(cyc));
            } else {
                const int fresh = g.add_vertex();
                g.add_edge(at, fresh);
            }
        }
    }
};

}  // namespace

Graph gen_random_cactus(int n_target, int max_cycle_len, std::uint64_t seed) {
    if (n_target < 1) throw std::invalid_argument("gen_random_cactus: need n_target >= 1");
    if (max_cycle_len < 3) throw std::invalid_argument("gen_random_cactus: need max_cycle_len >= 3");
    CactusBuilder b(seed);
    b.grow(n_target, max_cycle_len);
    return std::move(b.g);
}

std::pair<Graph, int> gen_fan_cactus(int n_target, int max_cycle_len, double chord_prob,
                                     std::uint64_t seed) {
    if (chord_prob < 0.0 || chord_prob > 1.0)
        throw std::invalid_argument("gen_fan_cactus: chord_prob must be in [0,1]");
    if (n_target < 1) throw std::invalid_argument("gen_fan_cactus: need n_target >= 1");
    if (max_cycle_len < 3) throw std::invalid_argument("gen_fan_cactus: need max_cycle_len >= 3");
    CactusBuilder b(seed);
    b.grow(n_target, max_cycle_len);
    // Growth attaches every cycle at its root-closest vertex (entry 0 of
    // the cycle record), so chords fan out from there.
    for (const auto& cyc : b.cycles) {
        const int root_v = cyc.front();
        for (std::size_t i = 2; i + 1 < cyc.size(); ++i)
            if (b.rng.unit() < chord_prob) b.g.add_edge(root_v, cyc[i]);
    }
    return {std::move(b.g), 0};
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gen_gnp: need n >= 0");
    Rng rng(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < p) g.add_edge(i, j);
    return g;
}

VertexPermutation gen_permutation(int n, Rng& rng) {
    VertexPermutation p = VertexPermutation::identity(n);
    for (int i = n - 1; i > 0; --i)
        std::swap(p.sigma[static_cast<std::size_t>(i)], p.sigma[static_cast<std::size_t>(rng.below(i + 1))]);
    return p;
}

}  // namespace lwl
