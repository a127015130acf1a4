#include "lwl/paths.hpp"

#include <algorithm>
#include <cstdint>

namespace lwl {

PathNeighborhood::PathNeighborhood(int n, int r) : n_(n), r_(r) {
    store_.resize(static_cast<std::size_t>(n));
    for (auto& per_q : store_) per_q.resize(static_cast<std::size_t>(std::max(r, 0)));
}

const std::vector<int>& PathNeighborhood::raw(int v, int q) const {
    if (v < 0 || v >= n_) throw std::out_of_range("PathNeighborhood: vertex out of range");
    if (q < 1 || q > r_) throw std::out_of_range("PathNeighborhood: q out of range 1.." + std::to_string(r_));
    return store_[static_cast<std::size_t>(v)][static_cast<std::size_t>(q - 1)];
}

std::size_t PathNeighborhood::count(int v, int q) const {
    return raw(v, q).size() / static_cast<std::size_t>(q + 1);
}

std::size_t PathNeighborhood::count_all(int v) const {
    std::size_t total = 0;
    for (int q = 1; q <= r_; ++q) total += count(v, q);
    return total;
}

std::span<const int> PathNeighborhood::path(int v, int q, std::size_t i) const {
    const auto& flat = raw(v, q);
    const std::size_t len = static_cast<std::size_t>(q + 1);
    if ((i + 1) * len > flat.size()) throw std::out_of_range("PathNeighborhood: path index out of range");
    return {flat.data() + i * len, len};
}

std::span<const int> PathNeighborhood::bucket(int v, int q) const {
    const auto& flat = raw(v, q);
    return {flat.data(), flat.size()};
}

namespace {

// DFS over simple paths rooted at each neighbor of v in sorted order;
// since adjacency lists are sorted, completed paths of a fixed length come
// out in lexicographic order already.
struct PathDfs {
    const Graph& g;
    int v;
    int max_len;
    std::size_t* steps = nullptr;   // shared expansion counter, optional
    std::size_t step_limit = 0;
    std::vector<char> on_path;
    std::vector<int> nodes;

    // sink(q, nodes) is called for every completed path of length q
    // whose last node is a neighbor of v.
    template <typename Sink>
    void run(Sink&& sink) {
        on_path.assign(static_cast<std::size_t>(g.num_vertices()), 0);
        on_path[static_cast<std::size_t>(v)] = 1;
        for (int start : g.neighbors(v)) {
            nodes.assign(1, start);
            on_path[static_cast<std::size_t>(start)] = 1;
            extend(sink);
            on_path[static_cast<std::size_t>(start)] = 0;
        }
    }

    template <typename Sink>
    void extend(Sink&& sink) {
        if (steps && ++*steps > step_limit)
            throw BudgetExceeded("path enumeration aborted: exploration limit of " +
                                 std::to_string(step_limit) + " DFS steps exceeded at vertex " +
                                 std::to_string(v));
        const int len = static_cast<int>(nodes.size()) - 1;
        if (len >= 1 && g.has_edge(nodes.back(), v)) sink(len, nodes);
        if (len == max_len) return;
        for (int w : g.neighbors(nodes.back())) {
            if (on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            nodes.push_back(w);
            extend(sink);
            nodes.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    }
};

}  // namespace

std::vector<std::vector<int>> enumerate_neighborhood(const Graph& g, int v, int q) {
    if (v < 0 || v >= g.num_vertices()) throw std::out_of_range("enumerate_neighborhood: vertex out of range");
    if (q < 1) throw std::invalid_argument("enumerate_neighborhood: q must be >= 1");
    std::vector<std::vector<int>> out;
    PathDfs dfs{g, v, q, nullptr, 0, {}, {}};
    dfs.run([&](int len, const std::vector<int>& nodes) {
        if (len == q) out.push_back(nodes);
    });
    return out;
}

PathNeighborhood precompute_all(const Graph& g, int r, std::size_t budget) {
    if (r < 0) throw std::invalid_argument("precompute_all: r must be >= 0");
    if (r > kMaxPathLength)
        throw std::invalid_argument("precompute_all: r exceeds the configured maximum " +
                                    std::to_string(kMaxPathLength));
    PathNeighborhood pn(g.num_vertices(), r);
    if (r == 0) return pn;
    std::size_t steps = 0;
    const std::size_t step_limit = budget > (SIZE_MAX >> 7) ? SIZE_MAX : budget * 64;
    for (int v = 0; v < g.num_vertices(); ++v) {
        auto& per_q = pn.store_[static_cast<std::size_t>(v)];
        PathDfs dfs{g, v, r, &steps, step_limit, {}, {}};
        dfs.run([&](int len, const std::vector<int>& nodes) {
            if (++pn.total_ > budget)
                throw BudgetExceeded("path budget of " + std::to_string(budget) +
                                     " exceeded at vertex " + std::to_string(v));
            auto& flat = per_q[static_cast<std::size_t>(len - 1)];
            flat.insert(flat.end(), nodes.begin(), nodes.end());
        });
    }
    return pn;
}

long long count_cycles_through(const PathNeighborhood& pn, int v, int cycle_len) {
    const int q = cycle_len - 2;
    if (cycle_len < 3 || q > pn.max_length())
        throw std::out_of_range("count_cycles_through: cycle length " + std::to_string(cycle_len) +
                                " outside 3.." + std::to_string(pn.max_length() + 2));
    return static_cast<long long>(pn.count(v, q)) / 2;
}

}  // namespace lwl
