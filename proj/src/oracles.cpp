#include "lwl/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace lwl {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int u : g.neighbors(comp[i]))
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    comp.push_back(u);
                }
        comps.push_back(std::move(comp));
    }
    return comps;
}

// BFS order of `comp` starting from its max-degree vertex; keeps every
// vertex (except the first) adjacent to an earlier one, which is what the
// backtracking pruning relies on.
std::vector<int> bfs_order(const Graph& g, const std::vector<int>& comp) {
    int root = comp.front();
    for (int v : comp)
        if (g.degree(v) > g.degree(root)) root = v;
    std::vector<int> order{root};
    std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
    seen[static_cast<std::size_t>(root)] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int u : g.neighbors(order[i]))
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                order.push_back(u);
            }
    return order;
}

void check_count_limits(const Graph& f, const Graph& g, const OracleLimits& limits, const char* what) {
    if (f.num_vertices() > limits.max_pattern)
        throw OracleBudgetExceeded(std::string(what) + ": pattern has " + std::to_string(f.num_vertices()) +
                                   " vertices, budget is " + std::to_string(limits.max_pattern));
    if (g.num_vertices() > limits.max_host)
        throw OracleBudgetExceeded(std::string(what) + ": host has " + std::to_string(g.num_vertices()) +
                                   " vertices, budget is " + std::to_string(limits.max_host));
}

// Counts maps of one pattern component (given in BFS order) into g,
// optionally injective w.r.t. the shared `used` array.
struct MapCounter {
    const Graph& f;
    const Graph& g;
    const std::vector<int>& order;
    std::vector<int>& image;   // per pattern vertex, -1 if unassigned
    std::vector<char>& used;   // per host vertex (injective mode only)
    bool injective;

    BigInt count(std::size_t depth) {
        if (depth == order.size()) return 1;
        const int u = order[depth];
        BigInt total = 0;
        // Candidates: neighbors of some mapped pattern-neighbor's image,
        // or every host vertex for a component root.
        int anchor = -1;
        for (int un : f.neighbors(u))
            if (image[static_cast<std::size_t>(un)] >= 0) {
                anchor = image[static_cast<std::size_t>(un)];
                break;
            }
        auto try_candidate = [&](int w) {
            if (injective && used[static_cast<std::size_t>(w)]) return;
            for (int un : f.neighbors(u)) {
                int wu = image[static_cast<std::size_t>(un)];
                if (wu >= 0 && !g.has_edge(w, wu)) return;
            }
            image[static_cast<std::size_t>(u)] = w;
            if (injective) used[static_cast<std::size_t>(w)] = 1;
            total += count(depth + 1);
            if (injective) used[static_cast<std::size_t>(w)] = 0;
            image[static_cast<std::size_t>(u)] = -1;
        };
        if (anchor >= 0)
            for (int w : g.neighbors(anchor)) try_candidate(w);
        else
            for (int w = 0; w < g.num_vertices(); ++w) try_candidate(w);
        return total;
    }
};

}  // namespace

CountResult hom_count(const Graph& f, const Graph& g, const OracleLimits& limits) {
    const auto t0 = Clock::now();
    check_count_limits(f, g, limits, "hom_count");
    std::vector<int> image(static_cast<std::size_t>(f.num_vertices()), -1);
    std::vector<char> used;  // unused in hom mode
    BigInt total = 1;
    for (const auto& comp : connected_components(f)) {
        auto order = bfs_order(f, comp);
        MapCounter counter{f, g, order, image, used, false};
        total *= counter.count(0);
        for (int v : comp) image[static_cast<std::size_t>(v)] = -1;
        if (total == 0) break;
    }
    return {total, elapsed_since(t0)};
}

CountResult sub_count(const Graph& f, const Graph& g, const OracleLimits& limits) {
    const auto t0 = Clock::now();
    check_count_limits(f, g, limits, "sub_count");
    // Injectivity couples components, so map them in one pass.
    std::vector<int> order;
    for (const auto& comp : connected_components(f)) {
        auto part = bfs_order(f, comp);
        order.insert(order.end(), part.begin(), part.end());
    }
    std::vector<int> image(static_cast<std::size_t>(f.num_vertices()), -1);
    std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
    MapCounter counter{f, g, order, image, used, true};
    return {counter.count(0), elapsed_since(t0)};
}

CountResult rooted_sub_cycle(const Graph& g, int v, int cycle_len) {
    const auto t0 = Clock::now();
    if (cycle_len < 3 || cycle_len > 10)
        throw std::invalid_argument("rooted_sub_cycle: cycle length must be in 3..10");
    if (v < 0 || v >= g.num_vertices()) throw std::out_of_range("rooted_sub_cycle: vertex out of range");
    std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
    used[static_cast<std::size_t>(v)] = 1;
    BigInt total = 0;
    // Walk x_1..x_{L-1} with x_0 = v fixed and the last step closing to v.
    auto dfs = [&](auto&& self, int at, int remaining) -> void {
        if (remaining == 0) {
            if (g.has_edge(at, v)) ++total;
            return;
        }
        for (int w : g.neighbors(at)) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            self(self, w, remaining - 1);
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (int w : g.neighbors(v)) {
        used[static_cast<std::size_t>(w)] = 1;
        dfs(dfs, w, cycle_len - 2);
        used[static_cast<std::size_t>(w)] = 0;
    }
    return {total, elapsed_since(t0)};
}

namespace {

// Iterates set partitions of {0..n-1} as restricted growth strings.
bool next_partition(std::vector<int>& rgs, std::vector<int>& maxes) {
    const int n = static_cast<int>(rgs.size());
    for (int i = n - 1; i >= 1; --i) {
        if (rgs[static_cast<std::size_t>(i)] <= maxes[static_cast<std::size_t>(i - 1)]) {
            ++rgs[static_cast<std::size_t>(i)];
            maxes[static_cast<std::size_t>(i)] =
                std::max(maxes[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
            for (int j = i + 1; j < n; ++j) {
                rgs[static_cast<std::size_t>(j)] = 0;
                maxes[static_cast<std::size_t>(j)] = maxes[static_cast<std::size_t>(i)];
            }
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<Graph> spasm(const Graph& f, const OracleLimits& limits) {
    const int n = f.num_vertices();
    if (n > limits.max_spasm)
        throw OracleBudgetExceeded("spasm: pattern has " + std::to_string(n) + " vertices, budget is " +
                                   std::to_string(limits.max_spasm));
    std::vector<Graph> reps;
    if (n == 0) return {Graph(0)};
    std::vector<int> rgs(static_cast<std::size_t>(n), 0), maxes(static_cast<std::size_t>(n), 0);
    do {
        const int blocks = 1 + *std::max_element(rgs.begin(), rgs.end());
        // Blocks must be independent sets, otherwise the quotient map is
        // not a homomorphism.
        bool ok = true;
        for (auto [u, v] : f.edges())
            if (rgs[static_cast<std::size_t>(u)] == rgs[static_cast<std::size_t>(v)]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        Graph q(blocks);
        for (auto [u, v] : f.edges())
            q.add_edge(rgs[static_cast<std::size_t>(u)], rgs[static_cast<std::size_t>(v)]);
        bool fresh = true;
        for (const auto& rep : reps)
            if (is_iso_bruteforce(rep, q, limits)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(std::move(q));
    } while (next_partition(rgs, maxes));
    return reps;
}

namespace {

// Necessary-condition vertex classes shared across two graphs: iterated
// (color, sorted neighbor colors) refinement starting from degrees. The
// class ids are comparable between f and g because the signature tables
// are shared.
std::pair<std::vector<int>, std::vector<int>> joint_refinement_classes(const Graph& f, const Graph& g) {
    const int nf = f.num_vertices();
    const int ng = g.num_vertices();
    std::vector<int> cf(static_cast<std::size_t>(nf)), cg(static_cast<std::size_t>(ng));
    for (int v = 0; v < nf; ++v) cf[static_cast<std::size_t>(v)] = f.degree(v);
    for (int v = 0; v < ng; ++v) cg[static_cast<std::size_t>(v)] = g.degree(v);
    auto distinct = [](std::vector<int> a, const std::vector<int>& b) {
        a.insert(a.end(), b.begin(), b.end());
        std::sort(a.begin(), a.end());
        return std::unique(a.begin(), a.end()) - a.begin();
    };
    auto prev_classes = distinct(cf, cg);
    for (int round = 0; round < nf + ng; ++round) {
        std::map<std::vector<int>, int> table;
        auto sig = [&](const Graph& h, const std::vector<int>& c, int v) {
            std::vector<int> s{c[static_cast<std::size_t>(v)]};
            for (int u : h.neighbors(v)) s.push_back(c[static_cast<std::size_t>(u)]);
            std::sort(s.begin() + 1, s.end());
            return s;
        };
        std::vector<int> nf2(static_cast<std::size_t>(nf)), ng2(static_cast<std::size_t>(ng));
        for (int v = 0; v < nf; ++v) {
            auto [it, _] = table.emplace(sig(f, cf, v), static_cast<int>(table.size()));
            nf2[static_cast<std::size_t>(v)] = it->second;
        }
        for (int v = 0; v < ng; ++v) {
            auto [it, _] = table.emplace(sig(g, cg, v), static_cast<int>(table.size()));
            ng2[static_cast<std::size_t>(v)] = it->second;
        }
        cf = std::move(nf2);
        cg = std::move(ng2);
        // Each round refines the partition, so an unchanged class count
        // means the partition is stable.
        const auto classes = static_cast<long>(table.size());
        if (classes == prev_classes) break;
        prev_classes = classes;
    }
    return {cf, cg};
}

}  // namespace

bool is_iso_bruteforce(const Graph& f, const Graph& g, const OracleLimits& limits) {
    if (f.num_vertices() != g.num_vertices() || f.num_edges() != g.num_edges()) return false;
    const int n = f.num_vertices();
    if (n > limits.max_iso)
        throw OracleBudgetExceeded("is_iso_bruteforce: " + std::to_string(n) + " vertices, budget is " +
                                   std::to_string(limits.max_iso));
    if (n == 0) return true;

    auto [cf, cg] = joint_refinement_classes(f, g);
    {
        auto hf = cf, hg = cg;
        std::sort(hf.begin(), hf.end());
        std::sort(hg.begin(), hg.end());
        if (hf != hg) return false;
    }

    // Map f's vertices in BFS order; candidates restricted to the same
    // refinement class and checked for exact (induced) adjacency agreement
    // against everything mapped so far.
    std::vector<int> order;
    for (const auto& comp : connected_components(f)) {
        auto part = bfs_order(f, comp);
        order.insert(order.end(), part.begin(), part.end());
    }
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto dfs = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        const int u = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (cg[static_cast<std::size_t>(w)] != cf[static_cast<std::size_t>(u)]) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                const int u2 = order[d];
                ok = f.has_edge(u, u2) == g.has_edge(w, image[static_cast<std::size_t>(u2)]);
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(u)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (self(self, depth + 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
            image[static_cast<std::size_t>(u)] = -1;
        }
        return false;
    };
    return dfs(dfs, 0);
}

bool is_forest(const Graph& g) {
    return g.num_edges() == g.num_vertices() - num_components(g);
}

}  // namespace lwl
