#include "lwl/refine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lwl {

std::string MethodSpec::name() const {
    switch (kind) {
        case MethodKind::Wl1: return "wl1";
        case MethodKind::Loopy: return "loopy(" + std::to_string(r) + ")";
        case MethodKind::Kwl: return "kwl(" + std::to_string(k) + ")";
    }
    return "?";
}

namespace {

using Sig = std::vector<int>;

constexpr int kSep = -1;

void append_signature(std::string& out, const Sig& sig) {
    for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(sig[static_cast<std::size_t>(i)]);
    }
}

// Shared refinement driver. `initial(u)` yields the round-0 signature of
// unit u, `update(u, colors)` the round-t signature over round-(t-1)
// canonical color ids. Every round sorts the distinct signatures and
// numbers them in order, which keeps ids canonical, then stops as soon as
// the partition stops refining (a constant class count, since each round
// refines the previous partition).
template <typename InitFn, typename UpdateFn>
RefinementResult run_refinement(std::size_t units, const std::string& header, InitFn&& initial,
                                UpdateFn&& update, int max_iters) {
    RefinementResult result;
    std::string transcript = header;

    std::vector<int> colors(units, 0);
    int num_colors = 0;
    using Table = std::map<Sig, std::pair<int, int>>;  // sig -> (count, rank)
    auto assign_round = [&](auto&& sig_of, int round) {
        Table table;
        std::vector<Table::iterator> slot(units);
        for (std::size_t u = 0; u < units; ++u) {
            auto [it, fresh] = table.try_emplace(sig_of(u), std::pair<int, int>{0, 0});
            ++it->second.first;
            slot[u] = it;
        }
        int rank = 0;
        transcript += "|R" + std::to_string(round) + ":";
        for (auto& [sig, entry] : table) {
            entry.second = rank++;
            append_signature(transcript, sig);
            transcript += ":" + std::to_string(entry.first) + ";";
        }
        for (std::size_t u = 0; u < units; ++u) colors[u] = slot[u]->second.second;
        num_colors = static_cast<int>(table.size());
    };

    assign_round([&](std::size_t u) { return initial(u); }, 0);
    result.history.push_back({colors, 0, num_colors});

    const int cap = max_iters > 0 ? max_iters : static_cast<int>(units);
    int t = 0;
    while (t < cap && units > 0) {
        const int prev_count = num_colors;
        const std::vector<int> prev = colors;
        ++t;
        assign_round([&](std::size_t u) { return update(u, prev); }, t);
        result.history.push_back({colors, t, num_colors});
        if (num_colors == prev_count) break;  // partition stable
    }
    result.iterations = t;
    result.stable = result.history.back();
    result.graph_invariant = transcript + "|iters=" + std::to_string(t);
    return result;
}

Sig initial_vertex_sig(const RefineOptions& opts, std::size_t v) {
    if (opts.seed_labels.empty()) return {0};
    return {opts.seed_labels[v]};
}

void check_seed_labels(const Graph& g, const RefineOptions& opts) {
    if (!opts.seed_labels.empty() &&
        opts.seed_labels.size() != static_cast<std::size_t>(g.num_vertices()))
        throw std::invalid_argument("seed label vector size does not match the graph");
}

}  // namespace

RefinementResult wl1_refine(const Graph& g, const RefineOptions& opts) {
    check_seed_labels(g, opts);
    const std::size_t n = static_cast<std::size_t>(g.num_vertices());
    auto update = [&](std::size_t v, const std::vector<int>& c) {
        Sig sig{c[v], kSep};
        for (int u : g.neighbors(static_cast<int>(v))) sig.push_back(c[static_cast<std::size_t>(u)]);
        std::sort(sig.begin() + 2, sig.end());
        return sig;
    };
    return run_refinement(
        n, "wl1", [&](std::size_t v) { return initial_vertex_sig(opts, v); }, update, opts.max_iters);
}

RefinementResult loopy_refine(const Graph& g, const PathNeighborhood& pn, int r,
                              const RefineOptions& opts) {
    check_seed_labels(g, opts);
    if (pn.num_vertices() != g.num_vertices())
        throw std::invalid_argument("loopy_refine: path neighborhood built for a different graph");
    if (pn.max_length() < r)
        throw std::invalid_argument("loopy_refine: path neighborhood only covers q <= " +
                                    std::to_string(pn.max_length()));
    if (r < 0) throw std::invalid_argument("loopy_refine: r must be >= 0");

    const std::size_t n = static_cast<std::size_t>(g.num_vertices());
    auto update = [&](std::size_t vi, const std::vector<int>& c) {
        const int v = static_cast<int>(vi);
        Sig sig{c[vi], kSep};
        for (int u : g.neighbors(v)) sig.push_back(c[static_cast<std::size_t>(u)]);
        std::sort(sig.begin() + 2, sig.end());
        for (int q = 1; q <= r; ++q) {
            const std::size_t cnt = pn.count(v, q);
            // Color tuples along each stored path, as a sorted multiset.
            std::vector<Sig> tuples(cnt);
            for (std::size_t i = 0; i < cnt; ++i) {
                auto nodes = pn.path(v, q, i);
                Sig& tup = tuples[i];
                tup.reserve(nodes.size() * (opts.atp ? 2 : 1));
                for (int node : nodes) {
                    if (opts.atp) tup.push_back(g.has_edge(v, node) ? 1 : 0);
                    tup.push_back(c[static_cast<std::size_t>(node)]);
                }
            }
            std::sort(tuples.begin(), tuples.end());
            sig.push_back(kSep);
            sig.push_back(static_cast<int>(cnt));
            for (const Sig& tup : tuples) sig.insert(sig.end(), tup.begin(), tup.end());
        }
        return sig;
    };
    const std::string header = "loopy;r=" + std::to_string(r) + (opts.atp ? ";atp" : "");
    return run_refinement(
        n, header, [&](std::size_t v) { return initial_vertex_sig(opts, v); }, update, opts.max_iters);
}

namespace {

// Mixed-radix tuple indexing for k-WL: index = sum_i v_i * n^i.
struct TupleSpace {
    int n;
    int k;
    std::size_t size;

    static TupleSpace make(int n, int k, std::size_t limit) {
        if (k < 2 || k > 3) throw std::invalid_argument("kwl: k must be 2 or 3");
        std::size_t size = 1;
        for (int i = 0; i < k; ++i) {
            if (n > 0 && size > limit / static_cast<std::size_t>(n))
                throw std::invalid_argument("kwl: n^k exceeds the tuple limit of " + std::to_string(limit));
            size *= static_cast<std::size_t>(n);
        }
        return {n, k, size};
    }

    void decode(std::size_t idx, int* out) const {
        for (int i = 0; i < k; ++i) {
            out[i] = static_cast<int>(idx % static_cast<std::size_t>(n));
            idx /= static_cast<std::size_t>(n);
        }
    }
};

}  // namespace

RefinementResult kwl_refine(const Graph& g, int k, const RefineOptions& opts) {
    const int n = g.num_vertices();
    const TupleSpace space = TupleSpace::make(n, k, opts.kwl_tuple_limit);

    std::vector<std::size_t> pow(static_cast<std::size_t>(k), 1);
    for (int i = 1; i < k; ++i) pow[static_cast<std::size_t>(i)] = pow[static_cast<std::size_t>(i - 1)] * static_cast<std::size_t>(n);

    auto initial = [&](std::size_t idx) {
        int v[3];
        space.decode(idx, v);
        // Ordered atomic type: equality pattern then position-wise adjacency.
        Sig sig;
        for (int i = 0; i < k; ++i) {
            int first = i;
            for (int j = 0; j < i; ++j)
                if (v[j] == v[i]) {
                    first = j;
                    break;
                }
            sig.push_back(first);
        }
        sig.push_back(kSep);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                sig.push_back(v[i] != v[j] && g.has_edge(v[i], v[j]) ? 1 : 0);
        return sig;
    };

    auto update_oblivious = [&](std::size_t idx, const std::vector<int>& c) {
        int v[3];
        space.decode(idx, v);
        Sig sig{c[idx]};
        for (int j = 0; j < k; ++j) {
            sig.push_back(kSep);
            const std::size_t base = idx - static_cast<std::size_t>(v[j]) * pow[static_cast<std::size_t>(j)];
            const std::size_t start = sig.size();
            for (int w = 0; w < n; ++w)
                sig.push_back(c[base + static_cast<std::size_t>(w) * pow[static_cast<std::size_t>(j)]]);
            std::sort(sig.begin() + static_cast<std::ptrdiff_t>(start), sig.end());
        }
        return sig;
    };

    auto update_literal = [&](std::size_t idx, const std::vector<int>& c) {
        int v[3];
        space.decode(idx, v);
        Sig sig{c[idx], kSep};
        const std::size_t start = sig.size();
        for (int j = 0; j < k; ++j) {
            const std::size_t base = idx - static_cast<std::size_t>(v[j]) * pow[static_cast<std::size_t>(j)];
            for (int w = 0; w < n; ++w)
                if (w != v[j]) sig.push_back(c[base + static_cast<std::size_t>(w) * pow[static_cast<std::size_t>(j)]]);
        }
        std::sort(sig.begin() + static_cast<std::ptrdiff_t>(start), sig.end());
        return sig;
    };

    const std::string header =
        "kwl;k=" + std::to_string(k) + (opts.kwl_literal ? ";literal" : ";oblivious");
    if (opts.kwl_literal)
        return run_refinement(space.size, header, initial, update_literal, opts.max_iters);
    return run_refinement(space.size, header, initial, update_oblivious, opts.max_iters);
}

RefinementResult refine(const Graph& g, const MethodSpec& method, const RefineOptions& opts) {
    switch (method.kind) {
        case MethodKind::Wl1: return wl1_refine(g, opts);
        case MethodKind::Loopy: {
            const PathNeighborhood pn = precompute_all(g, method.r, opts.path_budget);
            return loopy_refine(g, pn, method.r, opts);
        }
        case MethodKind::Kwl: return kwl_refine(g, method.k, opts);
    }
    throw std::logic_error("refine: unknown method");
}

namespace {

std::string histogram_string(const std::vector<std::pair<int, long long>>& hist) {
    std::string out;
    for (auto [color, count] : hist) out += std::to_string(color) + ":" + std::to_string(count) + ";";
    return out;
}

std::vector<std::pair<int, long long>> side_histogram(const std::vector<int>& colors,
                                                      const std::vector<char>& in_side) {
    std::map<int, long long> acc;
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (in_side[i]) ++acc[colors[i]];
    return {acc.begin(), acc.end()};
}

}  // namespace

CompareResult compare_graphs(const Graph& g, const Graph& h, const MethodSpec& method,
                             const RefineOptions& opts) {
    if (!opts.seed_labels.empty())
        throw std::invalid_argument("compare_graphs: seed labels are not supported in joint runs");
    const Graph joint = disjoint_union(g, h);
    RefinementResult res = refine(joint, method, opts);

    std::vector<char> side_g, side_h;
    if (method.kind == MethodKind::Kwl) {
        const int n = joint.num_vertices();
        const int k = method.k;
        const std::size_t units = res.stable.colors.size();
        side_g.assign(units, 0);
        side_h.assign(units, 0);
        for (std::size_t idx = 0; idx < units; ++idx) {
            std::size_t rest = idx;
            bool all_g = true, all_h = true;
            for (int i = 0; i < k; ++i) {
                const int v = static_cast<int>(rest % static_cast<std::size_t>(n));
                rest /= static_cast<std::size_t>(n);
                if (v < g.num_vertices()) all_h = false;
                else all_g = false;
            }
            side_g[idx] = all_g;
            side_h[idx] = all_h;
        }
    } else {
        const std::size_t units = res.stable.colors.size();
        side_g.assign(units, 0);
        side_h.assign(units, 0);
        for (std::size_t v = 0; v < units; ++v) {
            side_g[v] = v < static_cast<std::size_t>(g.num_vertices());
            side_h[v] = !side_g[v];
        }
    }

    CompareResult out;
    const auto hist_g = side_histogram(res.stable.colors, side_g);
    const auto hist_h = side_histogram(res.stable.colors, side_h);
    out.distinguished = hist_g != hist_h;
    out.iterations = res.iterations;
    out.invariant_g = histogram_string(hist_g);
    out.invariant_h = histogram_string(hist_h);
    return out;
}

std::string invariant_fingerprint(const Graph& g, const MethodSpec& method,
                                  const RefineOptions& opts) {
    return refine(g, method, opts).graph_invariant;
}

}  // namespace lwl
