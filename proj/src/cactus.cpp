#include "lwl/cactus.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lwl {

namespace {

std::vector<int> block_vertices(const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> vs;
    for (auto [u, v] : edges) {
        vs.push_back(u);
        vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool block_is_cycle(const std::vector<std::pair<int, int>>& edges) {
    if (edges.size() < 3) return false;
    auto vs = block_vertices(edges);
    if (vs.size() != edges.size()) return false;
    std::map<int, int> deg;
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    for (auto [_, d] : deg)
        if (d != 2) return false;
    return true;
}

}  // namespace

bool is_cactus(const Graph& g) {
    for (const auto& block : biconnected_components(g))
        if (block.size() > 1 && !block_is_cycle(block)) return false;
    return true;
}

bool is_r_cactus(const Graph& g, int r) {
    for (const auto& block : biconnected_components(g)) {
        if (block.size() == 1) continue;
        if (!block_is_cycle(block)) return false;
        if (static_cast<int>(block_vertices(block).size()) > r) return false;
    }
    return true;
}

int TreeDecomposition::width() const {
    std::size_t w = 0;
    for (const auto& bag : bags) w = std::max(w, bag.size());
    return static_cast<int>(w) - 1;
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int s) {
    std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
    std::vector<int> frontier{s};
    dist[static_cast<std::size_t>(s)] = 0;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier)
            for (int u : g.neighbors(v))
                if (dist[static_cast<std::size_t>(u)] < 0) {
                    dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                    next.push_back(u);
                }
        frontier = std::move(next);
    }
    return dist;
}

struct FanBlock {
    std::vector<std::pair<int, int>> edges;
    int root = -1;             // the block vertex closest to the decomposition root
    bool bridge = false;
    int bridge_other = -1;
    // For cycle blocks: the underlying cycle minus the root, as a path
    // from one root-neighbor to the other, plus the fan-chord flags.
    std::vector<int> path;
    std::vector<char> chord;   // parallel to path
};

// Splits g into fan-cactus blocks rooted toward s, throwing on anything
// that is not a connected fan cactus.
struct FanStructure {
    std::vector<FanBlock> blocks;
    std::vector<std::vector<int>> children;  // vertex -> indices of blocks rooted there

    FanStructure(const Graph& g, int s) {
        if (g.num_vertices() == 0) throw NotCactusError("empty graph");
        if (s < 0 || s >= g.num_vertices()) throw std::out_of_range("root out of range");
        if (!is_connected(g)) throw NotCactusError("graph is disconnected");

        const auto dist = bfs_distances(g, s);
        children.resize(static_cast<std::size_t>(g.num_vertices()));
        for (auto& edges : biconnected_components(g)) {
            FanBlock blk;
            blk.edges = std::move(edges);
            auto vs = block_vertices(blk.edges);
            blk.root = vs.front();
            bool unique_min = true;
            for (int v : vs) {
                if (dist[static_cast<std::size_t>(v)] < dist[static_cast<std::size_t>(blk.root)]) {
                    blk.root = v;
                    unique_min = true;
                } else if (v != blk.root &&
                           dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(blk.root)]) {
                    unique_min = false;
                }
            }
            if (!unique_min) throw NotCactusError("block without a unique root-closest vertex");

            if (blk.edges.size() == 1) {
                blk.bridge = true;
                auto [u, v] = blk.edges.front();
                blk.bridge_other = u == blk.root ? v : u;
            } else {
                analyze_cycle(blk, vs);
            }
            children[static_cast<std::size_t>(blk.root)].push_back(static_cast<int>(blocks.size()));
            blocks.push_back(std::move(blk));
        }
    }

    // The block minus its root must be a simple path whose endpoints are
    // adjacent to the root; everything else from the root is a fan chord.
    static void analyze_cycle(FanBlock& blk, const std::vector<int>& vs) {
        std::map<int, std::vector<int>> adj;  // block adjacency without the root
        std::set<int> root_nbrs;
        for (auto [u, v] : blk.edges) {
            if (u == blk.root) {
                root_nbrs.insert(v);
                continue;
            }
            if (v == blk.root) {
                root_nbrs.insert(u);
                continue;
            }
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        const NotCactusError bad(
            "block is not a fan cycle (chords must fan out from the root-closest vertex)");
        const std::size_t rest = vs.size() - 1;
        std::vector<int> ends;
        std::size_t inner_edges = 0;
        for (auto& [v, nb] : adj) {
            inner_edges += nb.size();
            if (nb.size() > 2) throw bad;
            if (nb.size() == 1) ends.push_back(v);
        }
        inner_edges /= 2;
        if (adj.size() != rest || inner_edges != rest - 1 || ends.size() != 2) throw bad;
        // Walk the path from the smaller endpoint.
        std::sort(ends.begin(), ends.end());
        blk.path.clear();
        int prev = -1, at = ends.front();
        while (true) {
            blk.path.push_back(at);
            int next = -1;
            for (int w : adj[at])
                if (w != prev) next = w;
            if (next < 0) break;
            prev = at;
            at = next;
        }
        if (blk.path.size() != rest) throw bad;
        if (!root_nbrs.count(blk.path.front()) || !root_nbrs.count(blk.path.back())) throw bad;
        blk.chord.assign(blk.path.size(), 0);
        for (std::size_t i = 1; i + 1 < blk.path.size(); ++i)
            if (root_nbrs.count(blk.path[i])) blk.chord[i] = 1;
        // Every root edge must be a cycle edge or a recognized chord.
        std::size_t accounted = 2;
        for (std::size_t i = 1; i + 1 < blk.path.size(); ++i) accounted += blk.chord[i] ? 1 : 0;
        if (accounted != root_nbrs.size()) throw bad;
    }
};

// Relabel-invariant canonical code of the rooted fan cactus, computed
// bottom-up over the block structure. Picking the direction with the
// smaller code sequence makes the cycle orientation choice canonical: a
// tie means the two directions are genuinely symmetric.
struct CactusCanon {
    FanStructure& fs;

    std::string vertex_code(int v) {
        std::vector<std::string> parts;
        for (int b : fs.children[static_cast<std::size_t>(v)]) parts.push_back(block_code(b));
        std::sort(parts.begin(), parts.end());
        std::string out = "(";
        for (auto& p : parts) out += p;
        out += ")";
        return out;
    }

    std::string block_code(int bi) {
        FanBlock& blk = fs.blocks[static_cast<std::size_t>(bi)];
        if (blk.bridge) return "[e" + vertex_code(blk.bridge_other) + "]";
        std::vector<std::string> item(blk.path.size());
        for (std::size_t i = 0; i < blk.path.size(); ++i)
            item[i] = std::string("{") + (blk.chord[i] ? "1" : "0") + vertex_code(blk.path[i]) + "}";
        std::string fwd, bwd;
        for (std::size_t i = 0; i < item.size(); ++i) fwd += item[i];
        for (std::size_t i = item.size(); i-- > 0;) bwd += item[i];
        if (bwd < fwd) {
            std::reverse(blk.path.begin(), blk.path.end());
            std::reverse(blk.chord.begin(), blk.chord.end());
            return "[c" + bwd + "]";
        }
        return "[c" + fwd + "]";
    }
};

}  // namespace

TreeDecomposition canonical_tree_decomposition(const Graph& g, int root) {
    FanStructure fs(g, root);
    CactusCanon canon{fs};
    canon.vertex_code(root);  // fixes every cycle's orientation

    TreeDecomposition td;
    td.tree = Graph(0);
    auto add_node = [&](std::vector<int> bag, TreeDecomposition::Gadget kind) {
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(std::move(bag));
        td.kinds.push_back(kind);
        return td.tree.add_vertex();
    };

    std::vector<int> node_gadget(static_cast<std::size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v)
        node_gadget[static_cast<std::size_t>(v)] = add_node({v}, TreeDecomposition::Gadget::Node);
    td.root = node_gadget[static_cast<std::size_t>(root)];

    for (const auto& blk : fs.blocks) {
        if (blk.bridge) {
            const int t = add_node({blk.root, blk.bridge_other}, TreeDecomposition::Gadget::TreeEdge);
            td.tree.add_edge(t, node_gadget[static_cast<std::size_t>(blk.root)]);
            td.tree.add_edge(t, node_gadget[static_cast<std::size_t>(blk.bridge_other)]);
            continue;
        }
        // Cycle gadget: bags {v0,v1}, {v0,v1,v2}, {v0,v2}, ..., {v0,v_{L-1}}
        // chained in a path; node gadgets attach at their 2-bags (v0 and v1
        // both at the first bag).
        const int v0 = blk.root;
        const auto& cyc = blk.path;  // v_1 .. v_{L-1}
        int prev = -1;
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            const int two_bag = add_node({v0, cyc[j]}, TreeDecomposition::Gadget::Cycle);
            if (prev >= 0) td.tree.add_edge(prev, two_bag);
            if (j == 0) {
                td.tree.add_edge(two_bag, node_gadget[static_cast<std::size_t>(v0)]);
                td.tree.add_edge(two_bag, node_gadget[static_cast<std::size_t>(cyc[j])]);
            } else {
                td.tree.add_edge(two_bag, node_gadget[static_cast<std::size_t>(cyc[j])]);
            }
            if (j + 1 < cyc.size()) {
                const int three_bag =
                    add_node({v0, cyc[j], cyc[j + 1]}, TreeDecomposition::Gadget::Cycle);
                td.tree.add_edge(two_bag, three_bag);
                prev = three_bag;
            }
        }
    }
    return td;
}

TdValidation validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    const int tn = td.tree.num_vertices();
    if (tn != static_cast<int>(td.bags.size()))
        return {false, "structural: bag count does not match tree size"};
    if (tn == 0) return {false, "structural: empty decomposition"};
    if (td.tree.num_edges() != tn - 1 || !is_connected(td.tree))
        return {false, "structural: decomposition graph is not a tree"};

    for (int t = 0; t < tn; ++t) {
        const auto& bag = td.bags[static_cast<std::size_t>(t)];
        if (bag.empty()) return {false, "condition 1: empty bag at tree node " + std::to_string(t)};
        for (int v : bag)
            if (v < 0 || v >= g.num_vertices())
                return {false, "condition 1: bag at tree node " + std::to_string(t) +
                                   " mentions unknown vertex " + std::to_string(v)};
    }

    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& bag : td.bags)
            if (std::binary_search(bag.begin(), bag.end(), u) &&
                std::binary_search(bag.begin(), bag.end(), v)) {
                covered = true;
                break;
            }
        if (!covered)
            return {false, "condition 2: edge {" + std::to_string(u) + "," + std::to_string(v) +
                               "} not inside any bag"};
    }

    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<char> holds(static_cast<std::size_t>(tn), 0);
        int count = 0, start = -1;
        for (int t = 0; t < tn; ++t)
            if (std::binary_search(td.bags[static_cast<std::size_t>(t)].begin(),
                                   td.bags[static_cast<std::size_t>(t)].end(), v)) {
                holds[static_cast<std::size_t>(t)] = 1;
                ++count;
                start = t;
            }
        if (count == 0)
            return {false, "condition 3: vertex " + std::to_string(v) + " appears in no bag"};
        // BFS restricted to holding nodes must reach all of them.
        std::vector<int> stack{start};
        std::vector<char> seen(static_cast<std::size_t>(tn), 0);
        seen[static_cast<std::size_t>(start)] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            for (int u : td.tree.neighbors(t))
                if (holds[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached != count)
            return {false, "condition 3: bags of vertex " + std::to_string(v) +
                               " do not form a connected subtree"};
    }
    return {};
}

int td_depth(const TreeDecomposition& td) {
    const int tn = td.tree.num_vertices();
    if (tn == 0) return 0;
    std::vector<int> depth(static_cast<std::size_t>(tn), -1);
    depth[static_cast<std::size_t>(td.root)] = 0;
    std::vector<int> stack{td.root};
    int best = 0;
    while (!stack.empty()) {
        const int t = stack.back();
        stack.pop_back();
        for (int u : td.tree.neighbors(t)) {
            if (depth[static_cast<std::size_t>(u)] >= 0) continue;
            const bool step = td.bags[static_cast<std::size_t>(u)].size() == 1 ||
                              td.bags[static_cast<std::size_t>(t)].size() == 1;
            depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(t)] + (step ? 1 : 0);
            best = std::max(best, depth[static_cast<std::size_t>(u)]);
            stack.push_back(u);
        }
    }
    return best;
}

std::string td_canonical_code(const TreeDecomposition& td, const Graph& g) {
    auto label = [&](int t) {
        const auto& bag = td.bags[static_cast<std::size_t>(t)];
        int inner = 0;
        for (std::size_t i = 0; i < bag.size(); ++i)
            for (std::size_t j = i + 1; j < bag.size(); ++j)
                if (g.has_edge(bag[i], bag[j])) ++inner;
        const char kind = td.kinds[static_cast<std::size_t>(t)] == TreeDecomposition::Gadget::Node ? 'n'
                          : td.kinds[static_cast<std::size_t>(t)] == TreeDecomposition::Gadget::TreeEdge
                              ? 'e'
                              : 'c';
        return std::string(1, kind) + std::to_string(bag.size()) + "." + std::to_string(inner);
    };
    // AHU encoding from the root.
    auto encode = [&](auto&& self, int t, int parent) -> std::string {
        std::vector<std::string> child;
        for (int u : td.tree.neighbors(t))
            if (u != parent) child.push_back(self(self, u, t));
        std::sort(child.begin(), child.end());
        std::string out = "(" + label(t);
        for (auto& c : child) out += c;
        out += ")";
        return out;
    };
    return encode(encode, td.root, -1);
}

}  // namespace lwl
