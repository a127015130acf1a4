#include "lwl/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace lwl {

namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;
constexpr int kG6MaxN = 258047;  // largest size expressible in the 4-byte form

std::string at_pos(std::size_t i) { return " at byte " + std::to_string(i); }

}  // namespace

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("graph size must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= num_vertices())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(num_vertices()) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected: " + std::to_string(u));
    auto& au = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;  // already present
    au.insert(it, v);
    auto& av = adj_[static_cast<std::size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
}

int Graph::add_vertex() {
    adj_.emplace_back();
    return num_vertices() - 1;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& au = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool VertexPermutation::is_valid() const {
    std::vector<int> image = sigma;
    std::sort(image.begin(), image.end());
    for (int i = 0; i < static_cast<int>(image.size()); ++i)
        if (image[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

VertexPermutation VertexPermutation::inverse() const {
    VertexPermutation inv;
    inv.sigma.resize(sigma.size());
    for (int i = 0; i < size(); ++i) inv.sigma[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
    return inv;
}

VertexPermutation VertexPermutation::identity(int n) {
    VertexPermutation p;
    p.sigma.resize(static_cast<std::size_t>(n));
    std::iota(p.sigma.begin(), p.sigma.end(), 0);
    return p;
}

Graph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.starts_with(header)) line.remove_prefix(header.size());
    if (line.empty()) throw ParseError("graph6: empty record");

    for (std::size_t i = 0; i < line.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < kG6Lo || c > kG6Hi)
            throw ParseError("graph6: character " + std::to_string(int(c)) +
                             " outside 63..126" + at_pos(i));
    }

    std::size_t pos = 0;
    long long n = 0;
    if (line[0] == 126) {
        if (line.size() >= 2 && line[1] == 126)
            throw ParseError("graph6: 8-byte size form (n >= 258048) not supported");
        if (line.size() < 4) throw ParseError("graph6: truncated length prefix");
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - kG6Lo);
        if (n < kG6Lo)
            throw ParseError("graph6: non-canonical length prefix (n=" + std::to_string(n) +
                             " should use the 1-byte form)");
        pos = 4;
    } else {
        n = line[0] - kG6Lo;
        pos = 1;
    }

    const long long bits = n * (n - 1) / 2;
    const std::size_t want = static_cast<std::size_t>((bits + 5) / 6);
    const std::size_t have = line.size() - pos;
    if (have < want)
        throw ParseError("graph6: truncated record, expected " + std::to_string(want) +
                         " data bytes, got " + std::to_string(have));
    if (have > want)
        throw ParseError("graph6: trailing data" + at_pos(pos + want));

    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            const std::size_t byte = pos + static_cast<std::size_t>(bit / 6);
            const int shift = 5 - static_cast<int>(bit % 6);
            if ((line[byte] - kG6Lo) >> shift & 1) g.add_edge(row, col);
        }
    }
    // Padding must be zero to make the encoding unique.
    if (bits % 6 != 0 && want > 0) {
        const std::size_t last = pos + want - 1;
        const int pad = static_cast<int>(6 - bits % 6);
        if ((line[last] - kG6Lo) & ((1 << pad) - 1))
            throw ParseError("graph6: nonzero padding bits" + at_pos(last));
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.num_vertices();
    if (n > kG6MaxN)
        throw std::invalid_argument("graph6: n > 258047 not supported");
    std::string out;
    if (n < kG6Lo) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Lo));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string linebuf;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, linebuf)) {
        ++lineno;
        auto hash = linebuf.find('#');
        if (hash != std::string::npos) linebuf.erase(hash);
        std::istringstream ls(linebuf);
        int a, b;
        if (!(ls >> a)) continue;  // blank / comment-only line
        if (!(ls >> b))
            throw ParseError("edge list: expected two integers on line " + std::to_string(lineno));
        if (n < 0) {
            n = a;
            m = b;
        } else {
            edges.emplace_back(a, b);
        }
    }
    if (n < 0) throw ParseError("edge list: missing \"n m\" header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("edge list: header announced " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    try {
        return Graph::from_edges(n, edges);
    } catch (const std::exception& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<Graph> parse_graph6_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Graph> out;
    std::string token;
    std::size_t record = 0;
    while (in >> token) {
        ++record;
        try {
            out.push_back(parse_graph6(token));
        } catch (const ParseError& e) {
            throw ParseError("record " + std::to_string(record) + ": " + e.what());
        }
    }
    return out;
}

std::vector<Graph> load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (path.ends_with(".g6") || text.starts_with(">>graph6<<"))
        return parse_graph6_file(text);
    return {parse_edge_list(text)};
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.num_vertices() + h.num_vertices());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    const int off = g.num_vertices();
    for (auto [u, v] : h.edges()) out.add_edge(u + off, v + off);
    return out;
}

Graph induced_subgraph(const Graph& g, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> relabel(static_cast<std::size_t>(g.num_vertices()), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        int v = keep[static_cast<std::size_t>(i)];
        if (v < 0 || v >= g.num_vertices())
            throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        relabel[static_cast<std::size_t>(v)] = i;
    }
    Graph out(static_cast<int>(keep.size()));
    for (int v : keep)
        for (int u : g.neighbors(v))
            if (u > v && relabel[static_cast<std::size_t>(u)] >= 0)
                out.add_edge(relabel[static_cast<std::size_t>(v)], relabel[static_cast<std::size_t>(u)]);
    return out;
}

Graph permute(const Graph& g, const VertexPermutation& p) {
    if (p.size() != g.num_vertices())
        throw std::invalid_argument("permute: permutation size " + std::to_string(p.size()) +
                                    " != graph size " + std::to_string(g.num_vertices()));
    if (!p.is_valid()) throw std::invalid_argument("permute: not a bijection on 0..n-1");
    Graph out(g.num_vertices());
    for (auto [u, v] : g.edges())
        out.add_edge(p.sigma[static_cast<std::size_t>(u)], p.sigma[static_cast<std::size_t>(v)]);
    return out;
}

std::vector<std::vector<std::pair<int, int>>> biconnected_components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<std::vector<std::pair<int, int>>> blocks;
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    // Iterative DFS; frames keep a neighbor cursor so the stack mirrors the
    // recursive version exactly.
    struct Frame {
        int v;
        int parent;
        std::size_t next;
    };
    std::vector<Frame> stack;

    auto pop_block = [&](int u, int v) {
        std::vector<std::pair<int, int>> blk;
        while (!edge_stack.empty()) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            blk.push_back(e);
            if (e == std::make_pair(std::min(u, v), std::max(u, v))) break;
        }
        if (!blk.empty()) blocks.push_back(std::move(blk));
    };

    for (int start = 0; start < n; ++start) {
        if (disc[static_cast<std::size_t>(start)] != -1) continue;
        stack.push_back({start, -1, 0});
        disc[static_cast<std::size_t>(start)] = low[static_cast<std::size_t>(start)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    edge_stack.emplace_back(std::min(f.v, w), std::max(f.v, w));
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
                    edge_stack.emplace_back(std::min(f.v, w), std::max(f.v, w));
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                int v = f.v, parent = f.parent;
                stack.pop_back();
                if (parent >= 0) {
                    low[static_cast<std::size_t>(parent)] =
                        std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
                    if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(parent)])
                        pop_block(parent, v);
                }
            }
        }
    }
    return blocks;
}

int num_components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++comps;
        queue.assign(1, s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int u : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    queue.push_back(u);
                }
        }
    }
    return comps;
}

bool is_connected(const Graph& g) { return g.num_vertices() <= 1 || num_components(g) == 1; }

}  // namespace lwl
